"""Counting multitriangulations, beam diagrams and a 2-triangulation with no triangulation inside."""

from pseudolines.combinatorics import beam_report, beams, det_catalan, zigzag_two_triangulation
from pseudolines.enumeration import enumerate_greedy_flip, find_sub_arrangement
from pseudolines.geometry import convex_position, dual_network, primal_edges
from pseudolines.multi import greedy_multi
from pseudolines.network import kernel

print("n  k  enumerated  determinant")
for n, k in [(6, 1), (8, 2), (9, 2), (9, 3)]:
    kr = kernel(dual_network(convex_position(n)).net, k)
    print(f"{n:<2} {k}  {enumerate_greedy_flip(kr.net, kr.forced):<10}  {det_catalan(n, k)}")

d = dual_network(convex_position(8))
t = primal_edges(d, greedy_multi(d.net, 2), 2).edges
diagram = beams(8, 2, t)
print("\ngreedy 2-triangulation of the octagon:", sorted(t))
for b in diagram.beams:
    print(f"  beam {b.index}: {b.points}")
print("checks:", beam_report(diagram))

edges = zigzag_two_triangulation()
d = dual_network(convex_position(15))
k1 = kernel(d.net, 1)
found = find_sub_arrangement(k1.net, [v for v in k1.net.ids if d.pairs[v] in edges])
print(f"\nzigzag 2-triangulation of the 15-gon: {len(edges)} edges, "
      f"contains a triangulation: {found is not None}")
