"""Walk through the greedy-flip enumeration on a few small supports."""

from pseudolines import Network
from pseudolines.arrangement import greedy
from pseudolines.enumeration import EnumerationStats, build_flip_graph, enumerate_greedy_flip, graph_stats
from pseudolines.geometry import convex_position, dual_network
from pseudolines.network import kernel
from pseudolines.render import wiring_ascii

print("Two pseudolines touching three times (four comparators on one slot pair):")
net = Network.from_levels(2, [1, 1, 1, 1])
g = greedy(net)
print(wiring_ascii(net, g))
stats = EnumerationStats()
print("arrangements:", enumerate_greedy_flip(net, stats=stats), "peak stack:", stats.peak_stack)
print("flip graph edges:", sorted(build_flip_graph(net).edges))

print("\nDual of five points in convex position, first level peeled:")
kr = kernel(dual_network(convex_position(5)).net, 1)
print(wiring_ascii(kr.net, greedy(kr.net)))
print("arrangements (triangulations of the pentagon):", enumerate_greedy_flip(kr.net))

for n, k in [(8, 2), (9, 2)]:
    kr = kernel(dual_network(convex_position(n)).net, k)
    st = graph_stats(build_flip_graph(kr.net, kr.forced))
    print(f"n={n} k={k}: {st.vertex_count} arrangements, degrees {st.degree_histogram}, "
          f"connected={st.connected}, diameter={st.diameter}")
