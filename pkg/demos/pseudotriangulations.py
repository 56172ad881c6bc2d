"""Pointed pseudotriangulations of a random point set, read off the 1-kernel of its dual."""

import random
from fractions import Fraction

from pseudolines.enumeration import iter_greedy_flip
from pseudolines.geometry import (corner_count, dual_network, k_depth, primal_edges,
                                  pseudotriangulations_bruteforce, random_points, stars, winding_number)
from pseudolines.network import kernel

rng = random.Random(7)
ps = random_points(6, rng, 40)
print("points:", [(int(x), int(y)) for x, y in ps.points])

d = dual_network(ps)
kr = kernel(d.net, 1)
images = {frozenset(primal_edges(d, a, 1).edges) for a in iter_greedy_flip(kr.net, kr.forced)}
direct = pseudotriangulations_bruteforce(ps)
print(f"from arrangements: {len(images)}, by direct search: {len(direct)}, equal: {images == direct}")

print("\n2-pseudotriangulations of seven points:")
ps = random_points(7, rng, 40)
d = dual_network(ps)
kr = kernel(d.net, 2)
arr = next(iter_greedy_flip(kr.net, kr.forced))
print("edges:", sorted(primal_edges(d, arr, 2).edges))
st = stars(d, arr, 2)
for w, s in st.items():
    print(f"  star of pseudoline {w}: polygon {s.polygon()}, {corner_count(s)} corners")
q = (sum(p[0] for p in ps.points) / 7 + Fraction(1, 77), sum(p[1] for p in ps.points) / 7 + Fraction(1, 91))
print("at the centroid: sum of winding numbers =", sum(winding_number(s, ps, q) for s in st.values()),
      " 2-depth =", k_depth(ps, 2, q))
