"""Compare the greedy k-pseudotriangulation with the horizon sets of the ambient arrangement."""

import random

from pseudolines.geometry import convex_position, dual_network, random_points
from pseudolines.multi import greedy_multi, horizon_check, horizon_sets, multi_context

for label, ps in [("convex heptagon", convex_position(7)), ("random 7 points", random_points(7, random.Random(3)))]:
    net = dual_network(ps).net
    for k in (1, 2):
        hs = horizon_sets(net, k)
        g = greedy_multi(net, k)
        ctx = multi_context(net, k)
        print(f"{label}, k={k}: |upper|={len(hs.upper)} |lower|={len(hs.lower)} "
              f"|combined|={len(hs.combined)} greedy contacts+peeled={len(g.contacts | ctx.removed)} "
              f"agree={horizon_check(net, k)}")
