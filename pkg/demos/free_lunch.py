"""
Free lunch and packing
======================

Below the free-lunch point the noiseless receiver gets its extra rate at no
cost to the noisy one. Above the packing point the sum rate log m is no
longer reachable. Both points come out of independent families and of the
component structure.
"""

from __future__ import annotations

import math

from rhocap import Graph
from rhocap.bounds import aggregate, free_lunch_lower, packing_point_exact
from rhocap.graph import build_clique_union, build_cycle
from rhocap.independence import VertexFamily

# A pentagon with one chord: vertex 2 alone and the pair {4,5} form a
# family of two mutually non-adjacent subsets, and two is as large as any.
g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (0, 4)])
fam = VertexFamily.of([[1], [3, 4]])
print(f"pentagon with a chord: free-lunch point >= {free_lunch_lower(g, fam, c0_upper=1.0)}")
print(f"  found automatically: {aggregate(g).free_lunch_lower}")

# A complete bipartite K_{m,n} with the edges from vertex m+1 to 2..m removed.
for m, n in [(3, 2), (5, 3)]:
    edges = [(i, m + j) for i in range(m) for j in range(n) if not (j == 0 and i >= 1)]
    h = Graph.from_edges(m + n, edges)
    fam = VertexFamily.of([[0, m]] + [[i] for i in range(1, m)])
    print(f"K_{{{m},{n}}} minus edges: free-lunch point >= {free_lunch_lower(h, fam, c0_upper=math.log2(m)):.4f}")

# Packing points depend only on component sizes.
for name, graph in [("C5", build_cycle(5)), ("K1+K2", build_clique_union([1, 2])),
                    ("12 K2 + 6 K8", build_clique_union([2] * 12 + [8] * 6))]:
    print(f"packing point of {name:12s} = {packing_point_exact(graph):.6f}  (log m = {math.log2(graph.n):.6f})")
