"""
Curve algebra
=============

Products with a clique, doubling, and unions act on capacity curves.
Starting from exact clique-union curves, every transform can be compared
against the closed form of the resulting union.
"""

from __future__ import annotations

import numpy as np

from rhocap.cliqueunion import CliqueUnion, capacity_array
from rhocap.curves import double_union, exact_curve, product_with_clique, sup_convolution, union_with_clique


def worst(curve, sizes):
    probe = np.linspace(0, curve.log_m, 2001)
    return np.max(np.abs(curve(probe) - capacity_array(CliqueUnion.of(sizes), probe)))


base = exact_curve(CliqueUnion.of([1, 2]))

x = product_with_clique(base, 2)
print(f"(K1+K2) x K2 vs {{2,4}}:        max error {worst(x, [2, 4]):.1e}, value at 1.6 = {x(1.6):.6f}")

d = double_union(base)
print(f"(K1+K2) + (K1+K2) vs {{1,1,2,2}}: max error {worst(d, [1, 1, 2, 2]):.1e}, value at 0.6 = {d(0.6):.6f}")

s = sup_convolution(base, base)
print(f"sup-convolution vs {{1,2,2,4}}:  max error {worst(s, [1, 2, 2, 4]):.1e}")

# Adding a clique to a graph: the optimum over the time-sharing split is
# found numerically, so the error shrinks as the grid is refined.
k1 = exact_curve(CliqueUnion.of([1]))
for n in (129, 513, 2049):
    u = union_with_clique(k1, 1, 2, n=n)
    print(f"K1 + K2 from the K1 curve, grid {n:5d}: max error {worst(u, [1, 2]):.1e}")
