"""
The pentagon
============

C5 is the smallest graph whose rho-capacity is not known in closed form.
This walk-through collects everything the package can certify about it.
"""

from __future__ import annotations

import math

import numpy as np

from rhocap import build_cycle, strong_power
from rhocap.bounds import aggregate
from rhocap.independence import VertexFamily, alpha, alpha_k, is_independent_family
from rhocap.spectral import lovasz_baseline, regular_upper_bound, smallest_eigenvalue, solve_p, validity_interval

c5 = build_cycle(5)
print(f"alpha(C5) = {alpha(c5)}, alpha_2(C5) = {alpha_k(c5, 2)}")

# Squaring helps: five independent vertices in C5 x C5 beat 2^2.
c25 = strong_power(c5, 2)
print(f"alpha(C5^2) = {alpha(c25)}")

# A family of four 2-element subsets of C5^2, pairwise non-adjacent.
# Read as a code over two channel uses it sends one extra bit per use
# to the noiseless receiver (rho = 1/2) at rate 1 to the noisy one.
pairs = [[(4, 5), (5, 5)], [(2, 1), (2, 5)], [(1, 3), (2, 3)], [(4, 2), (4, 3)]]
fam = VertexFamily.of([[(a - 1) * 5 + (b - 1) for a, b in s] for s in pairs], t=2)
print("family of four pairs independent:", bool(is_independent_family(c25, fam)))

# Spectral side: C5 is 2-regular with smallest eigenvalue -golden ratio.
mu = smallest_eigenvalue(c5)
lo, hi = validity_interval(c5)
print(f"mu = {mu:.10f}, baseline = {lovasz_baseline(c5):.6f} bits")
print(f"window for the sharper bound: ({lo:.6f}, {hi:.6f})")
sol = solve_p(c5, 1.0)
print(f"rho = 1: p = {sol.p:.6f}, bound {regular_upper_bound(c5, 1.0):.6f} vs trivial {math.log2(5) - 1:.6f}")

# Everything at once: certified lower and upper curves.
prof = aggregate(c5)
print("\n  rho    lower   upper")
for r in np.linspace(0, math.log2(5), 9):
    print(f"{r:6.3f}  {prof.lower(r):6.4f}  {prof.upper(r):6.4f}")
print("certificates:", sorted({c.theorem for c in prof.certificates}))
