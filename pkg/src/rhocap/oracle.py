"""Independent ground truth at desk scale.

The clique-union sums are exact integers. ``G^n`` for ``G`` a union of
cliques of sizes ``m_1..m_s`` is again a union of cliques: one clique per
index tuple, of size ``prod m_j^{i_j}``, repeated ``multinomial(n; i)`` times.
Cliques at least ``2^{rho n}`` large each host one subset (``B``); the rest
can only pool their vertices (``A``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .cliqueunion import CliqueUnion, capacity, free_lunch_point, packing_point
from .errors import CapExceeded, InputError, VerificationError
from .graph import Graph, build_clique_union, strong_power
from .independence import DEFAULT_TIMEOUT_S, VertexFamily, alpha_k, is_independent_family

POWER_VERTEX_CAP = 64
MAX_SUM_POWER = 512
MAX_TERMS = 2_000_000
TIE_TOL = 1e-12


def alpha_k_power(g: Graph, n: int, k: int, cap: int = POWER_VERTEX_CAP, timeout_s: float | None = DEFAULT_TIMEOUT_S) -> int:
    if g.n**n > cap:
        raise CapExceeded(f"G^{n} has {g.n**n} vertices (cap {cap})")
    return alpha_k(strong_power(g, n), k, timeout_s)


def threshold_k(n: int, rho: float) -> int:
    """Smallest admissible subset size: ``ceil(2^(rho n))`` with ties resolved downward."""
    return max(1, math.ceil(2.0 ** (rho * n - TIE_TOL)))


@dataclass(frozen=True)
class MultinomialSums:
    n: int
    rho: float
    A_numerator: int
    B: int
    total: int

    @property
    def rate_A(self) -> float:
        if self.A_numerator == 0:
            return -math.inf
        return (math.log2(self.A_numerator) - self.rho * self.n) / self.n

    @property
    def rate_B(self) -> float:
        return math.log2(self.B) / self.n if self.B else -math.inf


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def multinomial_sums(cu: CliqueUnion, n: int, rho: float) -> MultinomialSums:
    """Exact ``A`` numerator and ``B`` for ``cu`` at power ``n``.

    Tuples with ``sum i_j log m_j`` within ``1e-12`` of ``rho n`` count in
    both sums.
    """
    if not 1 <= n <= MAX_SUM_POWER:
        raise InputError(f"n must lie in [1, {MAX_SUM_POWER}]")
    if not -TIE_TOL <= rho <= cu.log_m + TIE_TOL:
        raise InputError("rho outside [0, log m]")
    groups: dict[int, int] = {}
    for x in cu.sizes:
        groups[x] = groups.get(x, 0) + 1
    sizes = sorted(groups)
    counts = [groups[x] for x in sizes]
    logs = [math.log2(x) for x in sizes]
    r = len(sizes)
    if math.comb(n + r - 1, r - 1) > MAX_TERMS:
        raise CapExceeded("too many size compositions to enumerate")
    fact = [1] * (n + 1)
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    target = rho * n
    A = B = total = 0
    for comp in _compositions(n, r):
        mult = fact[n]
        for j in comp:
            mult //= fact[j]
        cliques = mult
        for c, j in zip(counts, comp):
            cliques *= c**j
        size = 1
        for x, j in zip(sizes, comp):
            size *= x**j
        mass = cliques * size
        total += mass
        s = sum(j * lg for j, lg in zip(comp, logs))
        if s <= target + TIE_TOL:
            A += mass
        if s >= target - TIE_TOL:
            B += cliques
    return MultinomialSums(n, rho, A, B, total)


@dataclass(frozen=True)
class RatePoint:
    n: int
    rate_A: float
    rate_B: float
    gap: float


def rate_convergence(cu: CliqueUnion, rho: float, n_list: Iterable[int]) -> list[RatePoint]:
    """Growth rates of the exact sums against the closed form."""
    if cu.uniform:
        raise InputError("all clique sizes are equal")
    lo, hi = free_lunch_point(cu), packing_point(cu)
    if not lo - TIE_TOL <= rho <= hi + TIE_TOL:
        raise InputError(f"rho={rho} outside the corner interval [{lo}, {hi}]")
    exact = capacity(cu, rho)
    out = []
    for n in n_list:
        s = multinomial_sums(cu, n, rho)
        out.append(RatePoint(n, s.rate_A, s.rate_B, abs(s.rate_B - exact)))
    return out


@dataclass(frozen=True)
class SandwichReport:
    n: int
    rho: float
    k: int
    B: int
    alpha_k: int
    upper: int
    ok: bool

    def __bool__(self) -> bool:
        return self.ok


def sandwich_check(
    cu: CliqueUnion, n: int, rho: float, cap: int = POWER_VERTEX_CAP, timeout_s: float | None = DEFAULT_TIMEOUT_S
) -> SandwichReport:
    """``B <= alpha_k(G^n) <= floor(A_num / 2^(rho n)) + B`` with ``k = ceil(2^(rho n))``."""
    g = build_clique_union(cu.sizes)
    k = threshold_k(n, rho)
    if k > cu.m**n:
        raise InputError("threshold exceeds the vertex count")
    sums = multinomial_sums(cu, n, rho)
    a = alpha_k_power(g, n, k, cap, timeout_s)
    upper = math.floor(sums.A_numerator / 2.0 ** (rho * n)) + sums.B
    return SandwichReport(n, rho, k, sums.B, a, upper, sums.B <= a <= upper)


@dataclass(frozen=True)
class BroadcastCode:
    """A verified independent family of ``G^n`` read as a superposition code.

    The subset index is the message for the noisy receiver, the element within
    the subset carries the extra message for the noiseless one.
    """

    graph: Graph
    n: int
    family: VertexFamily
    rho: float
    R: float


def verify_broadcast_code(g: Graph, n: int, family: VertexFamily, cap: int = 10**6) -> BroadcastCode:
    if len(family) == 0:
        raise VerificationError("empty family")
    if any(len(s) == 0 for s in family.subsets):
        raise VerificationError("family contains an empty subset")
    power = strong_power(g, n, cap) if n > 1 else g
    report = is_independent_family(power, family)
    if not report:
        raise VerificationError(report.reason, report.pair)
    rho = math.log2(min(family.sizes)) / n
    R = math.log2(len(family)) / n
    return BroadcastCode(g, n, family, rho, R)
