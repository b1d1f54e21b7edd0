"""Exact rho-capacity of disjoint unions of cliques, and the bounds built on it.

For ``G = K_{m_1} + ... + K_{m_s}`` with ``m = sum m_i`` (all logs base 2)::

    C_rho(G) = log s                         for rho <= (1/s) sum log m_i
             = log(sum m_i^b) - b * rho      in between
             = log m - rho                   for rho >= (1/m) sum m_i log m_i

where ``b`` in ``[0, 1]`` solves ``rho = sum m_i^b log m_i / sum m_i^b``.
The same expression, applied to the subset sizes of an independent family
or of a clique cover, gives lower and upper bounds for any graph.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

BETA_TOL = 1e-12
BETA_MAX_ITER = 200
DOMAIN_TOL = 1e-12


@dataclass(frozen=True)
class CliqueUnion:
    """Multiset of clique sizes, stored ascending."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes:
            raise InputError("a clique union needs at least one clique")
        if any(int(x) != x or x < 1 for x in self.sizes):
            raise InputError(f"clique sizes must be positive integers, got {self.sizes}")
        object.__setattr__(self, "sizes", tuple(sorted(int(x) for x in self.sizes)))

    @classmethod
    def of(cls, sizes: Iterable[int]) -> "CliqueUnion":
        return cls(tuple(sizes))

    @property
    def s(self) -> int:
        return len(self.sizes)

    @property
    def m(self) -> int:
        return sum(self.sizes)

    @property
    def log_m(self) -> float:
        return math.log2(self.m)

    @property
    def uniform(self) -> bool:
        return len(set(self.sizes)) == 1

    @property
    def log_sizes(self) -> np.ndarray:
        return np.log2(np.asarray(self.sizes, dtype=float))

    def __str__(self) -> str:
        return "U:" + ",".join(map(str, self.sizes))


@dataclass(frozen=True)
class BetaSolution:
    rho: float
    beta: float
    value: float


# -- entropies ---------------------------------------------------------------


def binary_entropy(p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise InputError(f"p={p} outside [0, 1]")
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def binary_kl(q: float, p: float) -> float:
    """``D(q || p)`` in bits between Bernoulli(q) and Bernoulli(p)."""
    if not (0.0 <= q <= 1.0 and 0.0 <= p <= 1.0):
        raise InputError("binary_kl arguments must lie in [0, 1]")
    if p in (0.0, 1.0):
        if q == p:
            return 0.0
        raise InputError(f"D({q} || {p}) is infinite")
    out = 0.0
    if q > 0:
        out += q * math.log2(q / p)
    if q < 1:
        out += (1 - q) * math.log2((1 - q) / (1 - p))
    return out


def renyi_entropy(probs: Sequence[float], beta: float) -> float:
    """Renyi entropy of order ``beta`` in bits; Shannon entropy at ``beta = 1``."""
    p = np.asarray(probs, dtype=float)
    if beta < 0:
        raise InputError("Renyi order must be >= 0")
    if np.any(p < 0) or abs(p.sum() - 1.0) > 1e-12:
        raise InputError("not a probability distribution")
    p = p[p > 0]
    if abs(beta - 1.0) < 1e-9:
        return float(-(p * np.log2(p)).sum())
    return float(np.log2((p**beta).sum()) / (1.0 - beta))


# -- corner points -------------------------------------------------------------


def free_lunch_point(cu: CliqueUnion) -> float:
    return float(cu.log_sizes.mean())


def packing_point(cu: CliqueUnion) -> float:
    sizes = np.asarray(cu.sizes, dtype=float)
    return float((sizes * np.log2(sizes)).sum() / sizes.sum())


def _log2_power_sum(log_sizes: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """``log2(sum_i m_i^beta)`` for each beta, computed stably."""
    z = np.outer(beta, log_sizes)
    zmax = z.max(axis=1, keepdims=True)
    return (zmax + np.log2(np.exp2(z - zmax).sum(axis=1, keepdims=True)))[:, 0]


def tilted_mean(cu: CliqueUnion, beta) -> np.ndarray:
    """``sum m_i^beta log m_i / sum m_i^beta``; strictly increasing in beta."""
    ls = cu.log_sizes
    b = np.atleast_1d(np.asarray(beta, dtype=float))
    z = np.outer(b, ls)
    w = np.exp2(z - z.max(axis=1, keepdims=True))
    return (w @ ls) / w.sum(axis=1)


def _solve_betas(cu: CliqueUnion, rhos: np.ndarray) -> np.ndarray:
    """Vectorised bisection; every rho must already lie in the corner interval."""
    lo = np.zeros_like(rhos)
    hi = np.ones_like(rhos)
    for _ in range(BETA_MAX_ITER):
        mid = 0.5 * (lo + hi)
        above = tilted_mean(cu, mid) > rhos
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
        if np.max(hi - lo) < BETA_TOL:
            break
    return 0.5 * (lo + hi)


def _check_rho(cu: CliqueUnion, rho: float) -> float:
    if not -DOMAIN_TOL <= rho <= cu.log_m + DOMAIN_TOL:
        raise InputError(f"rho={rho} outside [0, log m = {cu.log_m}]")
    return min(max(rho, 0.0), cu.log_m)


def beta_for_rho(cu: CliqueUnion, rho: float) -> BetaSolution:
    """Exponent whose tilted mean of ``log m_i`` equals ``rho``."""
    if cu.uniform:
        raise InputError("all clique sizes are equal; beta is not determined")
    lo_rho, hi_rho = free_lunch_point(cu), packing_point(cu)
    if not lo_rho - DOMAIN_TOL <= rho <= hi_rho + DOMAIN_TOL:
        raise InputError(f"rho={rho} outside the corner interval [{lo_rho}, {hi_rho}]")
    if rho <= lo_rho:
        beta = 0.0
    elif rho >= hi_rho:
        beta = 1.0
    else:
        beta = float(_solve_betas(cu, np.array([rho]))[0])
    value = float(_log2_power_sum(cu.log_sizes, np.array([beta]))[0] - beta * rho)
    return BetaSolution(rho, beta, value)


def capacity_array(cu: CliqueUnion, rhos) -> np.ndarray:
    """Exact ``C_rho`` at many points at once."""
    r = np.asarray(rhos, dtype=float)
    if np.any(r < -DOMAIN_TOL) or np.any(r > cu.log_m + DOMAIN_TOL):
        raise InputError("rho outside [0, log m]")
    r = np.clip(r, 0.0, cu.log_m)
    log_s, log_m = math.log2(cu.s), cu.log_m
    if cu.uniform:
        return np.minimum(log_s, log_m - r)
    lo_rho, hi_rho = free_lunch_point(cu), packing_point(cu)
    out = np.where(r <= lo_rho, log_s, log_m - r)
    mid = (r > lo_rho) & (r < hi_rho)
    if mid.any():
        rm = r[mid]
        b = _solve_betas(cu, rm)
        out[mid] = _log2_power_sum(cu.log_sizes, b) - b * rm
    return out


def capacity(cu: CliqueUnion, rho: float) -> float:
    rho = _check_rho(cu, rho)
    return float(capacity_array(cu, [rho])[0])


def conjugate(cu: CliqueUnion, gamma: float) -> float:
    """Concave conjugate ``inf_rho gamma*rho - C_rho`` in closed form."""
    if not -1.0 <= gamma <= 0.0:
        raise InputError("gamma must lie in [-1, 0]")
    return float(-_log2_power_sum(cu.log_sizes, np.array([-gamma]))[0])


def derivative(cu: CliqueUnion, rho: float) -> float:
    if cu.uniform:
        raise InputError("all clique sizes are equal; the curve has a kink, not a derivative")
    rho = _check_rho(cu, rho)
    lo_rho, hi_rho = free_lunch_point(cu), packing_point(cu)
    if rho <= lo_rho:
        return 0.0
    if rho >= hi_rho:
        return -1.0
    return -beta_for_rho(cu, rho).beta


# -- bounds for arbitrary graphs -------------------------------------------------


def family_lower_bound(family_sizes: Iterable[int], t: int, rho: float) -> float:
    """Per-symbol lower bound from an independent family of ``G^t``.

    Raises when ``t * rho`` exceeds ``log2`` of the family's vertex total,
    where the family certifies nothing.
    """
    if t < 1:
        raise InputError("t must be >= 1")
    cu = CliqueUnion.of(family_sizes)
    if t * rho > cu.log_m + DOMAIN_TOL or rho < -DOMAIN_TOL:
        raise InputError(f"t*rho={t * rho} outside [0, log2 M_F = {cu.log_m}]: bound is vacuous")
    return capacity(cu, t * rho) / t


def cover_upper_bound(cover_sizes: Iterable[int], rho: float) -> float:
    """Upper bound from a vertex clique cover; the sizes must sum to ``m``."""
    return capacity(CliqueUnion.of(cover_sizes), rho)
