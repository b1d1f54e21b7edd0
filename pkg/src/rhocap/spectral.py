"""Eigenvalue upper bounds for regular graphs.

For an ``r``-regular graph on ``m`` vertices with smallest adjacency
eigenvalue ``mu`` (write ``u = |mu|``, ``a = r / (r + u)``)::

    C_0 <= log(m u / (r + u))                               (baseline)
    C_rho <= log m - rho - D(p || a) / 2                    (rho inside the window)

where ``p`` in ``(0, a)`` solves ``rho = log((r+u)/u) + p log u - D(p || a)/2``
and the window is the open interval between that right-hand side at
``p = 0`` and at ``p = a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cliqueunion import binary_kl
from .errors import InputError
from .graph import Graph, regular_degree

EIG_RESIDUAL_TOL = 1e-8
P_TOL = 1e-12
P_MAX_ITER = 200


@dataclass(frozen=True)
class SpectralData:
    m: int
    e: int
    r: int
    mu: float

    @property
    def abs_mu(self) -> float:
        return -self.mu

    @property
    def a(self) -> float:
        """``r / (r + |mu|)``: the zero of the divergence term."""
        return self.r / (self.r + self.abs_mu)


@dataclass(frozen=True)
class RegularBoundSolution:
    rho: float
    p: float
    value: float
    residual: float


def smallest_eigenvalue(g: Graph) -> float:
    """Smallest adjacency eigenvalue, with an eigenpair residual check."""
    if g.num_edges == 0:
        raise InputError("graph has no edges")
    a = g.adjacency_matrix()
    w, v = np.linalg.eigh(a)
    mu, vec = float(w[0]), v[:, 0]
    res = np.max(np.abs(a @ vec - mu * vec))
    if res > EIG_RESIDUAL_TOL:
        raise ArithmeticError(f"eigenpair residual {res:.3g} above {EIG_RESIDUAL_TOL}")
    return mu


def spectral_data(g: Graph) -> SpectralData:
    r = regular_degree(g)
    if r is None:
        raise InputError("graph is not regular")
    if r == 0:
        raise InputError("graph has no edges")
    return SpectralData(g.n, g.num_edges, r, smallest_eigenvalue(g))


def _data(x) -> SpectralData:
    return x if isinstance(x, SpectralData) else spectral_data(x)


def lovasz_baseline(g) -> float:
    d = _data(g)
    return math.log2(d.m * d.abs_mu / (d.r + d.abs_mu))


def validity_interval(g) -> tuple[float, float]:
    d = _data(g)
    lead = math.log2((d.r + d.abs_mu) / d.abs_mu)
    return 0.5 * lead, lead + d.a * math.log2(d.abs_mu)


def delta(g, rho: float, q: float) -> float:
    """Root function in ``q``; strictly decreasing on ``[0, a]``."""
    d = _data(g)
    lead = math.log2((d.r + d.abs_mu) / d.abs_mu)
    return rho - (lead + q * math.log2(d.abs_mu) - 0.5 * binary_kl(q, d.a))


def solve_p(g, rho: float) -> RegularBoundSolution:
    d = _data(g)
    lo_rho, hi_rho = validity_interval(d)
    if not lo_rho < rho < hi_rho:
        raise InputError(f"rho={rho} outside the open window ({lo_rho}, {hi_rho})")
    lo, hi = 0.0, d.a
    for _ in range(P_MAX_ITER):
        mid = 0.5 * (lo + hi)
        if delta(d, rho, mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < P_TOL:
            break
    p = 0.5 * (lo + hi)
    value = math.log2(d.m) - rho - 0.5 * binary_kl(p, d.a)
    return RegularBoundSolution(rho, p, value, delta(d, rho, p))


def regular_upper_bound(g, rho: float) -> float:
    return solve_p(g, rho).value


def regular_upper_values(g, grid) -> np.ndarray:
    """Pointwise min of the baseline, ``log m - rho`` and the window bound, made monotone."""
    d = _data(g)
    grid = np.asarray(grid, dtype=float)
    log_m = math.log2(d.m)
    base = max(lovasz_baseline(d), 0.0)
    lo_rho, hi_rho = validity_interval(d)
    vals = np.minimum(base, log_m - grid)
    for i, rho in enumerate(grid):
        if lo_rho < rho < hi_rho:
            vals[i] = min(vals[i], regular_upper_bound(d, rho))
    vals = np.maximum(np.minimum.accumulate(vals), 0.0)
    return vals


def regular_upper_curve(g, grid=None):
    """Upper-kind curve from the eigenvalue bounds (see ``regular_upper_values``)."""
    from .curves import BoundCertificate, CapacityCurve, default_grid

    d = _data(g)
    log_m = math.log2(d.m)
    grid = default_grid(log_m, extra=validity_interval(d)) if grid is None else np.asarray(grid, dtype=float)
    cert = BoundCertificate(
        "Thm4-spectral",
        f"r={d.r} mu={d.mu:.12g} baseline={lovasz_baseline(d):.12g}",
        1,
    )
    return CapacityCurve(log_m, grid, regular_upper_values(d, grid), "upper", (cert,))
