"""Sampled capacity curves and the transforms that build new bounds from old.

A curve is a function ``rho -> value`` on ``[0, log_m]`` stored as samples.
Lower-kind samples are certified lower bounds; since the true curve is
concave, any chord between them is one too. Upper-kind samples are certified
at the grid nodes. Exact curves may also carry ``fn``, a closed-form
evaluator used by ``evaluate`` in place of interpolation.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .cliqueunion import (
    CliqueUnion,
    capacity_array,
    free_lunch_point,
    packing_point,
    tilted_mean,
)
from .errors import InputError

DEFAULT_GRID = 1025
DEFAULT_P_GRID = 513
BETA_NODES = 1025
DOMAIN_TOL = 1e-12
VALUE_TOL = 1e-9
KINDS = ("lower", "upper", "exact")

TAGS = frozenset(
    {
        "Prop5+alpha",
        "Prop5-trivial-upper",
        "Thm2-family",
        "Thm2-cover",
        "Thm2-exact",
        "Lemma3-baseline",
        "Thm4-spectral",
        "Cor3-components",
        "Cor3-freelunch",
        "Thm5-supconv",
        "Thm6-xclique",
        "Thm7-doubleunion",
        "Thm8-union",
        "Thm9-unionclique",
        "Ex3-reference",
        "Hull",
    }
)


@dataclass(frozen=True)
class BoundCertificate:
    theorem: str
    witness: str = ""
    t: int = 1

    def __post_init__(self):
        if self.theorem not in TAGS:
            raise InputError(f"unknown certificate tag {self.theorem!r}")

    def as_dict(self) -> dict:
        return {"theorem": self.theorem, "witness": self.witness, "t": self.t}


def _merge_certs(*groups: Iterable[BoundCertificate]) -> tuple[BoundCertificate, ...]:
    out: list[BoundCertificate] = []
    for group in groups:
        for c in group:
            if c not in out:
                out.append(c)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class CapacityCurve:
    log_m: float
    grid: np.ndarray
    values: np.ndarray
    kind: str
    certificates: tuple[BoundCertificate, ...] = ()
    fn: Callable | None = field(default=None, repr=False)

    def __post_init__(self):
        grid = np.array(self.grid, dtype=float)
        values = np.array(self.values, dtype=float)
        if self.kind not in KINDS:
            raise InputError(f"curve kind must be one of {KINDS}")
        if grid.ndim != 1 or grid.shape != values.shape or grid.size == 0:
            raise InputError("grid and values must be equal-length 1-d arrays")
        if grid[0] != 0.0 or abs(grid[-1] - self.log_m) > DOMAIN_TOL:
            raise InputError("grid must run from 0 to log_m")
        grid[-1] = self.log_m
        if np.any(np.diff(grid) <= 0):
            raise InputError("grid must be strictly increasing")
        if not np.all(np.isfinite(values)):
            raise InputError("curve values must be finite")
        if values.min() < -VALUE_TOL:
            raise InputError(f"negative curve value {values.min()}")
        values = np.maximum(values, 0.0)
        if self.kind == "exact" and values[-1] > VALUE_TOL:
            raise InputError("exact curves vanish at rho = log m")
        grid.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "certificates", tuple(self.certificates))

    def __call__(self, rho):
        return evaluate(self, rho)

    def same_as(self, other: "CapacityCurve") -> bool:
        """Bitwise equality of the sampled data (``fn`` is not compared)."""
        return (
            self.log_m == other.log_m
            and self.kind == other.kind
            and self.certificates == other.certificates
            and np.array_equal(self.grid, other.grid)
            and np.array_equal(self.values, other.values)
        )

    def with_certificates(self, *certs: BoundCertificate) -> "CapacityCurve":
        return CapacityCurve(self.log_m, self.grid, self.values, self.kind, _merge_certs(self.certificates, certs), self.fn)


@dataclass(frozen=True)
class BoundProfile:
    """Certified lower and upper curves on one shared grid."""

    lower: CapacityCurve
    upper: CapacityCurve
    certificates: tuple[BoundCertificate, ...]
    free_lunch_lower: float
    packing: float
    exact: bool = False


# -- grids and evaluation --------------------------------------------------------


def default_grid(log_m: float, n: int = DEFAULT_GRID, extra: Iterable[float] = ()) -> np.ndarray:
    """``n`` uniform samples on ``[0, log_m]`` plus exact extra abscissas.

    Uniform samples within ``1e-12`` of an extra point are dropped so the
    extra point survives unrounded.
    """
    if log_m < 0:
        raise InputError("log_m must be >= 0")
    if log_m == 0:
        return np.zeros(1)
    base = np.linspace(0.0, log_m, n)
    ext = np.asarray([x for x in extra if 0.0 < x < log_m], dtype=float)
    if ext.size == 0:
        return base
    ext = np.unique(ext)
    ext = ext[np.concatenate(([True], np.diff(ext) > DOMAIN_TOL))]
    idx = np.searchsorted(ext, base)
    near = np.zeros(base.size, dtype=bool)
    for j in (idx - 1, idx):
        ok = (j >= 0) & (j < ext.size)
        near[ok] |= np.abs(ext[j[ok]] - base[ok]) <= DOMAIN_TOL
    near[0] = near[-1] = False
    ext = ext[(ext > DOMAIN_TOL) & (ext < log_m - DOMAIN_TOL)]
    return np.sort(np.concatenate((base[~near], ext)))


def evaluate(curve: CapacityCurve, rho):
    """Value at ``rho``: closed form if the curve has one, else linear interpolation."""
    r = np.asarray(rho, dtype=float)
    if np.any(r < -DOMAIN_TOL) or np.any(r > curve.log_m + DOMAIN_TOL):
        raise InputError(f"rho outside [0, {curve.log_m}]")
    r = np.clip(r, 0.0, curve.log_m)
    if curve.fn is not None:
        out = np.asarray(curve.fn(np.atleast_1d(r)), dtype=float).reshape(r.shape)
    else:
        out = np.interp(r, curve.grid, curve.values)
    return float(out) if out.ndim == 0 else out


class _CliqueUnionFn:
    def __init__(self, cu: CliqueUnion):
        self.cu = cu

    def __call__(self, rho):
        return capacity_array(self.cu, rho)


def exact_curve(cu: CliqueUnion, n: int = DEFAULT_GRID, beta_nodes: int = BETA_NODES) -> CapacityCurve:
    """Closed-form curve of a clique union.

    Besides the uniform grid and the corner abscissas, the curved middle
    piece is sampled at evenly spaced exponents, so fast turns near the
    corners are resolved even when the middle piece is short.
    """
    log_m = cu.log_m
    extra = [free_lunch_point(cu), packing_point(cu)] + [math.log2(x) for x in set(cu.sizes)]
    if not cu.uniform and beta_nodes:
        extra += list(tilted_mean(cu, np.linspace(0.0, 1.0, beta_nodes)))
    grid = default_grid(log_m, n, extra)
    cert = BoundCertificate("Thm2-exact", str(cu))
    return CapacityCurve(log_m, grid, capacity_array(cu, grid), "exact", (cert,), _CliqueUnionFn(cu))


def clique_minus_clique_curve(m: int, d: int, n: int = DEFAULT_GRID) -> CapacityCurve:
    """Known closed form ``log d - (log d / log m) rho`` for ``K_m`` minus a ``K_d``."""
    if not 1 <= d <= m:
        raise InputError("need 1 <= d <= m")
    log_m, log_d = math.log2(m), math.log2(d)
    grid = default_grid(log_m, n)

    def fn(r):
        return log_d * (1.0 - np.asarray(r) / log_m) if log_m > 0 else np.zeros_like(r)

    cert = BoundCertificate("Ex3-reference", f"m={m} d={d}")
    return CapacityCurve(log_m, grid, fn(grid), "exact", (cert,), fn)


def trivial_bounds(m: int, c0_lower: float, c0_upper: float, grid=None, witness: str = ""):
    """Time-sharing lower line and ``min(C_0, log m - rho)`` upper bound."""
    log_m = math.log2(m)
    if not -DOMAIN_TOL <= c0_lower <= c0_upper + DOMAIN_TOL or c0_upper > log_m + DOMAIN_TOL:
        raise InputError("need 0 <= c0_lower <= c0_upper <= log2 m")
    if grid is None:
        grid = default_grid(log_m, extra=[log_m - c0_upper])
    grid = np.asarray(grid, dtype=float)
    lower = c0_lower * (1.0 - grid / log_m) if log_m > 0 else np.zeros_like(grid)
    upper = np.minimum(c0_upper, log_m - grid)
    lo = CapacityCurve(log_m, grid, lower, "lower", (BoundCertificate("Prop5+alpha", witness or f"C0>={c0_lower:.12g}"),))
    up = CapacityCurve(log_m, grid, upper, "upper", (BoundCertificate("Prop5-trivial-upper", f"C0<={c0_upper:.12g}"),))
    return lo, up


# -- envelopes ---------------------------------------------------------------------


def upper_hull(x, y) -> tuple[np.ndarray, np.ndarray]:
    """Vertices of the least concave majorant of the points, left to right."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    order = np.lexsort((-y, x))
    x, y = x[order], y[order]
    keep = np.concatenate(([True], np.diff(x) > 0))
    x, y = x[keep], y[keep]
    hx: list[float] = []
    hy: list[float] = []
    for xi, yi in zip(x.tolist(), y.tolist()):
        while len(hx) >= 2:
            # drop the middle point when it lies on or below the chord
            cross = (hx[-1] - hx[-2]) * (yi - hy[-2]) - (hy[-1] - hy[-2]) * (xi - hx[-2])
            if cross >= 0:
                hx.pop()
                hy.pop()
            else:
                break
        hx.append(xi)
        hy.append(yi)
    return np.array(hx), np.array(hy)


def concave_envelope(items: Sequence, log_m: float, n: int = DEFAULT_GRID, grid=None) -> CapacityCurve:
    """Upper concave hull of lower-bound curves and ``(rho, value)`` anchor points.

    The anchor ``(log_m, 0)`` is always added; the best value at 0 comes
    from the inputs themselves.
    """
    xs = [np.array([log_m])]
    ys = [np.array([0.0])]
    certs: list[BoundCertificate] = []
    for item in items:
        if isinstance(item, CapacityCurve):
            if item.kind == "upper":
                raise InputError("concave_envelope takes lower bounds only")
            if abs(item.log_m - log_m) > 1e-9:
                raise InputError(f"domain mismatch: {item.log_m} vs {log_m}")
            xs.append(item.grid)
            ys.append(item.values)
            certs.extend(item.certificates)
        else:
            rho, val = item
            if not -DOMAIN_TOL <= rho <= log_m + DOMAIN_TOL:
                raise InputError(f"anchor abscissa {rho} outside [0, {log_m}]")
            xs.append(np.array([min(max(rho, 0.0), log_m)]))
            ys.append(np.array([val]))
    hx, hy = upper_hull(np.concatenate(xs), np.concatenate(ys))
    if hx[0] != 0.0:
        raise InputError("no lower bound supplied at rho = 0")
    if grid is None:
        grid = default_grid(log_m, n, hx)
    grid = np.asarray(grid, dtype=float)
    vals = np.interp(grid, hx, hy)
    return CapacityCurve(log_m, grid, vals, "lower", _merge_certs(certs))


def tighten_upper(curve: CapacityCurve) -> CapacityCurve:
    """Running minimum, then the chord bound through ``(log_m, 0)``.

    Both steps use only that the true curve is non-increasing, concave and
    zero at ``log_m``.
    """
    g, v = curve.grid, np.minimum.accumulate(curve.values)
    L = curve.log_m
    out = v.copy()
    if g.size > 1:
        span = L - g
        ratio = np.full(g.size, np.inf)
        ratio[:-1] = v[:-1] / span[:-1]
        # best chord slope from any node strictly to the right (excluding log_m)
        suffix = np.minimum.accumulate(ratio[::-1])[::-1]
        right = np.append(suffix[1:], np.inf)
        chord = np.full(g.size, np.inf)
        fin = np.isfinite(right)
        chord[fin] = span[fin] * right[fin]
        out = np.minimum(v, chord)
    return CapacityCurve(L, g, out, "upper", curve.certificates)


# -- product transforms ------------------------------------------------------------


def _segments(curve: CapacityCurve) -> tuple[float, np.ndarray, np.ndarray]:
    """Hull of a lower curve as ``(value at 0, dx, dy)`` with decreasing slopes."""
    if curve.kind == "upper":
        raise InputError("this transform needs a lower or exact curve")
    hx, hy = upper_hull(curve.grid, curve.values)
    return float(hy[0]), np.diff(hx), np.diff(hy)


def sup_convolution(c1: CapacityCurve, c2: CapacityCurve, n: int = DEFAULT_GRID) -> CapacityCurve:
    """``max_{r1 + r2 = rho} c1(r1) + c2(r2)``, a lower bound for the strong product.

    On concave piecewise-linear inputs the result is exact: its segments are
    the input segments merged by decreasing slope.
    """
    y1, dx1, dy1 = _segments(c1)
    y2, dx2, dy2 = _segments(c2)
    dx = np.concatenate((dx1, dx2))
    dy = np.concatenate((dy1, dy2))
    order = np.argsort(-(dy / dx), kind="stable")
    nx = np.concatenate(([0.0], np.cumsum(dx[order])))
    ny = y1 + y2 + np.concatenate(([0.0], np.cumsum(dy[order])))
    log_m = c1.log_m + c2.log_m
    nx[-1] = log_m
    grid = default_grid(log_m, n, nx)
    vals = np.interp(grid, nx, ny)
    cert = BoundCertificate("Thm5-supconv", f"log_m={c1.log_m:.12g}+{c2.log_m:.12g}")
    return CapacityCurve(log_m, grid, vals, "lower", _merge_certs(c1.certificates, c2.certificates, [cert]))


def product_with_clique(curve: CapacityCurve, m: int, n: int = DEFAULT_GRID) -> CapacityCurve:
    """Curve of ``G x K_m``: flat at ``C_0`` up to ``log m``, then the shifted curve."""
    if m < 1:
        raise InputError("clique size must be >= 1")
    cert = BoundCertificate("Thm6-xclique", f"m={m}")
    if m == 1:
        return curve.with_certificates(cert)
    shift = math.log2(m)
    log_m = curve.log_m + shift
    c0 = evaluate(curve, 0.0)
    grid = default_grid(log_m, n, np.append(curve.grid + shift, shift))

    def shifted(r, inner=curve, c0=c0, shift=shift):
        r = np.asarray(r, dtype=float)
        out = np.full(r.shape, c0)
        hi = r >= shift
        if hi.any():
            out[hi] = evaluate(inner, np.minimum(r[hi] - shift, inner.log_m))
        return out

    fn = shifted if curve.fn is not None else None
    vals = shifted(grid)
    return CapacityCurve(log_m, grid, vals, curve.kind, _merge_certs(curve.certificates, [cert]), fn)


def double_union(curve: CapacityCurve, n: int = DEFAULT_GRID) -> CapacityCurve:
    """Curve of ``G + G``: ``1 + C_rho`` below ``log m``, ``1 + log m - rho`` above."""
    L = curve.log_m
    log_m = L + 1.0
    grid = default_grid(log_m, n, np.append(curve.grid, L))

    def doubled(r, inner=curve, L=L):
        r = np.asarray(r, dtype=float)
        out = 1.0 + L - r
        lo = r < L
        if lo.any():
            out[lo] = 1.0 + evaluate(inner, r[lo])
        return out

    fn = doubled if curve.fn is not None else None
    cert = BoundCertificate("Thm7-doubleunion", f"log_m={L:.12g}")
    return CapacityCurve(log_m, grid, doubled(grid), curve.kind, _merge_certs(curve.certificates, [cert]), fn)


def _entropy(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    inner = (p > 0) & (p < 1)
    q = p[inner]
    out[inner] = -q * np.log2(q) - (1 - q) * np.log2(1 - q)
    return out


def _union_delta(m1: int, m2: int) -> float:
    return (m1 * math.log2(m1) + m2 * math.log2(m2)) / (m1 + m2)


def union_lower_bound(
    c1: CapacityCurve, m1: int, c2: CapacityCurve, m2: int, p_grid: int = DEFAULT_P_GRID, n: int = DEFAULT_GRID
) -> CapacityCurve:
    """Lower bound for ``G + H`` from curves of ``G`` (m1 vertices) and ``H`` (m2).

    For a fixed share ``p`` the inner maximum over ``p r1 + (1-p) r2 = rho`` is
    a supremal convolution of the two scaled curves. Scaling by ``p``
    preserves slopes, so one slope order serves every ``p``.
    """
    if min(m1, m2) < 1:
        raise InputError("vertex counts must be >= 1")
    if abs(c1.log_m - math.log2(m1)) > 1e-9 or abs(c2.log_m - math.log2(m2)) > 1e-9:
        raise InputError("curve domains do not match the vertex counts")
    y1, dx1, dy1 = _segments(c1)
    y2, dx2, dy2 = _segments(c2)
    dx = np.concatenate((dx1, dx2))
    dy = np.concatenate((dy1, dy2))
    side = np.concatenate((np.zeros(dx1.size), np.ones(dx2.size)))
    order = np.argsort(-(dy / dx), kind="stable") if dx.size else np.zeros(0, dtype=int)
    dx, dy, side = dx[order], dy[order], side[order]

    log_m = math.log2(m1 + m2)
    delta = _union_delta(m1, m2)
    ps = np.linspace(0.0, 1.0, p_grid)
    breaks = [delta]
    for p in ps[1:-1]:
        w = np.where(side == 0, p, 1 - p)
        breaks.append(float(np.sum(w * dx)) if dx.size else 0.0)
    grid = default_grid(log_m, n, breaks)
    best = np.full(grid.size, -np.inf)
    for p in ps:
        w = np.where(side == 0, p, 1 - p)
        nx = np.concatenate(([0.0], np.cumsum(w * dx)))
        ny = p * y1 + (1 - p) * y2 + np.concatenate(([0.0], np.cumsum(w * dy)))
        reach = nx[-1]
        ok = grid <= reach + DOMAIN_TOL
        val = np.full(grid.size, -np.inf)
        val[ok] = np.interp(grid[ok], nx, ny) + _entropy(np.array([p]))[0]
        best = np.maximum(best, val)
    tail = grid >= delta
    best[tail] = log_m - grid[tail]
    best = np.maximum(best, 0.0)
    cert = BoundCertificate("Thm8-union", f"m1={m1} m2={m2} p_grid={p_grid} delta={delta:.12g}")
    return CapacityCurve(log_m, grid, best, "lower", _merge_certs(c1.certificates, c2.certificates, [cert]))


def union_with_clique(
    curve: CapacityCurve, m1: int, m2: int, p_grid: int = DEFAULT_P_GRID, n: int = DEFAULT_GRID, refine: int = 60
) -> CapacityCurve:
    """Curve of ``G + K_{m2}`` from the curve of ``G`` (``m1`` vertices).

    For a share ``p`` the best ``r1`` is the smallest one allowed by
    ``p r1 + (1-p) log m2 >= rho``, as the curve is non-increasing. What is
    left, ``F(p) = h(p) + p C(r1(p))``, is concave in ``p``: a coarse
    ``p_grid`` locates the peak and ``refine`` golden-section steps polish it.
    """
    if min(m1, m2) < 1:
        raise InputError("vertex counts must be >= 1")
    if curve.kind == "upper":
        raise InputError("this transform needs a lower or exact curve")
    if abs(curve.log_m - math.log2(m1)) > 1e-9:
        raise InputError("curve domain does not match m1")
    L1, L2 = curve.log_m, math.log2(m2)
    log_m = math.log2(m1 + m2)
    delta = _union_delta(m1, m2)
    grid = default_grid(log_m, n, [delta, L2])
    hx, hy = upper_hull(curve.grid, curve.values)
    if curve.fn is not None:
        exact = lambda r: evaluate(curve, r)  # noqa: E731
    else:
        exact = lambda r: np.interp(r, hx, hy)  # noqa: E731
    rho = grid[grid < delta]

    # feasible shares: rho <= p L1 + (1-p) L2
    if L1 > L2:
        plo = np.clip((rho - L2) / (L1 - L2), 0.0, 1.0)
        phi = np.ones_like(rho)
    elif L1 < L2:
        plo = np.zeros_like(rho)
        phi = np.clip((L2 - rho) / (L2 - L1), 0.0, 1.0)
    else:
        plo, phi = np.zeros_like(rho), np.ones_like(rho)

    def objective(p, ev):
        p = np.asarray(p, dtype=float)
        out = np.zeros(p.shape)
        pos = p > 0
        pp = p[pos]
        r = np.broadcast_to(rho.reshape((-1,) + (1,) * (p.ndim - 1)), p.shape)[pos]
        r1 = np.clip((r - (1 - pp) * L2) / pp, 0.0, L1)
        out[pos] = pp * ev(r1)
        return out + _entropy(p)

    ts = np.linspace(0.0, 1.0, p_grid)
    coarse = plo[:, None] + (phi - plo)[:, None] * ts[None, :]
    vals = objective(coarse, lambda r: np.interp(r, hx, hy))
    k = vals.argmax(axis=1)
    step = (phi - plo) / (p_grid - 1)
    a = np.maximum(coarse[np.arange(rho.size), k] - step, plo)
    b = np.minimum(coarse[np.arange(rho.size), k] + step, phi)
    inv = (math.sqrt(5) - 1) / 2
    x1, x2 = b - inv * (b - a), a + inv * (b - a)
    f1, f2 = objective(x1, exact), objective(x2, exact)
    for _ in range(refine):
        left = f1 >= f2
        a, b = np.where(left, a, x1), np.where(left, x2, b)
        x1n = np.where(left, b - inv * (b - a), x2)
        x2n = np.where(left, x1, a + inv * (b - a))
        ff = objective(np.where(left, x1n, x2n), exact)
        f1, f2 = np.where(left, ff, f2), np.where(left, f1, ff)
        x1, x2 = x1n, x2n
    best_head = np.maximum.reduce([f1, f2, objective(plo, exact), objective(phi, exact)])
    best = log_m - grid
    best[: rho.size] = best_head
    best = np.maximum(best, 0.0)
    cert = BoundCertificate("Thm9-unionclique", f"m1={m1} m2={m2} p_grid={p_grid} delta={delta:.12g}")
    return CapacityCurve(log_m, grid, best, "lower", _merge_certs(curve.certificates, [cert]))


def conjugate_numeric(curve: CapacityCurve, gamma: float) -> float:
    """``min`` over the grid of ``gamma * rho - value``."""
    if not -1.0 <= gamma <= 0.0:
        raise InputError("gamma must lie in [-1, 0]")
    return float(np.min(gamma * curve.grid - curve.values))


# -- serialisation -------------------------------------------------------------------


def _side(curve: CapacityCurve | None, grid: np.ndarray):
    if curve is None:
        return None
    if not np.array_equal(curve.grid, grid):
        raise InputError("lower and upper curves must share a grid")
    return curve.values.tolist()


def curves_to_dict(
    lower: CapacityCurve | None, upper: CapacityCurve | None, kind: str | None = None, certificates=None
) -> dict:
    ref = lower if lower is not None else upper
    if ref is None:
        raise InputError("nothing to serialise")
    certs = _merge_certs(lower.certificates if lower else (), upper.certificates if upper else (), certificates or ())
    return {
        "log_m": ref.log_m,
        "grid": ref.grid.tolist(),
        "lower": _side(lower, ref.grid),
        "upper": _side(upper, ref.grid),
        "kind": kind or ref.kind,
        "certificates": [c.as_dict() for c in certs],
    }


def curve_to_dict(curve: CapacityCurve) -> dict:
    if curve.kind == "exact":
        return curves_to_dict(curve, curve)
    if curve.kind == "lower":
        return curves_to_dict(curve, None)
    return curves_to_dict(None, curve)


def profile_to_dict(profile: BoundProfile) -> dict:
    if profile.exact:
        return curve_to_dict(profile.lower)
    return curves_to_dict(profile.lower, profile.upper, "bounds", profile.certificates)


def to_json(obj) -> str:
    d = profile_to_dict(obj) if isinstance(obj, BoundProfile) else curve_to_dict(obj)
    return json.dumps(d, indent=1)


def from_json(text: str) -> tuple[CapacityCurve | None, CapacityCurve | None]:
    """Parse a curve document back into ``(lower, upper)`` curves."""
    d = json.loads(text)
    try:
        log_m, grid, kind = float(d["log_m"]), d["grid"], d["kind"]
        certs = tuple(BoundCertificate(c["theorem"], c["witness"], int(c["t"])) for c in d["certificates"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed curve document: {exc}") from None
    if kind == "exact":
        c = CapacityCurve(log_m, grid, d["lower"], "exact", certs)
        return c, c
    lower = CapacityCurve(log_m, grid, d["lower"], "lower", certs) if d.get("lower") is not None else None
    upper = CapacityCurve(log_m, grid, d["upper"], "upper", certs) if d.get("upper") is not None else None
    return lower, upper


def to_csv(lower: CapacityCurve | None, upper: CapacityCurve | None) -> str:
    ref = lower if lower is not None else upper
    lo = _side(lower, ref.grid)
    up = _side(upper, ref.grid)
    rows = ["rho,lower,upper"]
    for i, rho in enumerate(ref.grid):
        a = f"{lo[i]:.12g}" if lo is not None else ""
        b = f"{up[i]:.12g}" if up is not None else ""
        rows.append(f"{rho:.12g},{a},{b}")
    return "\n".join(rows) + "\n"
