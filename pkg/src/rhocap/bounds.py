"""Certified lower/upper bound profiles for arbitrary graphs, plus corner points."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cliqueunion import CliqueUnion, capacity_array, free_lunch_point, packing_point
from .curves import (
    DEFAULT_GRID,
    BoundCertificate,
    BoundProfile,
    CapacityCurve,
    _merge_certs,
    concave_envelope,
    default_grid,
    exact_curve,
    tighten_upper,
)
from .errors import CapExceeded, InputError, SearchTimeout
from .graph import Graph, clique_union_sizes, connected_components, regular_degree, strong_power
from .independence import (
    DEFAULT_COVER_CAP,
    DEFAULT_TIMEOUT_S,
    VertexFamily,
    clique_cover,
    is_independent_family,
    max_family,
    saturate_family,
)
from .spectral import lovasz_baseline, regular_upper_values, spectral_data, validity_interval

EQ_TOL = 1e-12


@dataclass
class AggregateOptions:
    grid: int = DEFAULT_GRID
    max_power: int = 2
    # automatic family search on G^t only while |V(G)|^t stays this small
    max_power_vertices: int = 25
    timeout_s: float | None = DEFAULT_TIMEOUT_S
    cover_cap: int = DEFAULT_COVER_CAP
    families: list[VertexFamily] = field(default_factory=list)


def packing_point_exact(g: Graph) -> float:
    """``log m - H(component sizes / m)``."""
    sizes = np.asarray(connected_components(g).sizes, dtype=float)
    q = sizes / sizes.sum()
    return float(math.log2(g.n) + (q * np.log2(q)).sum())


def uniform_clique_union_test(g: Graph) -> bool:
    sizes = clique_union_sizes(g)
    return sizes is not None and len(set(sizes)) == 1


def free_lunch_lower(g: Graph, family: VertexFamily, t: int | None = None, c0_upper: float | None = None) -> float:
    """``(1/(t |F|)) sum log |V_i|`` for a family whose size attains ``C_0``.

    ``c0_upper`` is a certified upper bound on ``C_0``; when given, the
    family must meet it (``log |F| / t == c0_upper``) or the claim is refused.
    """
    t = family.t if t is None else t
    if len(family) == 0:
        raise InputError("empty family")
    h = strong_power(g, t) if t > 1 else g
    report = is_independent_family(h, family)
    if not report:
        raise InputError(f"family is not independent: {report.reason}")
    if c0_upper is not None and abs(math.log2(len(family)) / t - c0_upper) > EQ_TOL:
        raise InputError("family size does not attain the certified capacity")
    return sum(math.log2(len(s)) for s in family.subsets) / (t * len(family))


def family_curve(family: VertexFamily, log_m: float) -> CapacityCurve:
    """Lower-bound curve ``(1/t) C_{t rho}(sizes)``, continued by 0 past its reach."""
    t = family.t
    cu = CliqueUnion.of(family.sizes)
    reach = cu.log_m / t
    inner = exact_curve(cu, n=257, beta_nodes=129)
    x = np.append(inner.grid / t, log_m)
    y = np.append(inner.values / t, 0.0)
    if reach >= log_m - EQ_TOL:
        x, y = inner.grid / t, inner.values / t
        x[-1] = log_m
    cert = BoundCertificate("Thm2-family", "sizes=" + ",".join(map(str, sorted(family.sizes))), t)
    return CapacityCurve(log_m, x, y, "lower", (cert,))


def _auto_families(g: Graph, opts: AggregateOptions, certs: list) -> list[VertexFamily]:
    out = []
    comps = connected_components(g)
    if len(comps.components) > 1:
        out.append(VertexFamily(comps.components, 1))
        certs.append(BoundCertificate("Cor3-components", "sizes=" + ",".join(map(str, comps.sizes))))
    t = 1
    while t <= opts.max_power and (t == 1 or g.n**t <= opts.max_power_vertices):
        h = strong_power(g, t) if t > 1 else g
        for k in range(1, h.n + 1):
            try:
                fam = max_family(h, k, opts.timeout_s, t)
            except SearchTimeout:
                break
            if len(fam) <= 1:
                break
            out.append(saturate_family(h, fam))
        t += 1
    return out


def aggregate(g: Graph, opts: AggregateOptions | None = None) -> BoundProfile:
    """Best certified bounds this package can produce for ``C_rho(g)``."""
    opts = opts or AggregateOptions()
    if g.n == 0:
        raise InputError("empty graph")
    log_m = math.log2(g.n)
    sizes = clique_union_sizes(g)
    if sizes is not None:
        cu = CliqueUnion.of(sizes)
        c = exact_curve(cu, opts.grid)
        return BoundProfile(c, c, c.certificates, free_lunch_point(cu), packing_point(cu), exact=True)

    certs: list[BoundCertificate] = []
    families = _auto_families(g, opts, certs)
    for fam in opts.families:
        h = strong_power(g, fam.t) if fam.t > 1 else g
        report = is_independent_family(h, fam)
        if not report:
            raise InputError(f"supplied family rejected: {report.reason}")
        families.append(fam)

    # C_0 lower from family counts (alpha(G^t) lives among them)
    c0_lower = max([math.log2(len(f)) / f.t for f in families if len(f)] + [0.0])
    pieces = [(0.0, c0_lower), (log_m, 0.0)]
    family_curves = [family_curve(f, log_m) for f in families]
    lower_hull = concave_envelope(pieces + family_curves, log_m, grid=None)
    hull_x = lower_hull.grid

    # upper side
    c0_upper, c0_src = log_m, "log m"
    cover = None
    if g.n <= opts.cover_cap:
        try:
            cover = clique_cover(g, opts.cover_cap, opts.timeout_s)
        except (SearchTimeout, CapExceeded):
            cover = None
    if cover is not None and math.log2(len(cover)) < c0_upper:
        c0_upper, c0_src = math.log2(len(cover)), f"cc={len(cover)}"
    sdata = None
    if regular_degree(g) and g.num_edges:
        sdata = spectral_data(g)
        base = lovasz_baseline(sdata)
        certs.append(BoundCertificate("Lemma3-baseline", f"mu={sdata.mu:.12g} value={base:.12g}"))
        if base < c0_upper:
            c0_upper, c0_src = base, "spectral baseline"
    c0_upper = max(c0_upper, c0_lower)

    extra = list(hull_x) + [log_m - c0_upper]
    if sdata is not None:
        extra += list(validity_interval(sdata))
    grid = default_grid(log_m, opts.grid, extra)
    lower_vals = np.interp(grid, hull_x, lower_hull.values)
    lower_certs = _merge_certs(
        [BoundCertificate("Prop5+alpha", f"C0>={c0_lower:.12g}")], [c.certificates[0] for c in family_curves]
    )
    lower = CapacityCurve(log_m, grid, lower_vals, "lower", lower_certs)

    up = np.minimum(c0_upper, log_m - grid)
    up_certs = [BoundCertificate("Prop5-trivial-upper", f"C0<={c0_upper:.12g} via {c0_src}")]
    if cover is not None:
        up = np.minimum(up, capacity_array(CliqueUnion.of(cover.sizes), grid))
        up_certs.append(BoundCertificate("Thm2-cover", "sizes=" + ",".join(map(str, sorted(cover.sizes)))))
    if sdata is not None:
        up = np.minimum(up, regular_upper_values(sdata, grid))
        up_certs.append(BoundCertificate("Thm4-spectral", f"r={sdata.r} mu={sdata.mu:.12g}"))
    upper = tighten_upper(CapacityCurve(log_m, grid, up, "upper", tuple(up_certs)))

    fl = 0.0
    for fam in families:
        if abs(math.log2(len(fam)) / fam.t - c0_upper) <= EQ_TOL:
            val = sum(math.log2(len(s)) for s in fam.subsets) / (fam.t * len(fam))
            if val > fl:
                fl = val
                fl_cert = BoundCertificate(
                    "Cor3-freelunch", "sizes=" + ",".join(map(str, sorted(fam.sizes))), fam.t
                )
    if fl > 0:
        certs.append(fl_cert)
    all_certs = _merge_certs(lower.certificates, upper.certificates, certs)
    return BoundProfile(lower, upper, all_certs, fl, packing_point_exact(g))
