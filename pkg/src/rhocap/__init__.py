"""rho-capacity of graphs: exact values for unions of cliques, certified bounds otherwise."""

from __future__ import annotations

__version__ = "0.1.0"

from .bounds import AggregateOptions, aggregate, free_lunch_lower, packing_point_exact, uniform_clique_union_test
from .cliqueunion import (
    BetaSolution,
    CliqueUnion,
    beta_for_rho,
    binary_entropy,
    binary_kl,
    capacity,
    conjugate,
    cover_upper_bound,
    derivative,
    family_lower_bound,
    free_lunch_point,
    packing_point,
    renyi_entropy,
)
from .curves import (
    BoundCertificate,
    BoundProfile,
    CapacityCurve,
    clique_minus_clique_curve,
    concave_envelope,
    conjugate_numeric,
    default_grid,
    double_union,
    evaluate,
    exact_curve,
    product_with_clique,
    sup_convolution,
    tighten_upper,
    trivial_bounds,
    union_lower_bound,
    union_with_clique,
)
from .errors import CapExceeded, InputError, RhoCapError, SearchTimeout, VerificationError
from .graph import (
    ComponentPartition,
    Graph,
    build_clique_minus_clique,
    build_clique_union,
    build_complete,
    build_cycle,
    build_empty,
    connected_components,
    disjoint_union,
    regular_degree,
    strong_power,
    strong_product,
    subsets_adjacent,
)
from .independence import (
    CliqueCover,
    FamilyReport,
    VertexFamily,
    alpha,
    alpha_k,
    clique_cover,
    is_independent_family,
    max_family,
)
from .oracle import (
    BroadcastCode,
    MultinomialSums,
    alpha_k_power,
    multinomial_sums,
    rate_convergence,
    sandwich_check,
    verify_broadcast_code,
)
from .spectral import (
    RegularBoundSolution,
    SpectralData,
    lovasz_baseline,
    regular_upper_bound,
    regular_upper_curve,
    smallest_eigenvalue,
    solve_p,
    validity_interval,
)
