import random

import numpy as np
import pytest
from scipy.optimize import LinearConstraint, milp
from scipy.sparse import coo_matrix

from _oracles import brute_alpha, brute_alpha_k, brute_clique_cover_number, nx_alpha, random_graph
from rhocap.errors import CapExceeded, InputError, SearchTimeout
from rhocap.graph import (
    bits,
    build_clique_minus_clique,
    build_clique_union,
    build_complete,
    build_cycle,
    power_index,
    strong_power,
    to_mask,
)
from rhocap.independence import (
    VertexFamily,
    alpha,
    alpha_k,
    clique_cover,
    is_independent_family,
    max_family,
    saturate_family,
)

C5 = build_cycle(5)
C25 = strong_power(C5, 2)


def pent_family(pairs_per_subset):
    """Family of C5^2 from 1-indexed coordinate pairs."""
    return VertexFamily.of([[power_index((a - 1, b - 1), 5) for a, b in s] for s in pairs_per_subset], t=2)


# Three families of C5^2 in 1-indexed coordinates. The rows family uses
# rows 3 and 4, which are adjacent, so it is not independent.
PAIRS_FAMILY = pent_family([[(4, 5), (5, 5)], [(2, 1), (2, 5)], [(1, 3), (2, 3)], [(4, 2), (4, 3)]])
MIXED_FAMILY = pent_family([[(4, 1), (4, 2)], [(a, b) for a in (1, 2) for b in (1, 2)], [(a, 4) for a in range(1, 6)]])
ROWS_FAMILY = pent_family([[(a, b) for b in range(1, 6)] for a in (1, 3, 4)])


def milp_alpha_k(g, k):
    """alpha_k as a set-packing MILP over all k-subsets (scipy's HiGHS)."""
    import itertools

    subs = [to_mask(c) for c in itertools.combinations(range(g.n), k)]
    closed = []
    for m in subs:
        r = m
        for v in bits(m):
            r |= g.adj[v]
        closed.append(r)
    rows = [(i, j) for i in range(len(subs)) for j in range(i + 1, len(subs)) if closed[i] & subs[j]]
    ri = np.repeat(np.arange(len(rows)), 2)
    ci = np.array(rows).ravel()
    a = coo_matrix((np.ones(ci.size), (ri, ci)), shape=(len(rows), len(subs))).tocsr()
    res = milp(-np.ones(len(subs)), constraints=LinearConstraint(a, -np.inf, 1), integrality=np.ones(len(subs)), bounds=(0, 1))
    return round(-res.fun)


def test_pentagon_examples():
    assert is_independent_family(C5, [{0, 1}, {3}])
    assert alpha(C5) == 2
    assert alpha_k(C5, 2) == 1
    fam = max_family(C5, 1)
    assert len(fam) == 2 and is_independent_family(C5, fam)


def test_pentagon_square_frozen_values():
    # alpha(C5^2) = 5 checked against networkx; alpha_2(C5^2) = 4 against a MILP
    assert alpha(C25) == 5 == nx_alpha(C25)
    assert alpha_k(C25, 2) == 4 == milp_alpha_k(C25, 2)
    assert [alpha_k(C25, k) for k in range(3, 8)] == [2, 2, 2, 2, 1]


def test_pentagon_square_families():
    assert is_independent_family(C25, PAIRS_FAMILY)
    assert is_independent_family(C25, MIXED_FAMILY)
    report = is_independent_family(C25, ROWS_FAMILY)
    assert not report
    i, j, u, v = report.pair
    assert (i, j) == (1, 2)
    assert C25.adjacent(u, v)
    assert u // 5 == 2 and v // 5 == 3  # first coordinates 3 and 4 (1-indexed)


def test_family_report_diagnostics():
    r = is_independent_family(C5, [{0, 1}, {1}])
    assert not r and r.pair == (0, 1, 1, 1) and "share" in r.reason
    r = is_independent_family(C5, [{0}, {7}])
    assert not r and "out of range" in r.reason


def test_small_closed_cases():
    assert alpha(build_complete(6)) == 1
    assert alpha_k(build_clique_union([2, 2]), 2) == 2
    assert alpha_k(build_complete(4), 2) == 1
    fam = max_family(build_clique_union([2, 2]), 2)
    assert fam.subsets == (frozenset({0, 1}), frozenset({2, 3}))
    assert len(max_family(build_complete(4), 2)) == 1
    with pytest.raises(InputError):
        alpha_k(C5, 6)
    with pytest.raises(InputError):
        alpha_k(C5, 0)


def test_exact_search_matches_brute_force():
    rng = random.Random(2024)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 8))
        assert alpha(g) == brute_alpha(g)
        for k in range(1, g.n + 1):
            assert alpha_k(g, k) == brute_alpha_k(g, k)
            fam = max_family(g, k)
            assert is_independent_family(g, fam)
            assert all(len(s) == k for s in fam.subsets)


def test_max_family_is_canonical():
    fam = max_family(C25, 2)
    keys = [sorted(s) for s in fam.subsets]
    assert keys == sorted(keys)
    assert max_family(C25, 2) == fam


def test_monotone_in_k_and_alpha_is_alpha1():
    rng = random.Random(5)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 9))
        vals = [alpha_k(g, k) for k in range(1, g.n + 1)]
        assert all(a >= b for a, b in zip(vals, vals[1:]))
        assert vals[0] == alpha(g)


def test_timeout_carries_lower_bound():
    g = strong_power(C5, 3)
    with pytest.raises(SearchTimeout) as exc:
        alpha_k(g, 2, timeout_s=0.0)
    assert exc.value.best_lower is not None and exc.value.best_lower >= 0


def test_clique_cover_examples():
    cover = clique_cover(C5)
    assert len(cover) == 3 and sorted(cover.sizes) == [1, 2, 2]
    assert len(clique_cover(build_complete(5))) == 1
    for m, d in [(4, 2), (6, 3), (7, 1), (5, 5)]:
        assert len(clique_cover(build_clique_minus_clique(m, d))) == d
    with pytest.raises(CapExceeded):
        clique_cover(C25)


def test_clique_cover_matches_brute_force():
    rng = random.Random(8)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 8))
        cover = clique_cover(g)
        assert len(cover) == brute_clique_cover_number(g)
        seen = set()
        for c in cover.cliques:
            assert g.is_clique(to_mask(c)) and not seen & c
            seen |= c
        assert seen == set(range(g.n))


def test_saturate_keeps_independence():
    rng = random.Random(9)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 9))
        fam = max_family(g, 1)
        sat = saturate_family(g, fam)
        assert is_independent_family(g, sat)
        assert len(sat) == len(fam)
        assert sum(sat.sizes) >= sum(fam.sizes)
