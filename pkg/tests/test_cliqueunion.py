import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from _oracles import capacity_by_infimum
from rhocap.cliqueunion import (
    CliqueUnion,
    beta_for_rho,
    binary_entropy,
    binary_kl,
    capacity,
    capacity_array,
    conjugate,
    cover_upper_bound,
    derivative,
    family_lower_bound,
    free_lunch_point,
    packing_point,
    renyi_entropy,
    tilted_mean,
)
from rhocap.errors import InputError

CU12 = CliqueUnion.of([1, 2])
LOG3 = math.log2(3)
sizes_st = st.lists(st.integers(1, 12), min_size=1, max_size=7)


def test_renyi_entropy_examples():
    assert renyi_entropy([0.5, 0.5], 2) == pytest.approx(1.0, abs=1e-15)
    assert renyi_entropy([2 / 3, 1 / 3], 0) == pytest.approx(1.0, abs=1e-15)
    assert renyi_entropy([2 / 3, 1 / 3], 1) == pytest.approx(0.918296, abs=1e-6)
    # continuity through the Shannon point
    assert renyi_entropy([2 / 3, 1 / 3], 1 + 1e-7) == pytest.approx(0.918296, abs=1e-6)
    with pytest.raises(InputError):
        renyi_entropy([0.5, 0.6], 1)


def test_binary_functions():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(2 / 3) == pytest.approx(0.918296, abs=1e-6)
    assert binary_entropy(0) == 0 == binary_entropy(1)
    assert binary_kl(0.3, 0.3) == 0
    assert binary_kl(0, 0.5) == pytest.approx(1.0)
    with pytest.raises(InputError):
        binary_kl(0.5, 0.0)
    assert binary_kl(0.0, 0.0) == 0


def test_beta_examples():
    assert beta_for_rho(CU12, 0.5).beta == 0
    assert beta_for_rho(CU12, 2 / 3).beta == 1
    sol = beta_for_rho(CU12, 0.6)
    assert sol.beta == pytest.approx(math.log2(1.5), abs=1e-12)
    with pytest.raises(InputError):
        beta_for_rho(CU12, 0.4)
    with pytest.raises(InputError):
        beta_for_rho(CliqueUnion.of([3, 3]), 1.0)


def test_capacity_examples():
    assert capacity(CU12, 0) == 1.0
    assert capacity(CU12, 0.6) == pytest.approx(0.970951, abs=1e-6)
    assert capacity(CU12, LOG3) == pytest.approx(0.0, abs=1e-15)
    assert capacity(CU12, 1.0) == pytest.approx(LOG3 - 1, abs=1e-15)
    with pytest.raises(InputError):
        capacity(CU12, 1.7)


def test_capacity_at_06_three_routes():
    # closed form, entropy h(0.4) at 50 digits, and the numeric infimum
    h = -(mpmath.mpf("0.4") * mpmath.log(mpmath.mpf("0.4"), 2) + mpmath.mpf("0.6") * mpmath.log(mpmath.mpf("0.6"), 2))
    assert abs(capacity(CU12, 0.6) - float(h)) < 1e-12
    assert abs(capacity_by_infimum([1, 2], 0.6) - float(h)) < 1e-9


def test_conjugate_examples():
    assert conjugate(CU12, -1) == pytest.approx(-LOG3, abs=1e-15)
    assert conjugate(CU12, 0) == -1.0
    for n, s in [(3, 4), (5, 2)]:
        cu = CliqueUnion.of([n] * s)
        for g in np.linspace(-1, 0, 7):
            assert conjugate(cu, g) == pytest.approx(g * math.log2(n) - math.log2(s), abs=1e-12)
    with pytest.raises(InputError):
        conjugate(CU12, 0.1)


def test_derivative_examples():
    assert derivative(CU12, 0.3) == 0
    assert derivative(CU12, 0.9) == -1
    assert derivative(CU12, 0.6) == pytest.approx(-0.584963, abs=1e-6)


def test_corner_points():
    assert free_lunch_point(CU12) == 0.5
    assert packing_point(CU12) == pytest.approx(2 / 3, abs=1e-15)
    g = CliqueUnion.of([2] * 12 + [8] * 6)
    assert free_lunch_point(g) == pytest.approx(5 / 3, abs=1e-12)
    assert packing_point(g) == pytest.approx(7 / 3, abs=1e-12)
    u = CliqueUnion.of([5] * 4)
    assert free_lunch_point(u) == pytest.approx(math.log2(5)) == packing_point(u)


def test_family_and_cover_bounds():
    assert family_lower_bound([1, 2], 1, 0.25) == 1.0
    assert family_lower_bound([2, 2, 2, 2], 2, 0.5) == 1.0
    assert family_lower_bound([2, 4, 5], 2, 0) == pytest.approx(0.5 * LOG3, abs=1e-15)
    with pytest.raises(InputError):
        family_lower_bound([2, 2], 1, 2.5)
    assert cover_upper_bound([2, 2, 1], 0) == pytest.approx(LOG3)
    for rho in (0.0, 0.7, 1.9):
        assert cover_upper_bound([7], rho) == 0
        assert cover_upper_bound([3, 3, 3], rho) == pytest.approx(min(LOG3, 2 * LOG3 - rho), abs=1e-15)
    assert cover_upper_bound([2, 2], 0.5) == 1.0


def test_uniform_closed_form():
    cu = CliqueUnion.of([4, 4, 4])
    r = np.linspace(0, cu.log_m, 50)
    assert np.allclose(capacity_array(cu, r), np.minimum(LOG3, cu.log_m - r), atol=1e-15)
    with pytest.raises(InputError):
        derivative(cu, 1.0)


@settings(max_examples=150, deadline=None)
@given(sizes_st, st.floats(0, 1))
def test_root_residual(sizes, u):
    cu = CliqueUnion.of(sizes)
    assume(not cu.uniform)
    rho = free_lunch_point(cu) + u * (packing_point(cu) - free_lunch_point(cu))
    sol = beta_for_rho(cu, rho)
    assert 0 <= sol.beta <= 1 and sol.value >= 0
    assert abs(float(tilted_mean(cu, sol.beta)[0]) - rho) < 1e-10


@settings(max_examples=150, deadline=None)
@given(sizes_st, st.floats(0, 1))
def test_matches_numeric_infimum(sizes, u):
    cu = CliqueUnion.of(sizes)
    rho = u * cu.log_m
    assert abs(capacity(cu, rho) - capacity_by_infimum(sizes, rho)) < 1e-8


@settings(max_examples=100, deadline=None)
@given(sizes_st)
def test_shape_of_curve(sizes):
    cu = CliqueUnion.of(sizes)
    r = np.linspace(0, cu.log_m, 401)
    v = capacity_array(cu, r)
    assert v[0] == pytest.approx(math.log2(cu.s), abs=1e-12)
    assert abs(v[-1]) < 1e-12
    assert np.all(np.diff(v) <= 1e-12)
    assert np.all(v[:-2] - 2 * v[1:-1] + v[2:] <= 1e-10)  # concave
    c = math.log2(cu.s)
    if cu.log_m > 0:
        assert np.all(v >= c / cu.log_m * (cu.log_m - r) - 1e-12)
    assert np.all(v <= np.minimum(c, cu.log_m - r) + 1e-12)


@settings(max_examples=100, deadline=None)
@given(sizes_st, st.floats(0.02, 0.98))
def test_derivative_matches_finite_difference(sizes, u):
    cu = CliqueUnion.of(sizes)
    assume(not cu.uniform)
    rho = u * cu.log_m
    lo, hi = free_lunch_point(cu), packing_point(cu)
    h = 1e-6
    # keep the stencil off the two kinks
    assume(min(abs(rho - lo), abs(rho - hi)) > 10 * h)
    fd = (capacity(cu, rho + h) - capacity(cu, rho - h)) / (2 * h)
    assert abs(derivative(cu, rho) - fd) < 1e-5


def test_conjugate_duality_on_fine_grid():
    rng = np.random.default_rng(4)
    for _ in range(30):
        cu = CliqueUnion.of(rng.integers(1, 10, rng.integers(1, 6)).tolist())
        r = np.linspace(0, cu.log_m, 20001)
        v = capacity_array(cu, r)
        for g in np.linspace(-1, 0, 21):
            assert abs(conjugate(cu, g) - np.min(g * r - v)) < 1e-6
