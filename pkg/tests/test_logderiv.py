import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import von_mangoldt_sum
from zetamono import (
    FunctionId,
    PoleError,
    ZeroOfFunctionError,
    eta_zeta_gap,
    log_derivative,
    log_derivative_re,
    xi_zeta_gap,
    zero_tolerance,
)
from zetamono.logderiv import (
    eta_zeta_gap_values,
    gap_floor_claimed,
    log_derivative_values,
    xi_logderiv_reflection_defect,
    xi_logderiv_via_zeta,
    xi_zeta_gap_values,
)
from zetamono.verification import CHAIN_GRID, chain_quantities


def test_signs_at_examples():
    assert log_derivative_re("xi", 2) > 0
    assert log_derivative_re("zeta", -3 + 10j) < 0


def test_zeta_logderiv_at_two_against_dirichlet_series():
    limit = 10**6
    # tail of sum Lambda(n)/n^2 beyond N is about 1/N by the prime number theorem
    ref = -von_mangoldt_sum(2.0, limit)
    assert abs(log_derivative_re("zeta", 2) - ref) < 2.0 / limit
    assert log_derivative_re("zeta", 2) == pytest.approx(-0.5699, abs=1e-4)


def test_zero_raises():
    with pytest.raises(ZeroOfFunctionError):
        log_derivative("zeta", complex(0.5, 14.134725141734693))
    with pytest.raises(ZeroOfFunctionError):
        log_derivative("eta", complex(1, 2 * math.pi / math.log(2)))
    with pytest.raises(PoleError):
        log_derivative("zeta", 1)


def test_zero_tolerance_scales():
    assert zero_tolerance(0) == 1e-12
    assert zero_tolerance(3 + 4j) == pytest.approx(6e-12)


def test_eta_zeta_gap_examples():
    assert eta_zeta_gap(0) == pytest.approx(-2 * math.log(2), abs=1e-12)
    assert eta_zeta_gap(0.9 + 3j) < 0
    s = 0.5 + 8j
    diff = log_derivative_re("eta", s) - log_derivative_re("zeta", s)
    assert abs(eta_zeta_gap(s) - diff) < 1e-8
    with pytest.raises(PoleError):
        eta_zeta_gap(complex(1, 2 * math.pi / math.log(2)))


def test_eta_zeta_gap_closed_form_matches_complex_expression():
    rng = np.random.default_rng(2)
    s = rng.uniform(-10, 1, 300) + 1j * rng.uniform(-50, 50, 300)
    direct = (math.log(2) / (2.0 ** (s - 1) - 1)).real
    assert np.allclose(eta_zeta_gap_values(s), direct, rtol=1e-12, atol=1e-14)


@settings(max_examples=200, deadline=None)
@given(st.floats(-40, 0.999), st.floats(-1e3, 1e3))
def test_eta_zeta_gap_negative_left_of_one(sigma, t):
    assert eta_zeta_gap(complex(sigma, t)) < 0


def test_eta_zeta_gap_sign_random():
    rng = np.random.default_rng(0)
    s = rng.uniform(-20, 1, 10_000) + 1j * rng.uniform(-100, 100, 10_000)
    assert np.all(eta_zeta_gap_values(s[s.real < 1]) < 0)


def test_xi_zeta_gap_examples():
    s = 8j
    assert (1 / (s - 1)).real >= -1 / 16
    s = 0.25 + 10j
    diff = log_derivative_re("xi", s) - log_derivative_re("zeta", s)
    assert abs(xi_zeta_gap(s) - diff) < 1e-8
    with pytest.raises(PoleError):
        xi_zeta_gap(1)


def test_gap_floor_value():
    assert gap_floor_claimed() == pytest.approx(0.3699, abs=5e-5)


def test_xi_zeta_gap_floor_on_chain_grid():
    # The advertised floor is 0.3699 with 0.36 kept as the pass mark.  The grid
    # minimum is about 0.082 (near sigma = -2.2, |t| = 8), so this fails.
    pts = CHAIN_GRID.points().ravel()
    gap = xi_zeta_gap_values(pts)
    assert gap.min() > 0.36, f"min gap {gap.min():.6f} at {pts[np.argmin(gap)]}"


def test_xi_zeta_gap_positive_on_chain_grid():
    assert xi_zeta_gap_values(CHAIN_GRID.points().ravel()).min() > 0


def test_xi_zeta_gap_minimum_against_mpmath(mp):
    s = complex(-2.2, 8)
    w = mp.mpc(s.real, s.imag)
    ref = (1 / (w - 1)).real + mp.digamma(w / 2 + 1).real / 2 - mp.log(mp.pi) / 2
    assert abs(xi_zeta_gap(s) - float(ref)) < 1e-13


@pytest.mark.parametrize("s", [2 + 9j, -1 + 20j])
def test_reflection_defect(s):
    r = log_derivative("xi", s)
    assert xi_logderiv_reflection_defect(s) <= 1e-8 * (1 + abs(r))


def test_critical_line_real_part():
    assert abs(log_derivative_re("xi", 0.5 + 30j)) < 1e-8


def test_analytic_xi_route_matches_symmetric_route():
    rng = np.random.default_rng(9)
    s = rng.uniform(-10, 10, 200) + 1j * rng.uniform(-80, 80, 200)
    a = xi_logderiv_via_zeta(s)
    b, _ = log_derivative_values("xi", s)
    assert np.allclose(a, b, rtol=1e-9, atol=1e-10)


def test_chain_and_gap_reproduction():
    q = chain_quantities()
    assert not q["flagged"].any()
    assert np.all(q["eta"] < q["zeta"]) and np.all(q["zeta"] < q["xi"])
    assert np.max(np.abs((q["eta"] - q["zeta"]) - q["eta_gap"])) <= 1e-8
    assert np.max(np.abs((q["xi"] - q["zeta"]) - q["xi_gap"])) <= 1e-8
    assert q["points"].size == CHAIN_GRID.size


def test_logderiv_against_mpmath(mp):
    rng = np.random.default_rng(21)
    for z in rng.uniform(-10, 3, 40) + 1j * rng.uniform(8, 100, 40):
        w = mp.mpc(z.real, z.imag)
        ref = complex(mp.zeta(w, derivative=1) / mp.zeta(w))
        assert abs(log_derivative("zeta", z) - ref) < 1e-10 * max(1, abs(ref))
