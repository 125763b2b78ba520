import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import loggamma_oracle, psi_oracle
from zetamono import PoleError, PrecisionError, StirlingConfig, bernoulli, digamma, g_b, g_b_max, gamma, log_gamma
from zetamono.gamma import (
    cot_real_part,
    cot_real_part_direct,
    digamma_reflection_defect,
    digamma_values,
)
from zetamono.types import ComplexPoint, EvalResult

EULER_GAMMA = 0.57721566490153286061

finite = st.floats(-10, 10, allow_nan=False)


def test_digamma_at_one():
    assert abs(digamma(1).value + EULER_GAMMA) < 1e-14


def test_digamma_quarter_reflection():
    # cot(pi/4) = 1
    d = digamma(0.25).value - digamma(0.75).value
    assert abs(d + math.pi) < 1e-13


def test_digamma_re_at_half_plus_8i_against_far_shift_oracle():
    ref = psi_oracle(complex(0.5, 8))
    r = digamma(complex(0.5, 8))
    assert abs(r.value - ref) < 1e-10
    assert r.value.real > 2.0096


@pytest.mark.parametrize("s", [complex(0.5, 8), 3 + 2j, complex(-7.3, 0.4), 1e-3 + 0j, complex(40, -300)])
def test_digamma_matches_oracle(s):
    assert abs(digamma(s).value - psi_oracle(s)) < 1e-10 * max(1, abs(psi_oracle(s)))


def test_digamma_matches_mpmath(mp):
    rng = np.random.default_rng(3)
    for s in rng.uniform(-20, 20, 50) + 1j * rng.uniform(-200, 200, 50):
        ref = complex(mp.digamma(mp.mpc(s.real, s.imag)))
        assert abs(digamma(s).value - ref) <= 1e-12 * max(1, abs(ref))


def test_digamma_poles():
    for s in (0, -1, -7):
        with pytest.raises(PoleError):
            digamma(s)


def test_digamma_precision_error():
    with pytest.raises(PrecisionError):
        digamma(3 + 1j, StirlingConfig(n_terms=1), tol=1e-30)


def test_digamma_rigorous_flag_only_on_direct_route():
    assert digamma(2 + 3j).rigorous
    assert not digamma(-2.5 + 3j).rigorous


def test_log_gamma_values():
    assert abs(log_gamma(1).value) < 1e-15
    assert abs(log_gamma(0.5).value - 0.5 * math.log(math.pi)) < 1e-14


def test_abs_gamma_2_plus_10i_against_recurrence_oracle():
    ref = math.exp(loggamma_oracle(2 + 10j).real)
    assert abs(abs(gamma(2 + 10j).value) - ref) < 1e-10 * ref


def test_log_gamma_principal_branch(mp):
    for s in (0.3 + 40j, -5.5 - 3j, -20.2 + 0.1j, 7 + 0j):
        ref = complex(mp.loggamma(mp.mpc(s.real, s.imag)))
        assert abs(log_gamma(s).value - ref) < 1e-12 * max(1, abs(ref))


def test_log_gamma_continuous_along_horizontal_line():
    x = np.linspace(-9.75, 10, 400)
    lg = np.array([log_gamma(complex(v, 2.0)).value for v in x])
    assert np.max(np.abs(np.diff(lg.imag))) < 0.2


def test_gamma_pole():
    with pytest.raises(PoleError):
        log_gamma(-3)


@pytest.mark.parametrize("s", [0.25, 0.3 + 2j, -3.7 + 0.5j])
def test_reflection_defect_examples(s):
    assert digamma_reflection_defect(s) <= 1e-10


def test_reflection_defect_at_integer():
    with pytest.raises(PoleError):
        digamma_reflection_defect(2)


def test_reflection_residual_random_points():
    rng = np.random.default_rng(11)
    s = rng.uniform(-10, 10, 200) + 1j * rng.uniform(-10, 10, 200)
    for z in s:
        allowed = max(1e-10, digamma(z).err_bound + digamma(1 - z).err_bound)
        assert digamma_reflection_defect(z) <= allowed


@settings(max_examples=60, deadline=None)
@given(st.floats(0.5, 30), st.floats(-60, 60))
def test_remainder_honesty(sigma, t):
    s = complex(sigma, t)
    lo = digamma(s, StirlingConfig(n_terms=2, shift_threshold=8))
    hi = digamma(s, StirlingConfig(n_terms=12, shift_threshold=30))
    assert abs(lo.value - hi.value) <= lo.err_bound + hi.err_bound


@settings(max_examples=80, deadline=None)
@given(finite, st.floats(0.01, 50))
def test_conjugate_symmetry(sigma, t):
    s = complex(sigma, t)
    a, b = digamma(s).value, digamma(s.conjugate()).value
    assert abs(a - b.conjugate()) <= 1e-14 * max(1, abs(a))
    a, b = log_gamma(s).value, log_gamma(s.conjugate()).value
    assert abs(a - b.conjugate()) <= 1e-14 * max(1, abs(a))


def test_re_digamma_positive_on_gamma_grid():
    sig = np.arange(-10, 10.001, 0.25)
    t = np.arange(1.3, 50.001, 0.25)
    pts = (sig[None, :] + 1j * t[:, None]).ravel()
    psi, _, _ = digamma_values(np.concatenate([pts, pts.conj()]))
    assert psi.real.min() > 0


def test_cot_real_part_examples():
    assert abs(cot_real_part(math.pi / 4) - 1.0) < 1e-15
    with pytest.raises(PoleError):
        cot_real_part(0.0)


@settings(max_examples=100, deadline=None)
@given(st.floats(-6, 6), st.floats(0.05, 5))
def test_cot_closed_form_matches_division(x, y):
    a = cot_real_part(complex(x, y))
    assert abs(a - cot_real_part_direct(complex(x, y))) <= 1e-12 * max(1, abs(a))
    assert abs(a - (1 / cmath.tan(complex(x, y))).real) <= 1e-12 * max(1, abs(a))


def test_g_b_brute_force_max():
    x = np.arange(0, 2 * math.pi, 1e-5)
    for b in (2 * math.sinh(1.0) ** 2, 0.1, 1.0, 10.0):
        assert abs(np.max(np.abs(g_b(x, b))) - g_b_max(b)) < 1e-6


def test_cot_below_3_exp_minus_2y_at_y_1():
    assert 1.0 > math.log(3) / 4
    for x in np.linspace(0.01, math.pi - 0.01, 300):
        assert abs(cot_real_part(complex(x, 1.0))) < 3 * math.exp(-2.0)


def test_bernoulli_table():
    assert bernoulli(2) == pytest.approx(1 / 6)
    assert bernoulli(12) == pytest.approx(-691 / 2730)
    with pytest.raises(ValueError):
        bernoulli(3)
    with pytest.raises(ValueError):
        bernoulli(64)


@pytest.mark.parametrize("kw", [dict(n_terms=0), dict(n_terms=31), dict(shift_threshold=7.9), dict(sector_theta=math.pi)])
def test_stirling_config_invariants(kw):
    with pytest.raises(ValueError):
        StirlingConfig(**kw)


def test_complex_point_and_eval_result_invariants():
    with pytest.raises(ValueError):
        ComplexPoint(float("nan"), 0.0)
    with pytest.raises(ValueError):
        ComplexPoint(0.0, float("inf"))
    with pytest.raises(ValueError):
        EvalResult(1.0, -1e-3)
    assert ComplexPoint(1, 2).s == 1 + 2j
