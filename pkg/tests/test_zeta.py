import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetamono import EulerMaclaurinConfig, FunctionId, PoleError, derivative, eta, xi, zeta
from zetamono.zeta import eta_values, eta_values_relation, zeta_values, zeta_values_em

FIRST_ORDINATE = 14.134725


def test_zeta_classical_values():
    assert abs(zeta(2).value - math.pi**2 / 6) < 1e-13
    assert abs(zeta(0).value + 0.5) < 1e-14
    assert abs(zeta(-1).value + 1 / 12) < 1e-14


def test_zeta_near_first_zero():
    assert abs(zeta(complex(0.5, FIRST_ORDINATE)).value) < 1e-6


def test_zeta_pole():
    with pytest.raises(PoleError):
        zeta(1)
    with pytest.raises(PoleError):
        derivative("zeta", 1)


def test_eta_values():
    assert abs(eta(1).value - math.log(2)) < 1e-14
    assert abs(eta(0).value - 0.5) < 1e-14
    assert abs(eta(complex(1, 2 * math.pi / math.log(2))).value) < 1e-12


def test_xi_values():
    a, b = abs(xi(0.3 + 10j).value), abs(xi(0.7 + 10j).value)
    assert abs(a / b - 1) < 1e-9
    assert abs(xi(0).value - xi(1).value) < 1e-12
    assert abs(xi(0).value - 0.5) < 1e-12


def test_xi_half_against_definition(mp):
    s = mp.mpf(0.5)
    ref = (s - 1) * mp.gamma(1 + s / 2) * mp.pi ** (-s / 2) * mp.zeta(s)
    assert abs(xi(0.5).value - float(ref)) < 1e-12
    assert abs(xi(0.5).value - 0.4971207781) < 1e-10


def test_derivative_examples():
    assert abs(derivative("zeta", 0).value + 0.5 * math.log(2 * math.pi)) < 1e-12
    h = 1e-5
    fd = (eta(2 + h).value - eta(2 - h).value) / (2 * h)
    assert abs(derivative("eta", 2).value - fd) < 1e-6
    assert abs(derivative("xi", 0.5).value) < 1e-13


@pytest.mark.parametrize("f", list(FunctionId))
def test_derivative_against_central_difference(f):
    rng = np.random.default_rng(7)
    s = rng.uniform(-5, 5, 100) + 1j * rng.uniform(-50, 50, 100)
    h = 1e-5
    for z in s:
        d = derivative(f, z).value
        fp = {FunctionId.ZETA: zeta, FunctionId.ETA: eta, FunctionId.XI: xi}[f]
        fd = (fp(z + h).value - fp(z - h).value) / (2 * h)
        # xi is tiny for large |t|, so compare relative to its local size
        scale = abs(fp(z).value) if f is FunctionId.XI else 1.0
        assert abs(d - fd) <= 1e-5 * (scale + abs(d))


@pytest.mark.parametrize("name", ["zeta", "eta", "xi"])
def test_against_mpmath(mp, name):
    rng = np.random.default_rng(5)
    s = rng.uniform(-20, 20, 60) + 1j * rng.uniform(-300, 300, 60)
    fn = {"zeta": zeta, "eta": eta, "xi": xi}[name]
    for z in s:
        w = mp.mpc(z.real, z.imag)
        if name == "zeta":
            ref = mp.zeta(w)
        elif name == "eta":
            ref = (1 - mp.power(2, 1 - w)) * mp.zeta(w)
        else:
            # evaluate xi on the right half where Gamma has no poles
            u = w if z.real >= 0.5 else 1 - w
            ref = (u - 1) * mp.gamma(1 + u / 2) * mp.pi ** (-u / 2) * mp.zeta(u)
        r = fn(z)
        ref = complex(ref)
        assert abs(r.value - ref) <= max(1e-10 * abs(ref), 1e-300) or abs(r.value - ref) <= 10 * r.err_bound


def test_eta_relation_consistency():
    rng = np.random.default_rng(13)
    s = rng.uniform(0.1, 5, 500) + 1j * rng.uniform(-100, 100, 500)
    a, ea, _, _ = eta_values(s)
    b, eb, _, _ = eta_values_relation(s)
    assert np.all(np.abs(a - b) <= ea + eb)


def test_functional_equation_residual():
    rng = np.random.default_rng(17)
    s = rng.uniform(-3, 4, 200) + 1j * rng.uniform(-100, 100, 200)
    for z in s:
        a, b = xi(z), xi(1 - z)
        assert abs(a.value - b.value) <= a.err_bound + b.err_bound


@settings(max_examples=60, deadline=None)
@given(st.floats(-20, 20), st.floats(0.1, 200), st.sampled_from(list(FunctionId)))
def test_conjugate_symmetry(sigma, t, f):
    fn = {FunctionId.ZETA: zeta, FunctionId.ETA: eta, FunctionId.XI: xi}[f]
    a, b = fn(complex(sigma, t)).value, fn(complex(sigma, -t)).value
    assert abs(a - b.conjugate()) <= 1e-13 * abs(a) + 1e-300


def test_route_agreement_on_left_strip():
    sig = np.arange(-2, -0.499, 0.1)
    t = np.arange(8, 100.001, 2.5)
    pts = (sig[None, :] + 1j * np.concatenate([t, -t])[:, None]).ravel()
    a, ea, _, _ = zeta_values(pts)
    b, eb, _, _ = zeta_values_em(pts)
    assert np.all(np.abs(a - b) <= ea + eb)


def test_vector_kernel_matches_scalar():
    s = np.array([2 + 0j, -3 + 10j, 0.5 + 20j])
    v, _, dv, _ = zeta_values(s)
    # blocks share one cutoff, so agreement is to rounding rather than bitwise
    for z, a, da in zip(s, v, dv):
        assert abs(a - zeta(z).value) <= 1e-14 * abs(a)
        assert abs(da - derivative("zeta", z).value) <= 1e-14 * abs(da)


def test_trivial_zero_and_its_derivative():
    assert zeta(-2).value == 0
    # zeta'(-2) = -zeta(3) / (4 pi^2)
    assert abs(derivative("zeta", -2).value + 1.2020569031595942 / (4 * math.pi**2)) < 1e-14


@pytest.mark.parametrize("kw", [dict(cutoff_n=9), dict(bernoulli_terms=1), dict(bernoulli_terms=16), dict(reflect_below_sigma=0.1)])
def test_config_invariants(kw):
    with pytest.raises(ValueError):
        EulerMaclaurinConfig(**kw)
