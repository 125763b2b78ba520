"""Logarithmic derivatives f'/f of zeta, eta, xi and the gaps between them.

For holomorphic f without zeros, Re(f'/f) = d log|f| / d sigma, so its sign
is the direction in which |f| moves along a horizontal line.  The two gaps

    Re(eta'/eta) - Re(zeta'/zeta) = log 2 * Re(1 / (2^(s-1) - 1))
    Re(xi'/xi) - Re(zeta'/zeta)   = Re(1/(s-1)) + Re Psi(s/2 + 1)/2 - log(pi)/2

order the three growth rates.
"""

from __future__ import annotations

import math

import numpy as np

from .gamma import digamma_values
from .types import (
    FunctionId,
    PointLike,
    PoleError,
    ZeroOfFunctionError,
    as_complex,
    as_complex_array,
)
from .zeta import (
    DEFAULT_EM,
    LOG_2,
    LOG_PI,
    EulerMaclaurinConfig,
    eta_values,
    gamma_factor_logderiv,
    xi_log_abs,
    xi_values,
    zeta_values,
)

ZERO_TOLERANCE = 1e-12


def zero_tolerance(s) -> np.ndarray:
    """Modulus at or below which a point counts as a zero: 1e-12 (1 + |s|)."""
    return ZERO_TOLERANCE * (1.0 + np.abs(s))


def xi_logderiv_via_zeta(s, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> np.ndarray:
    """xi'/xi(s) = zeta'/zeta(s) + 1/(s-1) + Psi(s/2+1)/2 - log(pi)/2 at every point.

    No use is made of xi(s) = xi(1 - s); this is the analytic route that the
    Hadamard sum and the symmetry checks compare against.
    """
    s = as_complex_array(s)
    z, _, dz, _ = zeta_values(s, cfg)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = dz / z + gamma_factor_logderiv(s)
        # trivial zeros of zeta cancel against poles of Gamma(1 + s/2)
        trivial = (s.imag == 0) & (s.real < 0) & (np.mod(s.real, 2) == 0)
        if trivial.any():
            xv, _, xdv, _ = xi_values(s[trivial], cfg)
            out[trivial] = xdv / xv
    return out


def log_derivative_values(f: FunctionId | str, s, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Vectorised f'/f.

    Returns ``(ratio, modulus)`` where ``modulus`` is the quantity compared
    with :func:`zero_tolerance`.  For xi this is |zeta| at s or 1 - s (whichever
    has Re >= 1/2): |xi| itself decays like exp(-pi |t| / 4) and would
    otherwise fall under any absolute tolerance for moderate |t|.
    """
    f = FunctionId.parse(f)
    s = as_complex_array(s)
    if f is FunctionId.ZETA:
        v, _, dv, _ = zeta_values(s, cfg)
        with np.errstate(divide="ignore", invalid="ignore"):
            return dv / v, np.abs(v)
    if f is FunctionId.ETA:
        v, _, dv, _ = eta_values(s, cfg)
        with np.errstate(divide="ignore", invalid="ignore"):
            return dv / v, np.abs(v)
    left = s.real < cfg.reflect_below_sigma
    src = np.where(left, 1.0 - s, s)
    near_pole = np.abs(src - 1.0) < 0.1
    ratio = np.empty_like(s)
    modulus = np.empty(s.shape)
    z, _, dz, _ = zeta_values(src, cfg)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio[:] = dz / z + gamma_factor_logderiv(src)
        if near_pole.any():
            xv, _, xdv, _ = xi_values(src[near_pole], cfg)
            ratio[near_pole] = xdv / xv
    ratio = np.where(left, -ratio, ratio)
    modulus[:] = np.where(near_pole, np.inf, np.abs(z))
    return ratio, modulus


def log_abs_values(f: FunctionId | str, s, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> np.ndarray:
    """log|f(s)|; finite for xi even where |xi| underflows."""
    f = FunctionId.parse(f)
    if f is FunctionId.XI:
        return xi_log_abs(s, cfg)
    kernel = zeta_values if f is FunctionId.ZETA else eta_values
    v = kernel(as_complex_array(s), cfg)[0]
    with np.errstate(divide="ignore"):
        return np.log(np.abs(v))


def log_derivative(f: FunctionId | str, s: PointLike, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> complex:
    """f'(s)/f(s); raises ZeroOfFunctionError at (numerical) zeros of f."""
    f = FunctionId.parse(f)
    z = as_complex(s)
    if f is FunctionId.ZETA and z == 1:
        raise PoleError("zeta has a pole at s = 1")
    ratio, modulus = log_derivative_values(f, z, cfg)
    if modulus[0] <= zero_tolerance(z):
        raise ZeroOfFunctionError(f"|{f.value}({z})| = {modulus[0]:.3g} is below the zero tolerance")
    return complex(ratio[0])


def log_derivative_re(f: FunctionId | str, s: PointLike, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> float:
    """Re(f'(s)/f(s)), the relative rate of change of |f| in sigma."""
    return log_derivative(f, s, cfg).real


def eta_zeta_gap_values(s) -> np.ndarray:
    """log 2 * (2^(sigma-1) cos(t log 2) - 1) / |2^(s-1) - 1|^2."""
    s = as_complex_array(s)
    sig, t = s.real, s.imag
    a = np.exp((sig - 1.0) * LOG_2)
    num = a * np.cos(t * LOG_2) - 1.0
    den = np.abs(np.exp((s - 1.0) * LOG_2) - 1.0) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        return LOG_2 * num / den


def eta_zeta_gap(s: PointLike) -> float:
    """Re(log 2 / (2^(s-1) - 1)); negative whenever sigma < 1."""
    z = as_complex(s)
    if abs(2.0 ** (z - 1) - 1.0) < 1e-14:
        raise PoleError(f"2^(s-1) = 1 at s = {z}")
    return float(eta_zeta_gap_values(z)[0])


def xi_zeta_gap_values(s) -> np.ndarray:
    s = as_complex_array(s)
    psi, _, _ = digamma_values(s / 2.0 + 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        return (1.0 / (s - 1.0)).real + 0.5 * psi.real - 0.5 * LOG_PI


def xi_zeta_gap(s: PointLike) -> float:
    """Re(1/(s-1)) + Re Psi(s/2 + 1)/2 - log(pi)/2."""
    z = as_complex(s)
    if z == 1:
        raise PoleError("1/(s-1) has a pole at s = 1")
    return float(xi_zeta_gap_values(z)[0])


def xi_logderiv_reflection_defect(s: PointLike, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> float:
    """|xi'/xi(s) + xi'/xi(1-s)|, both sides through the zeta route."""
    z = as_complex(s)
    pts = np.array([z, 1.0 - z])
    zv = zeta_values(pts, cfg)[0]
    tol = zero_tolerance(pts)
    if np.any(np.abs(zv) <= tol) and not np.any(pts == 1.0):
        raise ZeroOfFunctionError(f"xi vanishes (numerically) at {z} or {1 - z}")
    r = xi_logderiv_via_zeta(pts, cfg)
    if np.any(pts == 1.0):
        xv, _, xdv, _ = xi_values(pts, cfg)
        r = xdv / xv
    return float(abs(r[0] + r[1]))


def gap_floor_claimed() -> float:
    """-1/16 + 1.0048 - log(pi)/2, the advertised lower bound for the xi-zeta gap."""
    return -1.0 / 16 + 1.0048 - 0.5 * math.log(math.pi)
