"""Riemann zeta, Euler eta and Riemann xi with first derivatives.

Routes
------
zeta
    Euler-Maclaurin summation for Re s >= ``reflect_below_sigma``.  Further
    left the value comes from the symmetry xi(s) = xi(1 - s) with

        xi(s) = (s - 1) Gamma(1 + s/2) pi^(-s/2) zeta(s),

    i.e. zeta(s) = exp(L(s)) zeta(1 - s), with L(s) assembled from log-gamma
    values in log space.
eta
    Borwein-accelerated alternating series for Re s > 0, otherwise
    (1 - 2^(1-s)) zeta(s).
xi
    The defining product for Re s >= ``reflect_below_sigma``, and xi(1 - s)
    to the left of it.

All ``*_values`` kernels take complex arrays and return ``(value, err,
deriv, deriv_err)``; error estimates are heuristic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gamma import BERNOULLI, EPS, digamma_values, log_gamma_values
from .types import (
    EvalResult,
    FunctionId,
    PointLike,
    PoleError,
    PrecisionError,
    as_complex,
    as_complex_array,
)

LOG_PI = math.log(math.pi)
LOG_2 = math.log(2.0)
LOG_2PI = math.log(2 * math.pi)
_BORWEIN_RATE = math.log(3 + math.sqrt(8))

# complex elements per (points x terms) work block
_BLOCK = 1 << 21


@dataclass(frozen=True)
class EulerMaclaurinConfig:
    """Evaluation parameters.

    ``cutoff_n=None`` selects max(20, ceil(1.3 |t|), ceil(|sigma|)) per block
    of points.
    """

    cutoff_n: int | None = None
    bernoulli_terms: int = 10
    reflect_below_sigma: float = -0.5

    def __post_init__(self):
        if self.cutoff_n is not None and self.cutoff_n < 10:
            raise ValueError("cutoff_n must be >= 10")
        if not 2 <= self.bernoulli_terms <= 15:
            raise ValueError("bernoulli_terms must be in [2, 15]")
        if not self.reflect_below_sigma <= 0:
            raise ValueError("reflect_below_sigma must be <= 0")

    def cutoff_for(self, s: np.ndarray) -> int:
        if self.cutoff_n is not None:
            return self.cutoff_n
        if s.size == 0:
            return 20
        t = float(np.max(np.abs(s.imag)))
        sig = float(np.max(np.abs(s.real)))
        return max(20, math.ceil(1.3 * t), math.ceil(sig))


DEFAULT_EM = EulerMaclaurinConfig()


def _blocks(s: np.ndarray, width_of):
    """Yield index arrays of points sorted by |t|, sized to keep work blocks small."""
    order = np.argsort(np.abs(s.imag), kind="stable")
    i = 0
    n = order.size
    while i < n:
        width = width_of(s[order[min(n - 1, i + 255)]])
        size = max(256, _BLOCK // max(width, 1))
        j = min(n, i + size)
        yield order[i:j]
        i = j


@lru_cache(maxsize=None)
def _em_coefficients(m: int) -> np.ndarray:
    # B_{2k} / (2k)!, k = 1..m+1 (the last one feeds the error estimate)
    return np.array([BERNOULLI[k - 1] / math.factorial(2 * k) for k in range(1, m + 2)])


def _euler_maclaurin(s: np.ndarray, n_cut: int, m: int):
    """zeta and zeta' by Euler-Maclaurin with n_cut - 1 direct terms and m corrections."""
    logn = np.log(np.arange(1, n_cut, dtype=float))
    powers = np.exp(-np.multiply.outer(s, logn))
    total = powers.sum(axis=1)
    dtotal = -(powers @ logn)
    mags = np.exp(-np.multiply.outer(s.real, logn))
    abs_total = mags.sum(axis=1)
    abs_dtotal = mags @ logn
    abs_ddtotal = mags @ (logn * logn)
    abs_s = np.abs(s)

    big_n = float(n_cut)
    ln = math.log(big_n)
    n_pow = np.exp(-s * ln)  # N^-s
    sm1 = s - 1.0
    head = big_n * n_pow / sm1
    val = total + head + 0.5 * n_pow
    dval = dtotal - ln * head - head / sm1 - 0.5 * ln * n_pow

    coeffs = _em_coefficients(m)
    poly = s.copy()  # (s)(s+1)...(s+2k-2)
    dpoly = np.ones_like(s)
    pw = n_pow / big_n  # N^(-s-2k+1)
    term = dterm = None
    for k in range(1, m + 2):
        c = coeffs[k - 1]
        term = c * poly * pw
        dterm = c * (dpoly - ln * poly) * pw
        if k <= m:
            val = val + term
            dval = dval + dterm
            q = (s + (2 * k - 1)) * (s + 2 * k)
            dq = 2 * s + (4 * k - 1)
            dpoly = dpoly * q + poly * dq
            poly = poly * q
            pw = pw / (big_n * big_n)
    # exp(-s log n) carries a relative rounding error of about |s| log n eps
    err = np.abs(term) + 16 * EPS * (abs_total + abs_s * abs_dtotal + np.abs(head) + 1.0)
    derr = np.abs(dterm) + 16 * EPS * (
        abs_dtotal + abs_s * abs_ddtotal + (ln + 1.0 / np.abs(sm1)) * np.abs(head) + 1.0
    )
    return val, err, dval, derr


def _zeta_direct(s: np.ndarray, cfg: EulerMaclaurinConfig):
    val = np.empty_like(s)
    dval = np.empty_like(s)
    err = np.empty(s.shape)
    derr = np.empty(s.shape)
    for idx in _blocks(s, lambda p: cfg.cutoff_for(np.atleast_1d(p))):
        chunk = s[idx]
        # cutoff from the largest |t| in the block (points are sorted by |t|)
        n_cut = cfg.cutoff_for(chunk)
        v, e, dv, de = _euler_maclaurin(chunk, n_cut, cfg.bernoulli_terms)
        val[idx], err[idx], dval[idx], derr[idx] = v, e, dv, de
    return val, err, dval, derr


def _trivial_zero_derivative(k: np.ndarray) -> np.ndarray:
    """zeta'(-2k) = (-1)^k (2k)! zeta(2k + 1) / (2 (2 pi)^(2k))."""
    z, _, _, _ = _zeta_direct((2.0 * k + 1.0).astype(complex), DEFAULT_EM)
    logmag = np.array([math.lgamma(2 * kk + 1) for kk in k]) - 2 * k * LOG_2PI - LOG_2
    return np.where(k % 2 == 0, 1.0, -1.0) * np.exp(logmag) * z.real


def _reflection_factor(s: np.ndarray):
    """L(s) with zeta(s) = exp(L) zeta(1 - s), its derivative, and an error estimate."""
    g1, e1 = log_gamma_values((3.0 - s) / 2.0)
    g2, e2 = log_gamma_values(1.0 + s / 2.0)
    a = np.log(-s)
    b = -(1.0 - s) / 2.0 * LOG_PI
    c = -np.log(s - 1.0)
    d = s / 2.0 * LOG_PI
    logfac = a + g1 + b + c - g2 + d
    p1, pe1, _ = digamma_values((3.0 - s) / 2.0)
    p2, pe2, _ = digamma_values(1.0 + s / 2.0)
    dlog = 1.0 / s - 0.5 * p1 + LOG_PI - 1.0 / (s - 1.0) - 0.5 * p2
    err_log = e1 + e2 + 8 * EPS * (np.abs(a) + np.abs(g1) + np.abs(b) + np.abs(c) + np.abs(g2) + np.abs(d))
    err_dlog = 0.5 * (pe1 + pe2) + 8 * EPS * (np.abs(dlog) + 2.0)
    return logfac, dlog, err_log, err_dlog


def _zeta_reflected(s: np.ndarray, cfg: EulerMaclaurinConfig):
    val = np.zeros_like(s)
    dval = np.zeros_like(s)
    err = np.zeros(s.shape)
    derr = np.zeros(s.shape)
    trivial = (s.imag == 0) & (s.real == np.floor(s.real)) & (np.mod(s.real, 2) == 0)
    if trivial.any():
        k = (-s.real[trivial] / 2).astype(int)
        dval[trivial] = _trivial_zero_derivative(k)
        derr[trivial] = 16 * EPS * np.abs(dval[trivial])
    rest = ~trivial
    if rest.any():
        sr = s[rest]
        z1, e1, dz1, de1 = _zeta_direct(1.0 - sr, cfg)
        logfac, dlog, err_log, err_dlog = _reflection_factor(sr)
        fac = np.exp(logfac)
        v = fac * z1
        dv = fac * (z1 * dlog - dz1)
        val[rest] = v
        dval[rest] = dv
        rel = e1 / np.abs(z1) + err_log
        err[rest] = np.abs(v) * rel + 1e-300
        derr[rest] = np.abs(fac) * (np.abs(dlog) * e1 + np.abs(z1) * err_dlog + de1) + np.abs(dv) * err_log
    return val, err, dval, derr


def zeta_values(s, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Vectorised zeta and zeta'; returns ``(value, err, deriv, deriv_err)``.

    The pole s = 1 yields non-finite entries; use :func:`zeta` for checked
    scalar evaluation.
    """
    s = as_complex_array(s)
    left = s.real < cfg.reflect_below_sigma
    out = [np.empty_like(s), np.empty(s.shape), np.empty_like(s), np.empty(s.shape)]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore", under="ignore"):
        for mask, route in ((~left, _zeta_direct), (left, _zeta_reflected)):
            if mask.any():
                for arr, part in zip(out, route(s[mask], cfg)):
                    arr[mask] = part
    return tuple(out)


def zeta_values_em(s, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Euler-Maclaurin route only, for any sigma; used to cross-check the reflection route."""
    s = as_complex_array(s)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore", under="ignore"):
        return _zeta_direct(s, cfg)


@lru_cache(maxsize=64)
def _borwein_weights(n: int):
    """Signed weights (-1)^k (1 - d_k/d_n), k = 0..n-1, of Borwein's eta acceleration."""
    i = np.arange(n + 1)
    lg = np.array([math.lgamma(n + j) - math.lgamma(n - j + 1) - math.lgamma(2 * j + 1) for j in i])
    logterm = lg + i * math.log(4.0)
    c = np.exp(logterm - logterm.max())
    # 1 - d_k/d_n = (sum_{j>k} c_j) / (sum_j c_j), formed from the tail to avoid cancellation
    tail = np.cumsum(c[::-1])[::-1]
    w = tail[1:] / tail[0]
    k = np.arange(n)
    signed = np.where(k % 2 == 0, 1.0, -1.0) * w
    logk = np.log(k + 1.0)
    signed.setflags(write=False)
    logk.setflags(write=False)
    return signed, logk, w


def _eta_series(s: np.ndarray, n: int):
    signed, logk, w = _borwein_weights(n)
    powers = np.exp(-np.multiply.outer(s, logk))
    val = powers @ signed
    dval = -(powers @ (signed * logk))
    mags = np.exp(-np.multiply.outer(s.real, logk))
    abs_sum = mags @ w
    abs_dsum = mags @ (w * logk)
    lg, _ = log_gamma_values(s)
    log_trunc = LOG_2 - n * _BORWEIN_RATE - lg.real
    trunc = np.exp(np.minimum(log_trunc, 700.0))
    err = trunc + 16 * EPS * (abs_sum + 1.0)
    derr = trunc * 2 * math.log(n + 1.0) + 16 * EPS * (abs_dsum + 1.0)
    return val, err, dval, derr


def _eta_direct(s: np.ndarray, cfg: EulerMaclaurinConfig):
    val = np.empty_like(s)
    dval = np.empty_like(s)
    err = np.empty(s.shape)
    derr = np.empty(s.shape)
    for idx in _blocks(s, lambda p: 2 * cfg.cutoff_for(np.atleast_1d(p))):
        chunk = s[idx]
        v, e, dv, de = _eta_series(chunk, 2 * cfg.cutoff_for(chunk))
        val[idx], err[idx], dval[idx], derr[idx] = v, e, dv, de
    return val, err, dval, derr


def _eta_from_zeta(s: np.ndarray, cfg: EulerMaclaurinConfig):
    z, ez, dz, dez = zeta_values(s, cfg)
    p = np.exp((1.0 - s) * LOG_2)  # 2^(1-s)
    fac = 1.0 - p
    val = fac * z
    dval = p * LOG_2 * z + fac * dz
    err = np.abs(fac) * ez + 4 * EPS * np.abs(val)
    derr = np.abs(p) * LOG_2 * ez + np.abs(fac) * dez + 4 * EPS * (np.abs(dval) + np.abs(p * z))
    return val, err, dval, derr


def eta_values(s, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Vectorised eta and eta'; returns ``(value, err, deriv, deriv_err)``."""
    s = as_complex_array(s)
    right = s.real > 0
    out = [np.empty_like(s), np.empty(s.shape), np.empty_like(s), np.empty(s.shape)]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore", under="ignore"):
        for mask, route in ((right, _eta_direct), (~right, _eta_from_zeta)):
            if mask.any():
                for arr, part in zip(out, route(s[mask], cfg)):
                    arr[mask] = part
    return tuple(out)


def eta_values_relation(s, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """eta through (1 - 2^(1-s)) zeta(s) for every point; the second route on Re s > 0."""
    s = as_complex_array(s)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore", under="ignore"):
        return _eta_from_zeta(s, cfg)


def gamma_factor_logderiv(s) -> np.ndarray:
    """1/(s-1) + Psi(1 + s/2)/2 - log(pi)/2, the log-derivative of xi/zeta."""
    s = as_complex_array(s)
    psi, _, _ = digamma_values(1.0 + s / 2.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        return 1.0 / (s - 1.0) + 0.5 * psi - 0.5 * LOG_PI


def _xi_parts(s: np.ndarray, cfg: EulerMaclaurinConfig):
    """Pieces of xi on the direct region: log of the gamma factor, zeta, zeta', factor log-derivative."""
    lg, elg = log_gamma_values(1.0 + s / 2.0)
    log_g = np.log(s - 1.0) + lg - s / 2.0 * LOG_PI
    err_log_g = elg + 8 * EPS * (np.abs(log_g) + 1.0)
    z, ez, dz, dez = zeta_values(s, cfg)
    lgd = gamma_factor_logderiv(s)
    return log_g, err_log_g, z, ez, dz, dez, lgd


def _xi_direct(s: np.ndarray, cfg: EulerMaclaurinConfig):
    at_one = s == 1.0
    if at_one.any():
        # removable singularity: average of the two neighbours
        out = _xi_direct(np.where(at_one, 1.0 + 1e-6, s), cfg)
        lo = _xi_direct(np.full(int(at_one.sum()), 1.0 - 1e-6, dtype=complex), cfg)
        val, err, dval, derr = (a.copy() for a in out)
        val[at_one] = 0.5 * (val[at_one] + lo[0])
        dval[at_one] = 0.5 * (dval[at_one] + lo[2])
        err[at_one] += 1e-12
        derr[at_one] += 1e-12
        return val, err, dval, derr
    log_g, err_log_g, z, ez, dz, dez, lgd = _xi_parts(s, cfg)
    g = np.exp(log_g)
    val = g * z
    combo = dz + z * lgd
    dval = g * combo
    err = np.abs(g) * ez + np.abs(val) * err_log_g
    derr = np.abs(g) * (dez + np.abs(lgd) * ez) + np.abs(dval) * err_log_g + 8 * EPS * np.abs(g * z * lgd)
    return val, err, dval, derr


def xi_values(s, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Vectorised xi and xi'; returns ``(value, err, deriv, deriv_err)``."""
    s = as_complex_array(s)
    left = s.real < cfg.reflect_below_sigma
    src = np.where(left, 1.0 - s, s)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore", under="ignore"):
        val, err, dval, derr = _xi_direct(src, cfg)
    dval = np.where(left, -dval, dval)
    return val, err, dval, derr


def xi_log_abs(s, cfg: EulerMaclaurinConfig = DEFAULT_EM) -> np.ndarray:
    """log|xi(s)| without forming xi, so it stays finite where |xi| underflows."""
    s = as_complex_array(s)
    src = np.where(s.real < cfg.reflect_below_sigma, 1.0 - s, s)
    out = np.empty(s.shape)
    one = src == 1.0
    with np.errstate(divide="ignore", invalid="ignore", over="ignore", under="ignore"):
        if one.any():
            out[one] = np.log(np.abs(_xi_direct(src[one], cfg)[0]))
        rest = ~one
        if rest.any():
            log_g, _, z, _, _, _, _ = _xi_parts(src[rest], cfg)
            out[rest] = log_g.real + np.log(np.abs(z))
    return out


_KERNELS = {FunctionId.ZETA: zeta_values, FunctionId.ETA: eta_values, FunctionId.XI: xi_values}


def values(f: FunctionId | str, s, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Dispatch to the kernel for ``f``."""
    return _KERNELS[FunctionId.parse(f)](s, cfg)


def _scalar(f: FunctionId, s: PointLike, cfg, derivative: bool, tol: float | None) -> EvalResult:
    z = as_complex(s)
    if f is FunctionId.ZETA and z == 1:
        raise PoleError("zeta has a pole at s = 1")
    val, err, dval, derr = _KERNELS[f](z, cfg)
    v, e = (dval[0], derr[0]) if derivative else (val[0], err[0])
    if not (np.isfinite(v.real) and np.isfinite(v.imag) and np.isfinite(e)):
        raise PrecisionError(f"{f.value} evaluation at {z} did not produce a finite value")
    if tol is not None and e > tol:
        raise PrecisionError(f"{f.value} error estimate {e:.3g} exceeds tolerance {tol:.3g}")
    return EvalResult(complex(v), float(e), rigorous=False)


def zeta(s: PointLike, cfg: EulerMaclaurinConfig = DEFAULT_EM, tol: float | None = None) -> EvalResult:
    """Riemann zeta(s); PoleError at s = 1."""
    return _scalar(FunctionId.ZETA, s, cfg, False, tol)


def eta(s: PointLike, cfg: EulerMaclaurinConfig = DEFAULT_EM, tol: float | None = None) -> EvalResult:
    """Euler eta(s) = sum (-1)^(n+1) n^-s, continued to the whole plane."""
    return _scalar(FunctionId.ETA, s, cfg, False, tol)


def xi(s: PointLike, cfg: EulerMaclaurinConfig = DEFAULT_EM, tol: float | None = None) -> EvalResult:
    """Riemann xi(s) = (s - 1) Gamma(1 + s/2) pi^(-s/2) zeta(s)."""
    return _scalar(FunctionId.XI, s, cfg, False, tol)


def derivative(
    f: FunctionId | str, s: PointLike, cfg: EulerMaclaurinConfig = DEFAULT_EM, tol: float | None = None
) -> EvalResult:
    """f'(s) for f in zeta, eta, xi."""
    return _scalar(FunctionId.parse(f), s, cfg, True, tol)
