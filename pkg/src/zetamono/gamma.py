"""Complex log-gamma and digamma via the Stirling series.

Arguments are shifted upward with the recurrences

    Psi(s) = Psi(s + K) - sum_{j<K} 1/(s + j)
    log Gamma(s) = log Gamma(s + K) - sum_{j<K} log(s + j)

until they are large and inside the configured sector, then the asymptotic
series is applied.  The digamma remainder uses the Stieltjes estimate

    |R'_{2n}| <= sec(theta/2)^(2n+3) |B_{2n+2} / ((2n+2) w^(2n+2))|

so the truncation part of its error bound is rigorous.

The ``*_values`` functions are vectorised kernels over complex arrays; the
remaining public functions are the scalar API.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .types import EvalResult, PointLike, PoleError, PrecisionError, as_complex, as_complex_array

EPS = np.finfo(float).eps
LOG_2PI = math.log(2 * math.pi)


def _even_bernoulli(count: int) -> tuple:
    """Exact B_2, B_4, ..., B_{2*count} from the standard recurrence."""
    top = 2 * count
    b = [Fraction(0)] * (top + 1)
    b[0] = Fraction(1)
    for m in range(1, top + 1):
        b[m] = -sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1)
    return tuple(b[2 * k] for k in range(1, count + 1))


_BERNOULLI_EXACT = _even_bernoulli(31)
# BERNOULLI[k - 1] == B_{2k}, k = 1..31
BERNOULLI = tuple(float(x) for x in _BERNOULLI_EXACT)


def bernoulli(two_k: int) -> float:
    """Even Bernoulli number B_{2k} for 2 <= 2k <= 62."""
    if two_k % 2 or not 2 <= two_k <= 62:
        raise ValueError(f"only even indices 2..62 are tabulated, got {two_k}")
    return BERNOULLI[two_k // 2 - 1]


@dataclass(frozen=True)
class StirlingConfig:
    """Stirling series parameters.

    n_terms is the number n of Bernoulli terms kept in the tail sum, so the
    remainder involves B_{2n+2}.
    """

    n_terms: int = 8
    shift_threshold: float = 16.0
    sector_theta: float = math.pi / 2

    def __post_init__(self):
        if not 1 <= self.n_terms <= 30:
            raise ValueError("n_terms must be in [1, 30]")
        if not self.shift_threshold >= 8:
            raise ValueError("shift_threshold must be >= 8")
        if not 0 < self.sector_theta < math.pi:
            raise ValueError("sector_theta must lie in (0, pi)")

    @property
    def sector_factor(self) -> float:
        return 1.0 / math.cos(self.sector_theta / 2)


DEFAULT_STIRLING = StirlingConfig()


def _shift(z: np.ndarray, cfg: StirlingConfig, accumulate):
    """Shift z right by integers until |w| >= threshold and |arg w| < theta.

    ``accumulate(w)`` returns the per-step (value, magnitude) contributions,
    summed over the steps taken at each point.
    """
    w = z.copy()
    acc = np.zeros_like(z)
    acc_abs = np.zeros(z.shape)
    theta = cfg.sector_theta
    active = (np.abs(w) < cfg.shift_threshold) | (np.abs(np.angle(w)) >= theta)
    idx = np.flatnonzero(active)
    while idx.size:
        v, m = accumulate(w[idx])
        acc[idx] += v
        acc_abs[idx] += m
        w[idx] += 1.0
        wi = w[idx]
        keep = (np.abs(wi) < cfg.shift_threshold) | (np.abs(np.angle(wi)) >= theta)
        idx = idx[keep]
    return w, acc, acc_abs


def _recip(w):
    r = 1.0 / w
    return -r, np.abs(r)


def _logs(w):
    lw = np.log(w)
    return lw, np.abs(lw)


@lru_cache(maxsize=None)
def _psi_coefficients(n: int) -> np.ndarray:
    # B_{2k} / (2k), k = 1..n
    return np.array([BERNOULLI[k - 1] / (2 * k) for k in range(1, n + 1)])


@lru_cache(maxsize=None)
def _lgamma_coefficients(n: int) -> np.ndarray:
    # B_{2k} / (2k (2k - 1)), k = 1..n
    return np.array([BERNOULLI[k - 1] / (2 * k * (2 * k - 1)) for k in range(1, n + 1)])


def _horner(coeffs: np.ndarray, x: np.ndarray) -> np.ndarray:
    # sum_k coeffs[k-1] x^k
    acc = np.zeros_like(x)
    for c in coeffs[::-1]:
        acc = (acc + c) * x
    return acc


def _psi_right(z: np.ndarray, cfg: StirlingConfig):
    """Digamma without reflection; valid for any non-pole z."""
    n = cfg.n_terms
    w, acc, acc_abs = _shift(z, cfg, _recip)
    winv = 1.0 / w
    logw = np.log(w)
    tail = _horner(_psi_coefficients(n), winv * winv)
    series = logw - 0.5 * winv - tail
    absw = np.abs(w)
    trunc = cfg.sector_factor ** (2 * n + 3) * abs(BERNOULLI[n]) / ((2 * n + 2) * absw ** (2 * n + 2))
    rounding = 8 * EPS * (np.abs(logw) + np.abs(winv) + acc_abs + 1.0)
    return series + acc, trunc + rounding


def pi_cot_pi(s) -> np.ndarray:
    """pi * cot(pi s), evaluated without overflow for large |Im s|."""
    z = np.pi * as_complex_array(s)
    flip = z.imag < 0
    zz = np.where(flip, np.conj(z), z)
    # |exp(2i zz)| <= 1 on the upper half plane
    with np.errstate(divide="ignore", invalid="ignore"):
        c = 1j * (np.exp(2j * zz) + 1.0) / np.expm1(2j * zz)
    return np.pi * np.where(flip, np.conj(c), c)


def digamma_values(s, cfg: StirlingConfig = DEFAULT_STIRLING):
    """Vectorised digamma.

    Returns ``(value, err_bound, reflected)``.  Points with Re s <= 0 are
    reflected through Psi(s) = Psi(1 - s) - pi cot(pi s); their error bound
    gains a heuristic rounding allowance for the cot term.
    """
    s = as_complex_array(s)
    reflected = s.real <= 0
    z = np.where(reflected, 1.0 - s, s)
    with np.errstate(divide="ignore", invalid="ignore"):
        val, err = _psi_right(z, cfg)
        if reflected.any():
            sr = s[reflected]
            pc = pi_cot_pi(sr)
            val[reflected] -= pc
            # cot'(z) = -(1 + cot^2 z); argument carries relative rounding EPS
            err[reflected] += 4 * EPS * (np.abs(pc) + np.pi * np.abs(np.pi * sr) * np.abs(1 + (pc / np.pi) ** 2))
    return val, err, reflected


def log_gamma_values(s, cfg: StirlingConfig = DEFAULT_STIRLING):
    """Vectorised principal-branch log Gamma; returns ``(value, err_bound)``.

    The result is analytic off the non-positive real axis and real on the
    positive real axis.
    """
    s = as_complex_array(s)
    n = cfg.n_terms
    with np.errstate(divide="ignore", invalid="ignore"):
        w, acc, acc_abs = _shift(s, cfg, _logs)
        winv = 1.0 / w
        logw = np.log(w)
        series = (w - 0.5) * logw - w + 0.5 * LOG_2PI + _horner(_lgamma_coefficients(n), winv * winv) * w
        # the Horner sum above is in powers of w^-2; multiplying by w leaves w^-(2k-1)
        absw = np.abs(w)
        trunc = (
            cfg.sector_factor ** (2 * n + 2)
            * abs(BERNOULLI[n])
            / ((2 * n + 2) * (2 * n + 1) * absw ** (2 * n + 1))
        )
        rounding = 8 * EPS * (np.abs(series) + acc_abs + 1.0)
    return series - acc, trunc + rounding


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def _is_integer(z: complex) -> bool:
    return z.imag == 0 and z.real == math.floor(z.real)


def digamma(s: PointLike, cfg: StirlingConfig = DEFAULT_STIRLING, tol: float | None = None) -> EvalResult:
    """Psi(s) = Gamma'(s)/Gamma(s).

    Raises PoleError at s = 0, -1, -2, ... and PrecisionError when ``tol`` is
    given and the reported bound exceeds it.
    """
    z = as_complex(s)
    if _is_nonpositive_integer(z):
        raise PoleError(f"digamma has a pole at {z}")
    val, err, reflected = digamma_values(z, cfg)
    bound = float(err[0])
    if tol is not None and bound > tol:
        raise PrecisionError(
            f"digamma error bound {bound:.3g} exceeds tolerance {tol:.3g} with n_terms={cfg.n_terms}"
        )
    return EvalResult(complex(val[0]), bound, rigorous=not bool(reflected[0]))


def log_gamma(s: PointLike, cfg: StirlingConfig = DEFAULT_STIRLING) -> EvalResult:
    z = as_complex(s)
    if _is_nonpositive_integer(z):
        raise PoleError(f"log_gamma has a pole at {z}")
    val, err = log_gamma_values(z, cfg)
    return EvalResult(complex(val[0]), float(err[0]), rigorous=True)


def gamma(s: PointLike, cfg: StirlingConfig = DEFAULT_STIRLING) -> EvalResult:
    """Gamma(s) as exp(log_gamma(s))."""
    lg = log_gamma(s, cfg)
    value = complex(np.exp(lg.value))
    return EvalResult(value, abs(value) * (math.expm1(lg.err_bound) + 2 * EPS), rigorous=False)


def digamma_reflection_defect(s: PointLike, cfg: StirlingConfig = DEFAULT_STIRLING) -> float:
    """|Psi(s) - Psi(1 - s) + pi cot(pi s)|."""
    z = as_complex(s)
    if _is_integer(z):
        raise PoleError(f"reflection identity undefined at integer {z}")
    a = digamma(z, cfg).value
    b = digamma(1 - z, cfg).value
    return abs(a - b + complex(pi_cot_pi(z)[0]))


def cot_real_part(z: PointLike) -> float:
    """Re cot(x + iy) = sin(2x) / (b - cos(2x) + 1) with b = 2 sinh^2(y)."""
    w = as_complex(z)
    x, y = w.real, w.imag
    if abs(math.sin(x)) <= 4 * EPS * max(1.0, abs(x)) and y == 0:
        raise PoleError(f"cot has a pole at {w}")
    with np.errstate(over="ignore"):
        b = 2.0 * np.sinh(y) ** 2
        return float(math.sin(2 * x) / (b - math.cos(2 * x) + 1.0))


def cot_real_part_direct(z: PointLike) -> float:
    """Re cot z from the quotient (cos x cosh y - i sin x sinh y)/(sin x cosh y + i cos x sinh y)."""
    w = as_complex(z)
    x, y = w.real, w.imag
    num = complex(math.cos(x) * math.cosh(y), -math.sin(x) * math.sinh(y))
    den = complex(math.sin(x) * math.cosh(y), math.cos(x) * math.sinh(y))
    if den == 0:
        raise PoleError(f"cot has a pole at {w}")
    return (num / den).real


def g_b(x, b: float):
    """g_b(x) = sin(2x) / (b - cos(2x) + 1); accepts arrays."""
    x = np.asarray(x, dtype=float)
    return np.sin(2 * x) / (b - np.cos(2 * x) + 1.0)


def g_b_max(b: float) -> float:
    """Closed form max_x |g_b(x)| = 1 / sqrt(b^2 + 2b)."""
    if b <= 0:
        raise ValueError("b must be positive")
    return 1.0 / math.sqrt(b * b + 2 * b)
