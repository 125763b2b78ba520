"""Grid scanners, bound checkers, the failure-threshold finder and the claim suite.

Every check returns a :class:`VerdictRecord`.  ``worst_margin`` is the
extremal value of the quantity the claim constrains; each claim's docstring
says which side of zero (or of its reference value) counts as passing.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .gamma import digamma, digamma_values, g_b, g_b_max, cot_real_part, cot_real_part_direct, pi_cot_pi
from .logderiv import (
    eta_zeta_gap_values,
    log_abs_values,
    log_derivative_values,
    xi_logderiv_via_zeta,
    xi_zeta_gap_values,
    zero_tolerance,
)
from .types import (
    BracketError,
    ComplexPoint,
    MissingInputError,
    FunctionId,
    UnknownClaimError,
    ZeroOfFunctionError,
    as_complex,
)
from .zeros import hadamard_logderiv, load_bundled_zeros, load_zeros
from .zeta import DEFAULT_EM, EulerMaclaurinConfig, derivative, eta, zeta, xi_values

FLAGGED_ZERO = 2
REFERENCE_THRESHOLD = 6.2897
DIGAMMA_FLOOR = 2.0096
THREADS_ENV = "ZETAMONO_THREADS"


def thread_count() -> int:
    """Worker threads for scans: $ZETAMONO_THREADS, defaulting to all available cores."""
    raw = os.environ.get(THREADS_ENV)
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


@dataclass(frozen=True)
class GridSpec:
    """Rectangular sample grid; ``mirror_t`` adds the reflected rows -t."""

    sigma_min: float
    sigma_max: float
    sigma_step: float
    t_min: float
    t_max: float
    t_step: float
    mirror_t: bool = False

    def __post_init__(self):
        if not (self.sigma_min < self.sigma_max and self.t_min < self.t_max):
            raise ValueError("grid bounds must satisfy min < max")
        if not (self.sigma_step > 0 and self.t_step > 0):
            raise ValueError("grid steps must be positive")
        if self.size > 10**8:
            raise ValueError("grid has more than 1e8 points")

    @staticmethod
    def _axis(lo, hi, step):
        n = int(math.floor((hi - lo) / step + 1e-9)) + 1
        return lo + step * np.arange(n)

    @property
    def sigmas(self) -> np.ndarray:
        return self._axis(self.sigma_min, self.sigma_max, self.sigma_step)

    @property
    def ts(self) -> np.ndarray:
        t = self._axis(self.t_min, self.t_max, self.t_step)
        if self.mirror_t:
            t = np.concatenate([-t[::-1], t])
        return t

    @property
    def size(self) -> int:
        ns = int(math.floor((self.sigma_max - self.sigma_min) / self.sigma_step + 1e-9)) + 1
        nt = int(math.floor((self.t_max - self.t_min) / self.t_step + 1e-9)) + 1
        return ns * nt * (2 if self.mirror_t else 1)

    def points(self) -> np.ndarray:
        """Complex points, shape (len(ts), len(sigmas)); rows are fixed t."""
        return self.sigmas[None, :] + 1j * self.ts[:, None]


@dataclass
class ScanReport:
    grid: GridSpec
    function: FunctionId
    expected_sign: int
    sign_map: np.ndarray
    values: np.ndarray
    violations: list
    worst_margin: float
    witness: Optional[ComplexPoint]
    checked_rows: np.ndarray
    row_failures: list = field(default_factory=list)

    @property
    def flagged(self) -> np.ndarray:
        return self.sign_map == FLAGGED_ZERO

    @property
    def passed(self) -> bool:
        return not self.violations and not self.row_failures


@dataclass(frozen=True)
class VerdictRecord:
    claim_id: str
    passed: bool
    worst_margin: float
    witness: Optional[ComplexPoint] = None
    runtime_ms: float = 0.0
    note: str = ""

    def to_dict(self, timing: bool = True) -> dict:
        m = self.worst_margin
        return {
            "claim_id": self.claim_id,
            "passed": bool(self.passed),
            "worst_margin": float(m) if m is not None and math.isfinite(m) else None,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "runtime_ms": round(float(self.runtime_ms), 3) if timing else 0.0,
        }


def _point(z: complex) -> ComplexPoint:
    z = complex(z)
    return ComplexPoint(float(z.real), float(z.imag))


def _parallel_rows(fn: Callable[[np.ndarray], tuple], pts: np.ndarray, rows_per_task: int = 64):
    """Apply ``fn`` to row blocks of ``pts``; results are reassembled in row order."""
    blocks = [pts[i : i + rows_per_task] for i in range(0, pts.shape[0], rows_per_task)]
    workers = min(thread_count(), len(blocks))
    if workers <= 1:
        parts = [fn(b) for b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, blocks))
    return tuple(np.concatenate([p[k] for p in parts], axis=0) for k in range(len(parts[0])))


def logderiv_grid(f: FunctionId, pts: np.ndarray, cfg: EulerMaclaurinConfig = DEFAULT_EM):
    """Re(f'/f) and the zero flag on a 2-D array of points."""

    def work(block):
        ratio, modulus = log_derivative_values(f, block.ravel(), cfg)
        re = ratio.real
        flagged = (modulus <= zero_tolerance(block.ravel())) | ~np.isfinite(re)
        return re.reshape(block.shape), flagged.reshape(block.shape)

    return _parallel_rows(work, pts)


def _rows_strictly_monotone(f: FunctionId, pts: np.ndarray, expected_sign: int, cfg) -> np.ndarray:
    la = log_abs_values(f, pts.ravel(), cfg).reshape(pts.shape)
    steps = np.diff(la, axis=1) * expected_sign
    return np.all(steps > 0, axis=1)


def scan_monotonicity(
    f: FunctionId | str,
    grid: GridSpec,
    expected_sign: int,
    cfg: EulerMaclaurinConfig = DEFAULT_EM,
    spot_fraction: float = 0.01,
) -> ScanReport:
    """Sign map of Re(f'/f) over ``grid`` compared with ``expected_sign``.

    Points with |f| below the zero tolerance are FLAGGED_ZERO and never count
    as violations.  Rows holding a flagged point, plus every
    ``round(1/spot_fraction)``-th row, are re-checked directly: |f| must move
    strictly in the expected direction between adjacent sigma samples.
    """
    f = FunctionId.parse(f)
    if expected_sign not in (-1, 1):
        raise ValueError("expected_sign must be -1 or +1")
    pts = grid.points()
    re, flagged = logderiv_grid(f, pts, cfg)
    sign = np.sign(re).astype(np.int8)
    sign[flagged] = FLAGGED_ZERO
    bad = (sign != expected_sign) & ~flagged
    violations = [_point(z) for z in pts[bad]]
    margins = np.where(flagged, np.inf, expected_sign * re)
    if np.isfinite(margins).any():
        k = np.unravel_index(np.argmin(margins), margins.shape)
        worst, witness = float(margins[k]), _point(pts[k])
    else:
        worst, witness = math.inf, None

    stride = max(1, int(round(1.0 / spot_fraction)))
    rows = np.zeros(pts.shape[0], dtype=bool)
    rows[::stride] = True
    rows |= flagged.any(axis=1)
    checked = np.flatnonzero(rows)
    ok = _rows_strictly_monotone(f, pts[checked], expected_sign, cfg) if checked.size else np.array([], bool)
    row_failures = [float(pts[r, 0].imag) for r, good in zip(checked, ok) if not good]
    return ScanReport(grid, f, expected_sign, sign, re, violations, worst, witness, checked, row_failures)


def sign_coherence_mismatches(report: ScanReport, h: float = 1e-6, guard: float = 1e-6) -> int:
    """Count non-flagged points whose direct |f| difference disagrees with the sign map.

    Points with |Re(f'/f)| <= guard are skipped: the difference quotient cannot
    resolve their sign.
    """
    pts = report.grid.points()
    la_p = log_abs_values(report.function, (pts + h).ravel()).reshape(pts.shape)
    la_m = log_abs_values(report.function, (pts - h).ravel()).reshape(pts.shape)
    direct = np.sign(la_p - la_m)
    use = ~report.flagged & (np.abs(report.values) > guard)
    return int(np.count_nonzero(direct[use] != report.sign_map[use]))


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rec = fn(*args, **kwargs)
        ms = (time.perf_counter() - t0) * 1000.0
        return VerdictRecord(rec.claim_id, rec.passed, rec.worst_margin, rec.witness, ms, rec.note)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def scan_verdict(claim_id: str, report: ScanReport) -> VerdictRecord:
    note = f"{len(report.violations)} violations, {len(report.row_failures)} row failures"
    return VerdictRecord(claim_id, report.passed, report.worst_margin, report.witness, note=note)


@_timed
def check_sign_identity(
    f: FunctionId | str,
    points: Sequence,
    h: float = 1e-5,
    cfg: EulerMaclaurinConfig = DEFAULT_EM,
) -> VerdictRecord:
    """Re(f'/f) against (|f(s+h)| - |f(s-h)|) / (2h |f(s)|).

    The discrepancy is |lhs - rhs| / max(1, |lhs|); a point passes when it is
    at most max(1e-5, 10 h^2 kappa) with kappa the relative curvature of |f|.
    ``worst_margin`` is the smallest (tolerance - discrepancy).
    """
    f = FunctionId.parse(f)
    if not 1e-8 <= h <= 1e-3:
        raise ValueError("h must lie in [1e-8, 1e-3]")
    s = np.array([as_complex(p) for p in points])
    ratio, modulus = log_derivative_values(f, s, cfg)
    tiny = modulus <= zero_tolerance(s)
    if tiny.any():
        raise ZeroOfFunctionError(f"|{f.value}| is below the zero tolerance at {s[tiny][0]}")
    lhs = ratio.real
    la0 = log_abs_values(f, s, cfg)
    rp = np.exp(log_abs_values(f, s + h, cfg) - la0)
    rm = np.exp(log_abs_values(f, s - h, cfg) - la0)
    rhs = (rp - rm) / (2 * h)
    kappa = np.abs(rp - 2.0 + rm) / h**2
    tol = np.maximum(1e-5, 10 * h * h * kappa)
    disc = np.abs(lhs - rhs) / np.maximum(1.0, np.abs(lhs))
    margin = tol - disc
    k = int(np.argmin(margin))
    return VerdictRecord(f"sign_identity_{f.value}", bool(np.all(margin >= 0)), float(margin[k]), _point(s[k]))


@dataclass
class ThresholdResult:
    """Outcome of :func:`find_failure_threshold`.

    ``history`` holds (t, failing, max Re f'/f, maximising sigma) for every
    tested ordinate.
    """

    function: FunctionId
    t_star: float
    sigma_witness: float
    width: float
    history: list
    failing_below: bool

    @property
    def consistent(self) -> bool:
        """Failure predicate on one side of t* only, at every tested ordinate."""
        for t, failing, _, _ in self.history:
            below = t < self.t_star
            if failing != (below == self.failing_below):
                return False
        return True

    def verdict(self, claim_id: str, reference: float, tolerance: float) -> VerdictRecord:
        off = abs(self.t_star - reference)
        return VerdictRecord(
            claim_id,
            off <= tolerance and self.consistent,
            tolerance - off,
            ComplexPoint(self.sigma_witness, self.t_star),
            note=f"t* = {self.t_star:.5f} (reference {reference}), witness sigma = {self.sigma_witness:.4f}",
        )


def max_logderiv_over_sigma(
    f: FunctionId, t: float, sigma_range: tuple, sigma_step: float = 0.01, cfg=DEFAULT_EM
) -> tuple:
    """max over sigma in ``sigma_range`` of Re(f'/f)(sigma + it), polished by bounded Brent search."""
    lo, hi = sigma_range
    sig = GridSpec._axis(lo, hi, sigma_step)
    if sig[-1] < hi:
        sig = np.append(sig, hi)
    ratio, modulus = log_derivative_values(f, sig + 1j * t, cfg)
    re = np.where(modulus <= zero_tolerance(sig + 1j * t), -np.inf, ratio.real)
    i = int(np.argmax(re))
    best, best_sig = float(re[i]), float(sig[i])
    a, b = max(lo, sig[i] - sigma_step), min(hi, sig[i] + sigma_step)
    if b > a:
        res = minimize_scalar(
            lambda x: -float(log_derivative_values(f, complex(x, t), cfg)[0][0].real),
            bounds=(a, b),
            method="bounded",
            options={"xatol": 1e-7},
        )
        if -res.fun > best:
            best, best_sig = float(-res.fun), float(res.x)
    return best, best_sig


def find_failure_threshold(
    f: FunctionId | str,
    sigma_range: tuple = (-30.0, 0.5),
    t_bracket: tuple = (6.0, 7.0),
    tol: float = 1e-3,
    sigma_step: float = 0.01,
    cfg: EulerMaclaurinConfig = DEFAULT_EM,
) -> ThresholdResult:
    """Bisect t on "some sigma in sigma_range has Re(f'/f)(sigma + it) >= 0".

    Raises BracketError when the predicate agrees at both ends of the bracket.
    """
    f = FunctionId.parse(f)
    lo_s, hi_s = sigma_range
    if not lo_s < hi_s <= 0.5:
        raise ValueError("sigma_range must be an interval inside (-inf, 1/2]")
    a, b = map(float, t_bracket)
    if not a < b:
        raise ValueError("t_bracket must satisfy lo < hi")
    history = []

    def failing(t):
        m, sg = max_logderiv_over_sigma(f, t, sigma_range, sigma_step, cfg)
        history.append((t, m >= 0, m, sg))
        return m >= 0

    fa, fb = failing(a), failing(b)
    if fa == fb:
        state = "fails" if fa else "holds"
        raise BracketError(f"monotonicity {state} at both ends of [{a}, {b}] for {f.value}")
    while b - a > tol:
        m = 0.5 * (a + b)
        if failing(m) == fa:
            a = m
        else:
            b = m
    t_star = 0.5 * (a + b)
    # witness sigma comes from the failing end of the final bracket
    fail_end = a if fa else b
    sigma_w = next(h[3] for h in reversed(history) if h[0] == fail_end)
    return ThresholdResult(f, t_star, sigma_w, b - a, history, failing_below=fa)


@_timed
def check_digamma_floor(grid: GridSpec, floor: float = DIGAMMA_FLOOR) -> VerdictRecord:
    """min Re Psi over the grid (sigma >= 1/2, |t| >= 8); passes when above ``floor``.

    ``worst_margin`` is min Re Psi - floor.
    """
    pts = grid.points()
    if grid.sigma_min < 0.5 or np.min(np.abs(grid.ts)) < 8:
        raise ValueError("grid must satisfy sigma >= 1/2 and |t| >= 8")
    psi, _, _ = digamma_values(pts.ravel())
    re = psi.real.reshape(pts.shape)
    k = np.unravel_index(np.argmin(re), re.shape)
    m = float(re[k]) - floor
    return VerdictRecord("digamma_floor", m > 0, m, _point(pts[k]), note=f"min Re Psi = {re[k]:.6f}")


def digamma_reflection_excess(pts: np.ndarray) -> np.ndarray:
    """|Re Psi(s) - Re Psi(1-s)| - 3 pi exp(-2 pi t)."""
    s = pts.ravel()
    a, _, _ = digamma_values(s)
    b, _, _ = digamma_values(1.0 - s)
    return (np.abs(a.real - b.real) - 3 * math.pi * np.exp(-2 * math.pi * s.imag)).reshape(pts.shape)


@_timed
def check_digamma_reflection_bound(grid: GridSpec) -> VerdictRecord:
    """max over the grid (t >= 0.1) of |Re Psi(s) - Re Psi(1-s)| - 3 pi e^(-2 pi t); passes when < 0."""
    if grid.t_min < 0.1 - 1e-12 or grid.mirror_t:
        raise ValueError("grid must satisfy t >= 0.1")
    pts = grid.points()
    ex = digamma_reflection_excess(pts)
    k = np.unravel_index(np.argmax(ex), ex.shape)
    m = float(ex[k])
    return VerdictRecord("digamma_reflection_bound", m < 0, m, _point(pts[k]))


def check_digamma_bounds(grid: GridSpec, part: str = "floor") -> VerdictRecord:
    """``part="floor"``: Re Psi > 2.0096; ``part="reflection"``: the 3 pi e^(-2 pi t) bound."""
    if part == "floor":
        return check_digamma_floor(grid)
    if part == "reflection":
        return check_digamma_reflection_bound(grid)
    raise ValueError("part must be 'floor' or 'reflection'")


def polya_second_differences(x: np.ndarray, y: np.ndarray, h: float = 1e-3, cfg=DEFAULT_EM):
    """Second differences in y of |xi(1/2 + y + ix)|^2, each divided by the local scale.

    The scale is the largest of the three sampled values, so results are
    dimensionless.  Returns ``(d2, d1)`` on the (len(x), len(y)) mesh, where
    d1 is the scaled first difference f(y + h) - f(y - h).
    """
    xx, yy = np.meshgrid(np.asarray(x, float), np.asarray(y, float), indexing="ij")
    base = (0.5 + yy + 1j * xx).ravel()
    la = [log_abs_values(FunctionId.XI, base + d, cfg) for d in (-h, 0.0, h)]
    top = np.maximum(np.maximum(la[0], la[1]), la[2])
    top = np.where(np.isfinite(top), top, 0.0)
    fm, f0, fp = (np.exp(2 * (v - top)) for v in la)
    return (fp - 2 * f0 + fm).reshape(xx.shape), (fp - fm).reshape(xx.shape)


@_timed
def check_polya_convexity(
    x_range: tuple = (0.0, 30.0),
    y_range: tuple = (-3.0, 3.0),
    steps: tuple = (0.25, 0.05),
    h: float = 1e-3,
    cfg: EulerMaclaurinConfig = DEFAULT_EM,
) -> VerdictRecord:
    """Scaled second difference of |xi(1/2 + y + ix)|^2 in y must be >= -1e-8 everywhere.

    ``worst_margin`` is the smallest scaled second difference plus 1e-8.
    """
    if x_range[0] < 0 or x_range[1] > 100:
        raise ValueError("x_range must lie within [0, 100]")
    x = GridSpec._axis(x_range[0], x_range[1], steps[0])
    y = GridSpec._axis(y_range[0], y_range[1], steps[1])
    d2, _ = polya_second_differences(x, y, h, cfg)
    k = np.unravel_index(np.argmin(d2), d2.shape)
    m = float(d2[k]) + 1e-8
    return VerdictRecord("polya_convexity", m >= 0, m, ComplexPoint(float(0.5 + y[k[1]]), float(x[k[0]])))


# ---------------------------------------------------------------- claim suite


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


CHAIN_GRID = GridSpec(-15.0, 0.49, 0.1, 8.0, 100.0, 0.25, mirror_t=True)
LEFT_GRID = GridSpec(-15.0, 0.0, 0.1, 8.0, 100.0, 0.25, mirror_t=True)
NONMONOTONE_GRID = GridSpec(0.51, 5.0, 0.05, 8.0, 50.0, 0.25)
DIGAMMA_FLOOR_GRID = GridSpec(0.5, 20.0, 0.1, 8.0, 50.0, 0.1)
DIGAMMA_REFLECTION_GRID = GridSpec(-3.0, 4.0, 0.1, 0.1, 5.0, 0.01)
XI_RIGHT_GRID = GridSpec(1.0, 10.0, 0.1, 0.0, 50.0, 0.25)
GAMMA_GRID = GridSpec(-10.0, 10.0, 0.25, 1.3, 50.0, 0.25, mirror_t=True)
HADAMARD_POINTS = [complex(sg, t) for sg in (-2.0, 0.0, 2.0, 3.0) for t in (0.0, 9.0, 15.0, 25.0, 40.0)]


@_timed
def claim_known_values(seed: int = 0, zeros=None) -> VerdictRecord:
    """Classical values to absolute error 1e-10; margin is 1e-10 minus the worst error."""
    euler_gamma = 0.57721566490153286061
    cases = [
        (2.0, zeta(2).value, math.pi**2 / 6),
        (0.0, zeta(0).value, -0.5),
        (-1.0, zeta(-1).value, -1.0 / 12),
        (1.0, eta(1).value, math.log(2)),
        (0.0, derivative("zeta", 0).value, -0.5 * math.log(2 * math.pi)),
        (1.0, digamma(1).value, -euler_gamma),
    ]
    errs = [abs(v - e) for _, v, e in cases]
    k = int(np.argmax(errs))
    m = 1e-10 - errs[k]
    return VerdictRecord("known_values", m >= 0, m, ComplexPoint(cases[k][0], 0.0))


def random_points(rng, n, sigma_range, t_abs_range) -> np.ndarray:
    sig = rng.uniform(*sigma_range, n)
    t = rng.uniform(*t_abs_range, n) * rng.choice([-1.0, 1.0], n)
    return sig + 1j * t


@_timed
def claim_sign_identity(seed: int = 0, zeros=None) -> VerdictRecord:
    """Sign identity at 100 random points per function (sigma in [-5, 5], |t| in [2, 50])."""
    rng = _rng(seed)
    recs = [check_sign_identity(f, random_points(rng, 100, (-5, 5), (2, 50)), 1e-5) for f in FunctionId]
    worst = min(recs, key=lambda r: r.worst_margin)
    return VerdictRecord("sign_identity", all(r.passed for r in recs), worst.worst_margin, worst.witness)


def chain_quantities(grid: GridSpec = CHAIN_GRID, cfg=DEFAULT_EM) -> dict:
    """Re of eta'/eta, zeta'/zeta, xi'/xi and both gaps on ``grid``."""
    pts = grid.points()
    out = {"points": pts}
    flags = np.zeros(pts.shape, dtype=bool)
    for f in FunctionId:
        re, fl = logderiv_grid(f, pts, cfg)
        out[f.value] = re
        flags |= fl
    out["flagged"] = flags
    out["eta_gap"] = eta_zeta_gap_values(pts.ravel()).reshape(pts.shape)
    out["xi_gap"] = xi_zeta_gap_values(pts.ravel()).reshape(pts.shape)
    return out


@_timed
def claim_thm_1_3_chain(seed: int = 0, zeros=None, grid: GridSpec = CHAIN_GRID) -> VerdictRecord:
    """Re(eta'/eta) < Re(zeta'/zeta) < Re(xi'/xi) strictly, gaps reproduced within 1e-8.

    ``worst_margin`` is the smallest of the two chain differences.
    """
    q = chain_quantities(grid)
    low = q["zeta"] - q["eta"]
    high = q["xi"] - q["zeta"]
    margin = np.minimum(low, high)
    margin = np.where(np.isfinite(margin), margin, -np.inf)
    gap_err = np.maximum(np.abs((q["eta"] - q["zeta"]) - q["eta_gap"]), np.abs(high - q["xi_gap"]))
    k = np.unravel_index(np.argmin(margin), margin.shape)
    ok = bool(np.all(margin > 0) and np.all(gap_err <= 1e-8) and not q["flagged"].any())
    note = f"max gap reproduction error {np.nanmax(gap_err):.2e}"
    return VerdictRecord("thm_1_3_chain", ok, float(margin[k]), _point(q["points"][k]), note=note)


@_timed
def claim_xi_gap_floor(seed: int = 0, zeros=None, grid: GridSpec = CHAIN_GRID) -> VerdictRecord:
    """xi-zeta gap above 0.36 (from -1/16 + 1.0048 - log(pi)/2) on the chain grid; margin is min gap - 0.36."""
    pts = grid.points()
    gap = xi_zeta_gap_values(pts.ravel()).reshape(pts.shape)
    k = np.unravel_index(np.argmin(gap), gap.shape)
    m = float(gap[k]) - 0.36
    return VerdictRecord("xi_gap_floor", m > 0, m, _point(pts[k]), note=f"min gap {gap[k]:.6f}")


def _left_monotone(f: FunctionId):
    @_timed
    def claim(seed: int = 0, zeros=None) -> VerdictRecord:
        return scan_verdict(f"left_decreasing_{f.value}", scan_monotonicity(f, LEFT_GRID, -1))

    claim.__doc__ = f"|{f.value}| decreasing in sigma on sigma in [-15, 0], |t| in [8, 100]; margin is min(-Re f'/f)."
    return claim


def _threshold(f: FunctionId, tolerance: float):
    @_timed
    def claim(seed: int = 0, zeros=None) -> VerdictRecord:
        cid = f"threshold_{f.value}"
        try:
            res = find_failure_threshold(f, (-30.0, 0.5), (6.0, 7.0), 1e-3)
        except BracketError as exc:
            return VerdictRecord(cid, False, -math.inf, None, note=f"BracketError: {exc}")
        return res.verdict(cid, REFERENCE_THRESHOLD, tolerance)

    claim.__doc__ = f"Failure threshold t* for {f.value} within {tolerance} of 6.2897; margin is tolerance - |t* - 6.2897|."
    return claim


@_timed
def claim_lemma_3_2_v(seed: int = 0, zeros=None) -> VerdictRecord:
    """Numerical min of Re Psi above 2.0096, and log 8 - 1/16 - sqrt(2)/192 within 5e-5 of 2.0096."""
    rec = check_digamma_floor(DIGAMMA_FLOOR_GRID)
    analytic = math.log(8) - 1 / 16 - math.sqrt(2) / 192
    ok = rec.passed and abs(analytic - DIGAMMA_FLOOR) <= 5e-5
    return VerdictRecord("lemma_3_2_v", ok, rec.worst_margin, rec.witness, note=f"{rec.note}; floor {analytic:.6f}")


@_timed
def claim_digamma_reflection_bound(seed: int = 0, zeros=None) -> VerdictRecord:
    return check_digamma_reflection_bound(DIGAMMA_REFLECTION_GRID)


claim_digamma_reflection_bound.__doc__ = check_digamma_reflection_bound.__doc__


@_timed
def claim_digamma_reflection(seed: int = 0, zeros=None) -> VerdictRecord:
    """Reflection residual at 200 random non-integer points; margin is allowance minus worst defect."""
    rng = _rng(seed)
    s = rng.uniform(-10, 10, 200) + 1j * rng.uniform(-10, 10, 200)
    a, ea, _ = digamma_values(s)
    b, eb, _ = digamma_values(1.0 - s)
    defect = np.abs(a - b + pi_cot_pi(s))
    allowance = np.maximum(1e-10, ea + eb)
    m = allowance - defect
    k = int(np.argmin(m))
    return VerdictRecord("digamma_reflection", bool(np.all(m >= 0)), float(m[k]), _point(s[k]))


@_timed
def claim_lemma_3_1(seed: int = 0, zeros=None) -> VerdictRecord:
    """eta-zeta gap negative at 10^4 random points with sigma < 1; margin is the max gap."""
    rng = _rng(seed)
    s = rng.uniform(-20, 1, 10_000) + 1j * rng.uniform(-100, 100, 10_000)
    s = s[s.real < 1]
    gap = eta_zeta_gap_values(s)
    k = int(np.argmax(gap))
    return VerdictRecord("lemma_3_1", bool(np.all(gap < 0)), float(gap[k]), _point(s[k]))


@_timed
def claim_g_b_max(seed: int = 0, zeros=None) -> VerdictRecord:
    """Brute-force max |g_b| over x in [0, 2 pi) step 1e-5 versus 1/sqrt(b^2 + 2b); margin 1e-6 - worst error."""
    x = np.arange(0.0, 2 * math.pi, 1e-5)
    errs = []
    for b in (0.1, 1.0, 10.0, 2 * math.sinh(1.0) ** 2):
        errs.append((abs(float(np.max(np.abs(g_b(x, b)))) - g_b_max(b)), b))
    worst, b = max(errs)
    # closed form versus direct complex division, and the 3 e^(-2y) bound at y = 1
    xs = np.linspace(0.05, 3.0, 60)
    agree = max(abs(cot_real_part(complex(v, 1.0)) - cot_real_part_direct(complex(v, 1.0))) for v in xs)
    below = all(abs(cot_real_part(complex(v, 1.0))) < 3 * math.exp(-2.0) for v in xs)
    ok = worst <= 1e-6 and agree <= 1e-12 and below
    return VerdictRecord("g_b_max", ok, 1e-6 - worst, None, note=f"worst b = {b:.4g}")


@_timed
def claim_hadamard_consistency(seed: int = 0, zeros=None) -> VerdictRecord:
    """100-pair Hadamard sum versus analytic xi'/xi at 20 points; margin is min(tail bound - |diff|)."""
    table = zeros if zeros is not None else load_bundled_zeros()
    analytic = xi_logderiv_via_zeta(np.array(HADAMARD_POINTS))
    margins = []
    for s, a in zip(HADAMARD_POINTS, analytic):
        h = hadamard_logderiv(s, table, 100)
        margins.append(h.err_bound - abs(h.value - a))
    centre = hadamard_logderiv(0.5, table, 100).value
    k = int(np.argmin(margins))
    ok = min(margins) >= 0 and centre.real == 0.0
    return VerdictRecord("hadamard_consistency", ok, float(margins[k]), _point(HADAMARD_POINTS[k]))


@_timed
def claim_xi_symmetry(seed: int = 0, zeros=None) -> VerdictRecord:
    """| |xi(s)| / |xi(1 - conj s)| - 1 | <= 1e-9 at 200 random points; margin 1e-9 - worst."""
    rng = _rng(seed)
    s = rng.uniform(-0.5, 1.5, 200) + 1j * rng.uniform(-100, 100, 200)
    la = log_abs_values(FunctionId.XI, s)
    lb = log_abs_values(FunctionId.XI, 1.0 - np.conj(s))
    rel = np.abs(np.expm1(la - lb))
    k = int(np.argmax(rel))
    m = 1e-9 - float(rel[k])
    return VerdictRecord("xi_symmetry", m >= 0, m, _point(s[k]))


@_timed
def claim_critical_line(seed: int = 0, zeros=None) -> VerdictRecord:
    """|Re(xi'/xi(1/2 + it))| <= 1e-8 for t in [1, 100] step 0.5; margin 1e-8 - worst."""
    t = GridSpec._axis(1.0, 100.0, 0.5)
    s = 0.5 + 1j * t
    r = xi_logderiv_via_zeta(s)
    ok_pts = np.isfinite(r)
    worst = np.where(ok_pts, np.abs(r.real), 0.0)
    k = int(np.argmax(worst))
    m = 1e-8 - float(worst[k])
    return VerdictRecord("critical_line", m >= 0, m, _point(s[k]))


@_timed
def claim_polya_convexity(seed: int = 0, zeros=None) -> VerdictRecord:
    return check_polya_convexity((0.0, 30.0), (-3.0, 3.0), (0.25, 0.05))


claim_polya_convexity.__doc__ = check_polya_convexity.__doc__


def confirm_increase(f: FunctionId, p: ComplexPoint, h: float = 1e-3) -> bool:
    """Direct check that |f| increases in sigma across p."""
    la = log_abs_values(f, np.array([complex(p.sigma - h, p.t), complex(p.sigma + h, p.t)]))
    return bool(la[1] > la[0])


def _nonmonotone(f: FunctionId):
    @_timed
    def claim(seed: int = 0, zeros=None) -> VerdictRecord:
        rep = scan_monotonicity(f, NONMONOTONE_GRID, -1)
        found = len(rep.violations) > 0
        confirmed = found and rep.witness is not None and confirm_increase(f, rep.witness)
        # the witness maximises Re f'/f, so report that value as the margin
        return VerdictRecord(
            f"nonmonotone_{f.value}",
            bool(confirmed),
            -rep.worst_margin,
            rep.witness,
            note=f"{len(rep.violations)} points where |{f.value}| increases",
        )

    claim.__doc__ = f"|{f.value}| not monotone for sigma > 1/2; margin is the largest Re f'/f found (> 0)."
    return claim


@_timed
def claim_xi_right_increasing(seed: int = 0, zeros=None) -> VerdictRecord:
    """|xi| increasing in sigma on sigma in [1, 10], t in [0, 50]; margin is min Re(xi'/xi)."""
    return scan_verdict("xi_right_increasing", scan_monotonicity(FunctionId.XI, XI_RIGHT_GRID, +1))


@_timed
def claim_gamma_increasing(seed: int = 0, zeros=None) -> VerdictRecord:
    """Re Psi > 0 on sigma in [-10, 10], |t| in [1.3, 50]; margin is the minimum."""
    pts = GAMMA_GRID.points()
    psi, _, _ = digamma_values(pts.ravel())
    re = psi.real.reshape(pts.shape)
    k = np.unravel_index(np.argmin(re), re.shape)
    return VerdictRecord("gamma_increasing", bool(np.all(re > 0)), float(re[k]), _point(pts[k]))


CLAIMS: dict = {
    "known_values": (claim_known_values, False),
    "sign_identity": (claim_sign_identity, False),
    "thm_1_3_chain": (claim_thm_1_3_chain, False),
    "xi_gap_floor": (claim_xi_gap_floor, False),
    "left_decreasing_zeta": (_left_monotone(FunctionId.ZETA), False),
    "left_decreasing_eta": (_left_monotone(FunctionId.ETA), False),
    "left_decreasing_xi": (_left_monotone(FunctionId.XI), False),
    "threshold_zeta": (_threshold(FunctionId.ZETA, 0.01), False),
    "threshold_eta": (_threshold(FunctionId.ETA, 0.05), False),
    "digamma_reflection": (claim_digamma_reflection, False),
    "digamma_reflection_bound": (claim_digamma_reflection_bound, False),
    "lemma_3_2_v": (claim_lemma_3_2_v, False),
    "lemma_3_1": (claim_lemma_3_1, False),
    "g_b_max": (claim_g_b_max, False),
    "hadamard_consistency": (claim_hadamard_consistency, True),
    "xi_symmetry": (claim_xi_symmetry, False),
    "critical_line": (claim_critical_line, False),
    "polya_convexity": (claim_polya_convexity, False),
    "nonmonotone_zeta": (_nonmonotone(FunctionId.ZETA), False),
    "nonmonotone_eta": (_nonmonotone(FunctionId.ETA), False),
    "xi_right_increasing": (claim_xi_right_increasing, False),
    "gamma_increasing": (claim_gamma_increasing, False),
}


def claims_needing_zeros(selection: Sequence[str]) -> list:
    return [c for c in expand_selection(selection) if CLAIMS[c][1]]


def expand_selection(selection: Sequence[str]) -> list:
    if not selection:
        raise ValueError("selection must not be empty")
    out = []
    for cid in selection:
        if cid == "all":
            out.extend(c for c in CLAIMS if c not in out)
        elif cid in CLAIMS:
            if cid not in out:
                out.append(cid)
        else:
            raise UnknownClaimError(cid)
    return out


def run_suite(selection: Sequence[str], zeros_path: str | Path | None = None, seed: int = 0) -> list:
    """Run the selected claims (``"all"`` expands to every registered claim) in order.

    Claims that need zero ordinates raise MissingInputError unless
    ``zeros_path`` is given; ``zetamono.zeros.bundled_zeros_path()`` names the shipped table.
    """
    ids = expand_selection(selection)
    table = None
    needy = [c for c in ids if CLAIMS[c][1]]
    if needy:
        if zeros_path is None:
            raise MissingInputError(f"{', '.join(needy)} requires a zeros file")
        if not Path(zeros_path).is_file():
            raise MissingInputError(f"zeros file not found: {zeros_path}")
        table = load_zeros(zeros_path)
    return [CLAIMS[c][0](seed=seed, zeros=table) for c in ids]
