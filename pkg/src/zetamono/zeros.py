"""Nontrivial zero ordinates and the truncated Hadamard sum for xi'/xi.

File format: plain text, one decimal ordinate per line, ``#`` comment lines
and blank lines ignored, LF or CRLF line endings.  Each ordinate beta stands
for the conjugate pair 1/2 +- i beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .gamma import log_gamma_values
from .types import (
    EvalResult,
    FormatError,
    PointLike,
    ValidationError,
    ZeroCollisionError,
    as_complex,
    as_complex_array,
)
from .zeta import LOG_PI, zeta_values

FIRST_ZERO = 14.134725
BUNDLED_ZEROS = "zeros100.txt"


@dataclass(frozen=True)
class ZeroTable:
    ordinates: tuple
    source_label: str = ""

    def __post_init__(self):
        b = np.asarray(self.ordinates, dtype=float)
        if b.ndim != 1 or b.size == 0:
            raise ValidationError("zero table is empty")
        if np.any(np.diff(b) <= 0):
            raise ValidationError("ordinates must be strictly ascending")
        if b[0] <= 14 or b[-1] >= 1e7:
            raise ValidationError("ordinates must lie in (14, 1e7)")

    def __len__(self):
        return len(self.ordinates)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.ordinates, dtype=float)


def parse_zeros(text: str, source_label: str = "") -> ZeroTable:
    values = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v = float(line)
        except ValueError:
            raise FormatError(f"line {lineno}: not a number: {line!r}") from None
        if not math.isfinite(v):
            raise FormatError(f"line {lineno}: non-finite value {line!r}")
        if values and v <= values[-1]:
            raise FormatError(f"line {lineno}: {v} does not exceed previous ordinate {values[-1]}")
        values.append(v)
    if not values:
        raise FormatError("no ordinates found")
    if abs(values[0] - FIRST_ZERO) > 1e-4:
        raise ValidationError(f"first ordinate {values[0]} is not the first zero {FIRST_ZERO}")
    table = ZeroTable(tuple(values), source_label)
    if not sign_changes_at(table.array[:1]).all():
        raise ValidationError("Z(t) does not change sign at the first ordinate")
    return table


def load_zeros(path: str | Path) -> ZeroTable:
    """Read and validate a zeros file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_zeros(text, source_label=str(path))


def bundled_zeros_path() -> Path:
    return Path(str(resources.files("zetamono").joinpath("data", BUNDLED_ZEROS)))


def load_bundled_zeros() -> ZeroTable:
    """The first 100 ordinates shipped with the package."""
    return load_zeros(bundled_zeros_path())


def riemann_siegel_theta(t) -> np.ndarray:
    """theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) log pi, continuous in t."""
    t = np.asarray(t, dtype=float)
    lg, _ = log_gamma_values(0.25 + 0.5j * t)
    return lg.imag - 0.5 * t * LOG_PI


def hardy_z(t) -> np.ndarray:
    """Z(t) = exp(i theta(t)) zeta(1/2 + i t), real for real t."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    z = zeta_values(0.5 + 1j * t)[0]
    return (np.exp(1j * riemann_siegel_theta(t)) * z).real


def sign_changes_at(ordinates, delta: float = 1e-6) -> np.ndarray:
    """True where Z changes sign across [beta - delta, beta + delta]."""
    b = np.asarray(ordinates, dtype=float)
    return hardy_z(b - delta) * hardy_z(b + delta) < 0


def validate_by_sign_change(table: ZeroTable, delta: float = 1e-6) -> None:
    """Check Z changes sign at every ordinate and alternates between consecutive ones."""
    b = table.array
    ok = sign_changes_at(b, delta)
    if not ok.all():
        bad = b[~ok]
        raise ValidationError(f"no sign change of Z(t) at ordinates {bad[:5].tolist()}")
    if b.size > 1:
        mids = hardy_z(0.5 * (b[1:] + b[:-1]))
        if np.any(mids[1:] * mids[:-1] >= 0):
            raise ValidationError("Z(t) does not alternate sign between consecutive ordinates")


def compute_zero_ordinates(count: int, step: float = 0.01) -> np.ndarray:
    """First ``count`` ordinates from sign changes of Z(t), refined with brentq."""
    from scipy.optimize import brentq

    found = []
    lo = 10.0
    while len(found) < count:
        grid = lo + step * np.arange(int(50 / step) + 1)
        z = hardy_z(grid)
        for i in np.flatnonzero(z[:-1] * z[1:] < 0):
            root = brentq(lambda x: float(hardy_z(x)[0]), grid[i], grid[i + 1], xtol=1e-13, rtol=1e-15)
            found.append(root)
            if len(found) == count:
                break
        lo = grid[-1]
    return np.array(found)


def write_zeros(path: str | Path, ordinates, header: str = "") -> None:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [f"{b:.9f}" for b in ordinates]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def pair_contributions(s: PointLike, table: ZeroTable, max_pairs: int) -> np.ndarray:
    """1/(s - rho) + 1/(s - conj rho) = (2s - 1)/((s - 1/2)^2 + beta^2) for each pair."""
    z = as_complex(s)
    if not 0 < max_pairs <= len(table):
        raise ValueError(f"max_pairs must be in [1, {len(table)}]")
    b = table.array[:max_pairs]
    u = z - 0.5
    if np.any(np.abs(np.abs(z.imag) - b) < 1e-12 * (1 + b)) and abs(u.real) < 1e-12:
        raise ZeroCollisionError(f"{z} coincides with a tabulated zero")
    return (2.0 * u) / (u * u + b * b)


def hadamard_tail_bound(s: PointLike, last_ordinate: float) -> float:
    """Heuristic bound on the pairs beyond ``last_ordinate``.

    2 (|sigma - 1/2| + |t| + 1) * S with S approximating sum_{beta > B} beta^-2
    by the zero density log(beta / 2 pi) / (2 pi):

        S = (log(B / 2 pi) + 1) / (2 pi B)
    """
    z = as_complex(s)
    big_b = float(last_ordinate)
    density_sum = (math.log(big_b / (2 * math.pi)) + 1.0) / (2 * math.pi * big_b)
    return 2.0 * (abs(z.real - 0.5) + abs(z.imag) + 1.0) * density_sum


def hadamard_logderiv(s: PointLike, table: ZeroTable, max_pairs: int | None = None) -> EvalResult:
    """Truncated sum over zeros of 1/(s - rho), taken in conjugate pairs by increasing ordinate."""
    if max_pairs is None:
        max_pairs = len(table)
    terms = pair_contributions(s, table, max_pairs)
    total = complex(terms.sum())
    return EvalResult(total, hadamard_tail_bound(s, table.ordinates[max_pairs - 1]), rigorous=False)


def hadamard_partial_sums(s: PointLike, table: ZeroTable) -> np.ndarray:
    return np.cumsum(pair_contributions(s, table, len(table)))


def hadamard_values(s, table: ZeroTable, max_pairs: int) -> np.ndarray:
    """Vectorised truncated pair sum (no collision check)."""
    s = as_complex_array(s)
    b = table.array[:max_pairs]
    u = (s - 0.5)[:, None]
    return ((2.0 * u) / (u * u + b[None, :] ** 2)).sum(axis=1)
