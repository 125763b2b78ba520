"""Shared value types and exceptions."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

import numpy as np


class ZetamonoError(Exception):
    """Base class for all errors raised by this package."""


class PoleError(ZetamonoError, ValueError):
    """Argument is a pole of the function being evaluated."""


class PrecisionError(ZetamonoError, ArithmeticError):
    """Requested accuracy cannot be reached with the configured parameters."""


class ZeroOfFunctionError(ZetamonoError, ValueError):
    """|f(s)| is below the zero tolerance, so f'/f is not meaningful there."""


class ZeroCollisionError(ZetamonoError, ValueError):
    """Argument coincides with a tabulated zero."""


class FormatError(ZetamonoError, ValueError):
    """Malformed zeros file."""


class ValidationError(ZetamonoError, ValueError):
    """Zeros file parsed but failed a sanity check."""


class BracketError(ZetamonoError, ValueError):
    """Threshold predicate does not change across the bracket."""


class MissingInputError(ZetamonoError, FileNotFoundError):
    """A required input file was not supplied or does not exist."""


class UnknownClaimError(ZetamonoError, KeyError):
    """Claim id not present in the registry."""


@dataclass(frozen=True)
class ComplexPoint:
    """A point ``s = sigma + i t``."""

    sigma: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and math.isfinite(self.t)):
            raise ValueError(f"non-finite point ({self.sigma}, {self.t})")

    @property
    def s(self) -> complex:
        return complex(self.sigma, self.t)

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    def conjugate(self) -> "ComplexPoint":
        return ComplexPoint(self.sigma, -self.t)

    def to_dict(self) -> dict:
        return {"sigma": self.sigma, "t": self.t}


PointLike = Union[ComplexPoint, complex, float, int]


def as_complex(s: PointLike) -> complex:
    if isinstance(s, ComplexPoint):
        return s.s
    z = complex(s)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite point {z!r}")
    return z


@dataclass(frozen=True)
class EvalResult:
    """Function value with an absolute error estimate.

    ``rigorous`` is True when the truncation part of ``err_bound`` is a proven
    bound; a small floating-point rounding allowance is always added on top.
    """

    value: complex
    err_bound: float
    rigorous: bool = False

    def __post_init__(self):
        if not self.err_bound >= 0:
            raise ValueError(f"err_bound must be nonnegative, got {self.err_bound}")


class FunctionId(enum.Enum):
    ZETA = "zeta"
    ETA = "eta"
    XI = "xi"

    @classmethod
    def parse(cls, name: "str | FunctionId") -> "FunctionId":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(f"unknown function {name!r}; expected zeta, eta or xi") from None


def as_complex_array(s) -> np.ndarray:
    return np.atleast_1d(np.asarray(s, dtype=complex))
