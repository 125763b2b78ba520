"""Zeta, eta, xi, Gamma and digamma in double precision, with numerical checks of
horizontal monotonicity of |zeta|, |eta| and |xi|."""

from .gamma import StirlingConfig, bernoulli, digamma, g_b, g_b_max, gamma, log_gamma
from .logderiv import eta_zeta_gap, log_derivative, log_derivative_re, xi_zeta_gap, zero_tolerance
from .types import (
    BracketError,
    ComplexPoint,
    EvalResult,
    FormatError,
    FunctionId,
    MissingInputError,
    PoleError,
    PrecisionError,
    UnknownClaimError,
    ValidationError,
    ZeroCollisionError,
    ZeroOfFunctionError,
    ZetamonoError,
)
from .verification import (
    FLAGGED_ZERO,
    GridSpec,
    ScanReport,
    ThresholdResult,
    VerdictRecord,
    check_digamma_bounds,
    check_polya_convexity,
    check_sign_identity,
    find_failure_threshold,
    run_suite,
    scan_monotonicity,
)
from .zeros import ZeroTable, bundled_zeros_path, hadamard_logderiv, load_bundled_zeros, load_zeros, parse_zeros
from .zeta import EulerMaclaurinConfig, derivative, eta, xi, zeta

__version__ = "0.1.0"
