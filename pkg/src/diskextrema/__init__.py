"""Numerical verification of modulus-extremum inequality chains on the unit disk.

The package locates the extrema of |f| on circles and closed sub-disks of
the unit disk, evaluates the log-derivative ratio ``z0 f'(z0)/f(z0)`` and
the curvature quantity ``Re(z0 f''(z0)/f'(z0)) + 1`` at the located
points, and checks the inequality chains these quantities satisfy at true
extrema -- in the maximum case for any non-constant analytic f, and in
the minimum case for zero-free f via the reciprocal duality ``g = 1/f``.
"""

from .errors import (
    ConstantFunction,
    DegenerateModuli,
    DiskExtremaError,
    DomainError,
    InteriorAboveBoundary,
    InteriorBelowBoundary,
    NoConvergence,
    SeriesFormatError,
    ZeroDenominator,
    ZeroDerivative,
    ZeroInDisk,
    ZeroOnCircle,
)
from .extremum import (
    DEFAULT_GRID,
    ExtremumResult,
    find_max_on_circle,
    find_max_on_disk,
    find_min_on_circle,
    find_min_on_disk,
    modulus_profile,
    write_profile_csv,
)
from .functions import (
    AnalyticFunction,
    ChainValues,
    DiskImage,
    ExampleFamily,
    ExpSeriesFunction,
    MinPoint,
    Reciprocal,
    Rotated,
    SeriesFunction,
)
from .lemma import (
    DEFAULT_TOL,
    LemmaReport,
    LinkCheck,
    check_max_lemma,
    check_min_theorem,
    format_report,
    log_derivative,
    mocanu_bounds,
    schwarz_quantity,
)
from .series import (
    DEFAULT_ORDER,
    PowerSeries,
    exp_series,
    format_series,
    invert_series,
    parse_series,
    read_series,
    write_series,
)
from .sweep import SweepSummary, TrialFunction, TrialOutcome, draw_trial, run_sweep, run_trial

__version__ = "0.1.0"

__all__ = [
    "AnalyticFunction",
    "ChainValues",
    "ConstantFunction",
    "DEFAULT_GRID",
    "DEFAULT_ORDER",
    "DEFAULT_TOL",
    "DegenerateModuli",
    "DiskExtremaError",
    "DiskImage",
    "DomainError",
    "ExampleFamily",
    "ExpSeriesFunction",
    "ExtremumResult",
    "InteriorAboveBoundary",
    "InteriorBelowBoundary",
    "LemmaReport",
    "LinkCheck",
    "MinPoint",
    "NoConvergence",
    "PowerSeries",
    "Reciprocal",
    "Rotated",
    "SeriesFormatError",
    "SeriesFunction",
    "SweepSummary",
    "TrialFunction",
    "TrialOutcome",
    "ZeroDenominator",
    "ZeroDerivative",
    "ZeroInDisk",
    "ZeroOnCircle",
    "check_max_lemma",
    "check_min_theorem",
    "draw_trial",
    "exp_series",
    "find_max_on_circle",
    "find_max_on_disk",
    "find_min_on_circle",
    "find_min_on_disk",
    "format_report",
    "format_series",
    "invert_series",
    "log_derivative",
    "mocanu_bounds",
    "modulus_profile",
    "parse_series",
    "read_series",
    "run_sweep",
    "run_trial",
    "schwarz_quantity",
    "write_profile_csv",
    "write_series",
]
