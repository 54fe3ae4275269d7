"""Exception hierarchy shared by all modules."""


class DiskExtremaError(Exception):
    """Base class for every package-specific error."""


class DomainError(DiskExtremaError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class SeriesFormatError(DiskExtremaError, ValueError):
    """A series literal file could not be parsed."""


class ConstantFunction(DiskExtremaError):
    """The function is numerically indistinguishable from its value at 0."""


class ZeroOnCircle(DiskExtremaError):
    """|f| dips below the zero threshold somewhere on the search circle."""


class ZeroInDisk(DiskExtremaError):
    """|f| dips below the zero threshold somewhere in the closed disk."""


class NoConvergence(DiskExtremaError):
    """Bracket refinement hit its iteration cap before reaching the target."""


class InteriorBelowBoundary(DiskExtremaError):
    """An interior sample undercuts the boundary minimum.

    For an analytic function without zeros this cannot happen, so it is a
    misuse diagnostic: the supplied function vanishes or is not analytic.
    """


class InteriorAboveBoundary(DiskExtremaError):
    """An interior sample exceeds the boundary maximum (misuse diagnostic)."""


class ZeroDenominator(DiskExtremaError):
    """f(z0) is numerically zero; the log-derivative ratio is undefined."""


class ZeroDerivative(DiskExtremaError):
    """f'(z0) is numerically zero; the curvature quantity is undefined."""


class DegenerateModuli(DiskExtremaError):
    """|f(z0)| equals |f(0)| within tolerance; the lower bounds are 0/0."""
