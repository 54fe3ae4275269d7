"""Uniform analytic-function interface and concrete families.

Everything downstream (extremum search, inequality checks) talks to an
:class:`AnalyticFunction`: a function on the open unit disk exposing its
value and first two derivatives.  Implementations here:

* :class:`SeriesFunction` -- backed by a truncated :class:`PowerSeries`;
* :class:`ExampleFamily` -- the Mobius-of-``z^n`` family with closed-form
  modulus geometry, used as the reference for end-to-end checks;
* :class:`ExpSeriesFunction` -- ``a0 * exp(h(z))``, never zero anywhere,
  the workhorse of the randomized falsification sweeps;
* :class:`Reciprocal` -- pointwise ``1/f``, the duality construction that
  turns minimum-modulus statements into maximum-modulus ones.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .series import PowerSeries


def _require_in_disk(z) -> None:
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("point must lie in the open unit disk (|z| < 1)")


def _require_radius(r: float) -> None:
    if not 0.0 < r < 1.0:
        raise DomainError(f"circle radius must lie in (0, 1), got {r}")


class AnalyticFunction(ABC):
    """A function analytic on the open unit disk, with two derivatives.

    ``value``, ``deriv1`` and ``deriv2`` accept a complex scalar or a
    numpy array and evaluate elementwise.  ``a0`` is the value at the
    origin and ``n`` the index of the first Taylor coefficient past the
    constant that may be nonzero.
    """

    a0: complex
    n: int
    label: str

    @abstractmethod
    def value(self, z): ...

    @abstractmethod
    def deriv1(self, z): ...

    @abstractmethod
    def deriv2(self, z): ...

    def is_constant(self, tol: float = 1e-15) -> bool:
        """Numerical constancy test.

        Samples ``f(z) - f(0)`` on the circle ``|z| = 1/2``.  Sampling the
        modulus alone would misclassify monomials (``|c z^k|`` is constant
        on every circle), so the complex values are compared.
        """
        z = 0.5 * np.exp(2j * np.pi * np.arange(64) / 64)
        spread = np.max(np.abs(self.value(z) - self.value(0j)))
        return bool(spread <= tol * max(1.0, abs(self.a0)))


class SeriesFunction(AnalyticFunction):
    """Evaluation interface over a truncated power series."""

    def __init__(self, series: PowerSeries, label: str | None = None):
        self.series = series
        self._d1 = series.differentiate()
        self._d2 = self._d1.differentiate()
        self.a0 = series.a0
        self.n = series.n
        self.label = label or f"series(n={series.n}, N={series.order})"

    def value(self, z):
        return self.series(z)

    def deriv1(self, z):
        return self._d1(z)

    def deriv2(self, z):
        return self._d2(z)

    def is_constant(self, tol: float = 1e-15) -> bool:
        return self.series.is_constant(tol)


class DiskImage(NamedTuple):
    center: complex
    radius: float


class MinPoint(NamedTuple):
    z0: complex
    min_modulus: float


class ChainValues(NamedTuple):
    """Closed-form values of the quantities verified at a minimum."""

    m: float
    bound: float
    schwarz: float


class ExampleFamily(AnalyticFunction):
    """The family ``f(z) = (a0 + (u - a0) z^n) / (1 - z^n)`` with ``u = a0/|a0|``.

    Equivalently ``f(z) = a0 + u w/(1-w)`` with ``w = z^n``, i.e. a Mobius
    transform applied to ``z^n``; its Taylor expansion is
    ``a0 + u z^n + u z^{2n} + ...``.  Because Mobius maps send circles to
    circles, every sub-disk ``|z| <= r`` is mapped onto an explicit round
    disk, so the location and value of the modulus minimum, the
    log-derivative ratio there, and the curvature quantity all have closed
    forms.  That makes the family the reference against which the numeric
    search pipeline is validated.

    Requires ``|a0| > 1/2``, which keeps the minimum modulus positive on
    every sub-disk (the function then has no zeros to spoil the
    minimum-modulus reasoning).
    """

    def __init__(self, a0: complex, n: int):
        a0 = complex(a0)
        if abs(a0) <= 0.5:
            raise DomainError(f"family requires |a0| > 1/2, got |a0| = {abs(a0)}")
        if int(n) != n or n < 1:
            raise DomainError(f"power index must be a positive integer, got {n!r}")
        self.a0 = a0
        self.n = int(n)
        self.u = a0 / abs(a0)
        self.label = f"mobius(a0={a0}, n={n})"

    def value(self, z):
        _require_in_disk(z)
        w = z**self.n
        return self.a0 + self.u * w / (1.0 - w)

    def deriv1(self, z):
        _require_in_disk(z)
        w = z**self.n
        return self.u * self.n * z ** (self.n - 1) / (1.0 - w) ** 2

    def deriv2(self, z):
        _require_in_disk(z)
        n = self.n
        w = z**n
        tail = 2.0 * n * z ** (2 * (n - 1)) / (1.0 - w) ** 3
        if n > 1:
            tail = tail + (n - 1) * z ** (n - 2) / (1.0 - w) ** 2
        return self.u * n * tail

    def derivatives(self, z):
        """``(f'(z), f''(z))`` from the closed forms."""
        return self.deriv1(z), self.deriv2(z)

    def is_constant(self, tol: float = 1e-15) -> bool:
        return False  # the z^n coefficient is u with |u| = 1

    def image_disk(self, r: float) -> DiskImage:
        """The round disk onto which ``|z| <= r`` is mapped.

        center ``a0 + u r^{2n}/(1 - r^{2n})``, radius ``r^n/(1 - r^{2n})``.
        """
        _require_radius(r)
        r2n = r ** (2 * self.n)
        return DiskImage(self.a0 + self.u * r2n / (1.0 - r2n), r**self.n / (1.0 - r2n))

    def min_point(self, r: float) -> MinPoint:
        """A modulus minimizer on ``|z| <= r`` and the minimal modulus.

        ``z0 = r e^{i pi/n}`` (any angle with ``z^n = -r^n`` works; this is
        the smallest positive one) and ``min |f| = |a0| - r^n/(1 + r^n)``.
        """
        _require_radius(r)
        rn = r**self.n
        return MinPoint(r * np.exp(1j * np.pi / self.n), abs(self.a0) - rn / (1.0 + rn))

    def closed_chain(self, r: float) -> ChainValues:
        """Closed forms of the three quantities checked at the minimum.

        ``m = n r^n / ((1+r^n)(|a0| - (1-|a0|) r^n))`` is minus the
        log-derivative ratio at ``z0``; ``bound`` is the squared-difference
        lower bound ``n r^n / (2|a0| + (2|a0|-1) r^n)``; ``schwarz`` is
        ``Re(z0 f''/f') + 1 = n (1-r^n)/(1+r^n)``.  For this family
        ``m > 0``, ``schwarz > 0 > -m`` and ``bound < m`` strictly.
        """
        _require_radius(r)
        absa = abs(self.a0)
        n = self.n
        rn = r**n
        m = n * rn / ((1.0 + rn) * (absa - (1.0 - absa) * rn))
        bound = n * rn / (2.0 * absa + (2.0 * absa - 1.0) * rn)
        schwarz = n * (1.0 - rn) / (1.0 + rn)
        if not (m > 0.0 and schwarz > 0.0 > -m and bound < m):
            raise DomainError("closed-form chain violated; parameters out of range")
        return ChainValues(m, bound, schwarz)


class ExpSeriesFunction(AnalyticFunction):
    """``f(z) = a0 * exp(h(z))`` for a polynomial ``h`` with ``h(0) = 0``.

    Exponentials never vanish, so these functions satisfy the
    no-zeros hypothesis of the minimum-modulus statements exactly, which
    is what makes them the right generator for randomized sweeps.  The
    value and both derivatives come from the closed form
    (``f' = f h'``, ``f'' = f (h'' + h'^2)``), not from a truncated
    exponential, so no truncation zeros can sneak in.
    """

    def __init__(self, a0: complex, h: PowerSeries, label: str | None = None):
        if h.a0 != 0:
            raise DomainError("exponent series must have zero constant term")
        a0 = complex(a0)
        if a0 == 0:
            raise DomainError("a0 must be nonzero")
        self.a0 = a0
        self.n = h.n
        self.h = h
        self._h1 = h.differentiate()
        self._h2 = self._h1.differentiate()
        self.label = label or f"{a0} * exp(poly(n={h.n}, N={h.order}))"

    def value(self, z):
        return self.a0 * np.exp(self.h(z))

    def deriv1(self, z):
        return self.value(z) * self._h1(z)

    def deriv2(self, z):
        d1 = self._h1(z)
        return self.value(z) * (self._h2(z) + d1 * d1)

    def is_constant(self, tol: float = 1e-15) -> bool:
        return self.h.is_constant(tol)


class Rotated(AnalyticFunction):
    """``z -> f(e^{i phi} z)``.

    Rotates every extremal angle by ``-phi`` while leaving the modulus
    landscape, and hence every chain quantity, unchanged.
    """

    def __init__(self, inner: AnalyticFunction, phi: float):
        self.inner = inner
        self.phi = float(phi)
        self._w = complex(np.exp(1j * self.phi))
        self.a0 = inner.a0
        self.n = inner.n
        self.label = f"rotate({inner.label}, {self.phi})"

    def value(self, z):
        return self.inner.value(self._w * z)

    def deriv1(self, z):
        return self._w * self.inner.deriv1(self._w * z)

    def deriv2(self, z):
        return self._w * self._w * self.inner.deriv2(self._w * z)

    def is_constant(self, tol: float = 1e-15) -> bool:
        return self.inner.is_constant(tol)


class Reciprocal(AnalyticFunction):
    """Pointwise ``1/f``; defined wherever ``f`` has no zeros.

    ``1/f`` keeps the class index ``n`` (its expansion is
    ``1/a0 + c_n z^n + ...``), which is exactly why minimum-modulus
    statements for ``f`` reduce to maximum-modulus ones for ``1/f``.
    """

    def __init__(self, inner: AnalyticFunction):
        if inner.a0 == 0:
            raise DomainError("cannot take the reciprocal of a function with f(0) = 0")
        self.inner = inner
        self.a0 = 1.0 / complex(inner.a0)
        self.n = inner.n
        self.label = f"1/({inner.label})"

    def value(self, z):
        return 1.0 / self.inner.value(z)

    def deriv1(self, z):
        v = self.inner.value(z)
        return -self.inner.deriv1(z) / (v * v)

    def deriv2(self, z):
        v = self.inner.value(z)
        d1 = self.inner.deriv1(z)
        return (2.0 * d1 * d1 / v - self.inner.deriv2(z)) / (v * v)

    def is_constant(self, tol: float = 1e-15) -> bool:
        return self.inner.is_constant(tol)
