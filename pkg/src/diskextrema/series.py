"""Truncated power-series algebra on the open unit disk.

A series is the polynomial ``a0 + sum_{k=n}^{N} a_k z^k``.  The indices
``1..n-1`` are structurally zero and never stored, which keeps the
"first non-constant term at index >= n" structure visible in the
representation itself.  A truncated series is treated as an exact
polynomial (a polynomial is a perfectly good analytic function on the
disk), so no tail estimation is performed anywhere.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SeriesFormatError

#: Truncation order used when a caller does not request one explicitly.
DEFAULT_ORDER = 32


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Polynomial ``a0 + sum_{k=n}^{N} coeffs[k-n] z^k``.

    ``n >= 1`` is the first index that may carry a non-constant term.
    ``coeffs`` holds the coefficients for indices ``n..N`` densely; an
    empty array means the series is just the constant ``a0``.
    """

    a0: complex
    n: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 1:
            raise DomainError(f"first coefficient index must be a positive integer, got {self.n!r}")
        c = np.asarray(self.coeffs, dtype=np.complex128).reshape(-1).copy()
        c.setflags(write=False)
        object.__setattr__(self, "a0", complex(self.a0))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        """Truncation order N (``n - 1`` for a bare constant)."""
        return self.n + len(self.coeffs) - 1

    def is_constant(self, tol: float = 0.0) -> bool:
        """True when every stored coefficient has magnitude <= ``tol``."""
        if len(self.coeffs) == 0:
            return True
        return bool(np.max(np.abs(self.coeffs)) <= tol)

    def dense_coefficients(self, order: int | None = None) -> np.ndarray:
        """Coefficients ``a_0..a_order`` as one dense vector."""
        if order is None:
            order = max(self.order, 0)
        out = np.zeros(order + 1, dtype=np.complex128)
        out[0] = self.a0
        stop = min(self.order, order)
        if stop >= self.n:
            out[self.n : stop + 1] = self.coeffs[: stop - self.n + 1]
        return out

    def __call__(self, z):
        """Evaluate at ``z`` (scalar or ndarray) with ``|z| < 1``.

        Horner evaluation of the stored tail, then one multiplication by
        ``z**n``; evaluation at 0 returns ``a0`` exactly.
        """
        if np.any(np.abs(z) >= 1.0):
            raise DomainError("evaluation point must satisfy |z| < 1")
        acc = 0.0 + 0.0j
        for c in self.coeffs[::-1]:
            acc = acc * z + c
        return self.a0 + acc * z**self.n

    def differentiate(self) -> "PowerSeries":
        """Termwise derivative; the truncation order drops by one."""
        if len(self.coeffs) == 0:
            return PowerSeries(0.0, 1, np.empty(0))
        k = np.arange(self.n, self.order + 1)
        d = k * self.coeffs
        if self.n == 1:
            return PowerSeries(d[0], 1, d[1:])
        return PowerSeries(0.0, self.n - 1, d)


def invert_series(s: PowerSeries, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Reciprocal ``1/s`` truncated at ``order``.

    Uses the convolution recurrence ``c_k = -(1/a0) sum_{j=n}^{k} a_j c_{k-j}``
    with ``c_0 = 1/a0``.  Because the sum starts at ``j = n``, the result has
    exactly zero coefficients at indices ``1..n-1``: the reciprocal stays in
    the same class as ``s``.
    """
    if s.a0 == 0:
        raise DomainError("cannot invert a series with a0 = 0")
    if order < s.n:
        raise DomainError(f"inversion order {order} must be >= first index {s.n}")
    inv_a0 = 1.0 / s.a0
    a = s.dense_coefficients(order)
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = inv_a0
    for k in range(1, order + 1):
        if k >= s.n:
            c[k] = -inv_a0 * (a[s.n : k + 1] @ c[k - s.n :: -1])
    return PowerSeries(inv_a0, s.n, c[s.n :])


def exp_series(h: PowerSeries, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Exponential ``exp(h)`` truncated at ``order``, for ``h(0) = 0``.

    Integrates ``E' = h' E`` coefficientwise:
    ``e_0 = 1``, ``e_k = (1/k) sum_{j=n}^{k} j h_j e_{k-j}``.
    The result lies in the same class (first non-constant index ``>= n``)
    and, as the exponential of something, represents a function with no
    zeros at all.
    """
    if h.a0 != 0:
        raise DomainError("exp_series requires a zero constant term")
    if order < h.n:
        raise DomainError(f"truncation order {order} must be >= first index {h.n}")
    jh = np.arange(order + 1) * h.dense_coefficients(order)
    e = np.zeros(order + 1, dtype=np.complex128)
    e[0] = 1.0
    for k in range(1, order + 1):
        if k >= h.n:
            e[k] = (jh[h.n : k + 1] @ e[k - h.n :: -1]) / k
    return PowerSeries(1.0, h.n, e[h.n :])


# ---------------------------------------------------------------------------
# Series literal files
#
#   # comment lines (and trailing comments) are ignored
#   a0_re a0_im
#   n N
#   k re im          one line per stored coefficient, n <= k <= N
# ---------------------------------------------------------------------------


def parse_series(text: str) -> PowerSeries:
    """Parse the line-oriented series literal format."""
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if len(rows) < 2:
        raise SeriesFormatError("need an a0 line and an 'n N' line")
    try:
        if len(rows[0]) != 2:
            raise ValueError("a0 line must hold two numbers")
        a0 = complex(float(rows[0][0]), float(rows[0][1]))
        if len(rows[1]) != 2:
            raise ValueError("index line must hold 'n N'")
        n, order = int(rows[1][0]), int(rows[1][1])
    except ValueError as exc:
        raise SeriesFormatError(f"bad series header: {exc}") from exc
    if n < 1:
        raise SeriesFormatError(f"first index n must be >= 1, got {n}")
    if order < n - 1:
        raise SeriesFormatError(f"truncation order {order} below n-1 = {n - 1}")
    coeffs = np.zeros(order - n + 1, dtype=np.complex128)
    seen: set[int] = set()
    for row in rows[2:]:
        try:
            if len(row) != 3:
                raise ValueError("coefficient line must hold 'k re im'")
            k, re, im = int(row[0]), float(row[1]), float(row[2])
        except ValueError as exc:
            raise SeriesFormatError(f"bad coefficient line {' '.join(row)!r}: {exc}") from exc
        if not n <= k <= order:
            raise SeriesFormatError(f"coefficient index {k} outside {n}..{order}")
        if k in seen:
            raise SeriesFormatError(f"duplicate coefficient index {k}")
        seen.add(k)
        coeffs[k - n] = complex(re, im)
    return PowerSeries(a0, n, coeffs)


def format_series(s: PowerSeries) -> str:
    """Render a series in the literal file format (17 significant digits)."""
    out = io.StringIO()
    out.write(f"{s.a0.real:.17g} {s.a0.imag:.17g}\n")
    out.write(f"{s.n} {s.order}\n")
    for k, c in zip(range(s.n, s.order + 1), s.coeffs):
        out.write(f"{k} {c.real:.17g} {c.imag:.17g}\n")
    return out.getvalue()


def read_series(path) -> PowerSeries:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_series(fh.read())


def write_series(s: PowerSeries, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_series(s))
