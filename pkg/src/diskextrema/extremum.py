"""Locate extrema of |f| on circles ``|z| = r`` and closed disks ``|z| <= r``.

The search is a coarse uniform angular grid followed by golden-section
refinement of the bracketing arc.  Golden section alone pins the extremal
angle only to about ``sqrt(eps)`` because |f| is quadratically flat at an
extremum, so when the function's derivative is available (it always is
here) the angle is polished further by bisecting the sign change of the
tangential derivative of ``log |f|``, which crosses zero linearly:

    d/dtheta log|f(r e^{i theta})| = -Im(z f'(z)/f(z)),  z = r e^{i theta}.

The polish is pure bisection on the already-bracketed arc (no Newton
steps) and falls back to the golden-section result whenever no sign
change brackets the winner (flat or noisy landscapes, e.g. constants).

Disk extrema reduce to circle extrema: the maximum modulus of an analytic
function over a closed sub-disk is attained on the boundary circle, and
so is the minimum when the function has no zeros there.  The disk
searches verify that reduction against a coarse 2-D sample and report a
misuse diagnostic when it fails.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    InteriorAboveBoundary,
    InteriorBelowBoundary,
    NoConvergence,
    ZeroInDisk,
    ZeroOnCircle,
)
from .functions import AnalyticFunction

TAU = 2.0 * np.pi

#: Coarse angular grid; resolves minimizer basins for class indices up to ~512.
DEFAULT_GRID = 4096
#: Target angular bracket width for golden-section refinement.
BRACKET_TARGET = 1e-12
#: Tighter target for the tangential-derivative bisection polish.
POLISH_TARGET = 1e-13
#: Iteration cap for either refinement loop.
MAX_ITERATIONS = 200
#: Moduli below this are treated as zeros of f.
ZERO_THRESHOLD = 1e-13
#: Slack allowed when comparing boundary extrema against interior samples.
INTERIOR_TOL = 1e-10

_INV_PHI = (np.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ExtremumResult:
    """A located modulus extremum on the circle ``|z| = r``."""

    theta: float
    z0: complex
    value: float
    grid_size: int
    refine_iterations: int
    bracket_width: float


def modulus_profile(f: AnalyticFunction, r: float, samples: int = DEFAULT_GRID):
    """``[(theta_k, |f(r e^{i theta_k})|)]`` on a uniform angular grid."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"circle radius must lie in (0, 1), got {r}")
    if samples < 8:
        raise DomainError(f"need at least 8 samples, got {samples}")
    thetas = TAU * np.arange(samples) / samples
    moduli = np.abs(f.value(r * np.exp(1j * thetas)))
    return list(zip(thetas.tolist(), moduli.tolist()))


def write_profile_csv(profile, fh) -> None:
    """Write a profile as ``theta,modulus`` rows with 17 significant digits."""
    fh.write("theta,modulus\n")
    for theta, modulus in profile:
        fh.write(f"{theta:.17g},{modulus:.17g}\n")


def _search_circle(f: AnalyticFunction, r: float, grid: int, minimize: bool) -> ExtremumResult:
    profile = modulus_profile(f, r, grid)
    moduli = np.array([v for _, v in profile])
    if minimize and moduli.min() < ZERO_THRESHOLD:
        raise ZeroOnCircle(
            f"|f| = {moduli.min():.3e} on |z| = {r}; the function vanishes on the circle"
        )
    sign = 1.0 if minimize else -1.0

    def phi(theta: float) -> tuple[float, float]:
        """(wrapped angle, signed modulus there); smaller is always better."""
        wrapped = theta % TAU
        return wrapped, sign * float(np.abs(f.value(r * np.exp(1j * wrapped))))

    # Grid winner: first index attaining the extremum, i.e. the smallest theta.
    winner = int(np.argmin(sign * moduli))
    best_theta = profile[winner][0]
    best_value = sign * moduli[winner]
    grid_value = best_value
    step = TAU / grid
    a = best_theta - step
    b = best_theta + step

    def consider(theta: float, value: float) -> None:
        nonlocal best_theta, best_value
        if value < best_value:
            best_theta, best_value = theta, value

    iterations = 0
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    tc, fc = phi(c)
    td, fd = phi(d)
    consider(tc, fc)
    consider(td, fd)
    while b - a > BRACKET_TARGET and iterations < MAX_ITERATIONS:
        iterations += 1
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            tc, fc = phi(c)
            consider(tc, fc)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            td, fd = phi(d)
            consider(td, fd)
    if b - a > BRACKET_TARGET:
        raise NoConvergence(f"bracket still {b - a:.3e} wide after {iterations} iterations")
    bracket = b - a

    # Tangential-derivative polish.  g(theta) = Im(z f'/f) crosses zero
    # downward at a modulus minimum and upward at a maximum.
    def tangential(theta: float) -> float:
        z = r * np.exp(1j * (theta % TAU))
        v = f.value(z)
        if abs(v) <= ZERO_THRESHOLD:
            raise ZeroOnCircle(f"|f| = {abs(v):.3e} at theta = {theta % TAU}")
        return sign * float((z * f.deriv1(z) / v).imag)

    lo = best_theta - step
    hi = best_theta + step
    try:
        glo, ghi = tangential(lo), tangential(hi)
        if glo > 0.0 > ghi:
            while hi - lo > POLISH_TARGET and iterations < MAX_ITERATIONS:
                iterations += 1
                mid = 0.5 * (lo + hi)
                gm = tangential(mid)
                if gm > 0.0:
                    lo = mid
                elif gm < 0.0:
                    hi = mid
                else:
                    lo = hi = mid
            t_mid, f_mid = phi(0.5 * (lo + hi))
            # Accept against the grid winner, not the golden-section point:
            # the two agree to the evaluation noise floor, and the polished
            # angle is what makes the log-derivative ratio real.
            if f_mid <= grid_value:
                best_theta, best_value = t_mid, f_mid
                bracket = hi - lo
    except ZeroOnCircle:
        # A sub-grid zero: fatal for a minimum search, irrelevant for a
        # maximum search (keep the golden-section result there).
        if minimize:
            raise

    theta = best_theta % TAU
    return ExtremumResult(
        theta=theta,
        z0=complex(r * np.exp(1j * theta)),
        value=sign * best_value,
        grid_size=grid,
        refine_iterations=iterations,
        bracket_width=bracket,
    )


def find_min_on_circle(f: AnalyticFunction, r: float, grid: int = DEFAULT_GRID) -> ExtremumResult:
    """Minimize |f| over ``|z| = r``.

    Ties between symmetric minimizers are broken toward the smallest grid
    angle; that is a reporting convention, not a uniqueness claim.
    """
    return _search_circle(f, r, grid, minimize=True)


def find_max_on_circle(f: AnalyticFunction, r: float, grid: int = DEFAULT_GRID) -> ExtremumResult:
    """Maximize |f| over ``|z| = r``."""
    return _search_circle(f, r, grid, minimize=False)


def _interior_moduli(f: AnalyticFunction, r: float) -> np.ndarray:
    radii = r * np.arange(1, 65) / 64.0
    angles = TAU * np.arange(256) / 256.0
    z = radii[:, None] * np.exp(1j * angles[None, :])
    flat = np.abs(f.value(z)).ravel()
    return np.concatenate(([abs(complex(f.value(0j)))], flat))


def find_min_on_disk(f: AnalyticFunction, r: float, grid: int = DEFAULT_GRID) -> ExtremumResult:
    """Minimize |f| over the closed disk ``|z| <= r``.

    For a zero-free analytic function the minimum sits on the boundary
    circle, so the search delegates there; a coarse 64 x 256 interior
    sample both screens for zeros and cross-checks the reduction.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"disk radius must lie in (0, 1), got {r}")
    samples = _interior_moduli(f, r)
    low = float(samples.min())
    if low < ZERO_THRESHOLD:
        raise ZeroInDisk(f"|f| = {low:.3e} at an interior sample; f vanishes on |z| <= {r}")
    result = find_min_on_circle(f, r, grid)
    if result.value > low + INTERIOR_TOL:
        raise InteriorBelowBoundary(
            f"interior sample {low:.17g} undercuts boundary minimum {result.value:.17g}"
        )
    return result


def find_max_on_disk(f: AnalyticFunction, r: float, grid: int = DEFAULT_GRID) -> ExtremumResult:
    """Maximize |f| over the closed disk ``|z| <= r`` (always on the boundary)."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"disk radius must lie in (0, 1), got {r}")
    samples = _interior_moduli(f, r)
    high = float(samples.max())
    result = find_max_on_circle(f, r, grid)
    if result.value < high - INTERIOR_TOL:
        raise InteriorAboveBoundary(
            f"interior sample {high:.17g} exceeds boundary maximum {result.value:.17g}"
        )
    return result
