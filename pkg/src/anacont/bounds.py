"""Closed-form accuracy exponents for analytic continuation.

If a function bounded by 1 on a region is known to accuracy ``eps`` on a
subset, its value at a further point ``z`` is determined to ``eps**alpha(z)``.
This module collects ``alpha`` for the geometries handled by the package:

* infinite strip ``0 < Re w < 1`` with data on ``Re w = 0`` (three lines),
* disk of radius ``R`` with data on the unit disk (three circles),
* half-strip of half-width 1 with data on its end segment,
* Bernstein ellipse with data on ``[-1, 1]``,
* chain of disks marching along a channel.

It also provides the extremal functions that show the strip and disk
exponents cannot be improved, and the grid check of the inequality that
closes the chain-of-disks induction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import brentq

from .conformal import bernstein_rho
from .errors import ParameterError

__all__ = [
    "Geometry",
    "BoundReport",
    "ChainRate",
    "ConverseWitness",
    "alpha_strip",
    "alpha_disk",
    "alpha_half_strip",
    "beta_half_strip",
    "alpha_ellipse",
    "decade_length",
    "chain_rate",
    "chain_epsilons",
    "chain_inequality_margin",
    "verify_chain_inequality",
    "converse_witness",
    "bound_report",
    "headline_constants",
]

_FOUR_OVER_PI = 4.0 / math.pi
# Slack for |z| computed from points meant to lie on the unit circle.
_UNIT_SLACK = 1e-12


class Geometry(str, Enum):
    INFINITE_STRIP = "infinite_strip"
    DISK = "disk"
    HALF_STRIP = "half_strip"
    ELLIPSE = "ellipse"
    CHAIN = "chain"


@dataclass(frozen=True)
class BoundReport:
    """Exponent ``alpha`` at a query point and, if ``epsilon`` is given, ``epsilon**alpha``."""

    geometry: Geometry
    query: complex
    alpha: float
    epsilon: float | None = None

    @property
    def predicted_error(self):
        if self.epsilon is None:
            return None
        return self.epsilon**self.alpha

    @property
    def digits_fraction(self) -> float:
        return self.alpha


@dataclass(frozen=True)
class ChainRate:
    """Digit decay rate ``eta = (1 + 2h) / (r log(1/r))`` of chain-of-disks marching."""

    r: float
    h: float
    eta: float


def alpha_strip(re_w: float) -> float:
    """Exponent ``1 - Re w`` for the infinite strip with data on ``Re w = 0``."""
    if not 0 < re_w < 1:
        raise ParameterError(f"Re w must lie in (0, 1), got {re_w!r}", "outside_strip")
    return 1.0 - re_w


def alpha_disk(z_abs: float, R: float) -> float:
    """Three-circles exponent ``1 - log|z| / log R`` for ``1 <= |z| < R``.

    Points strictly inside the unit disk are rejected rather than clamped.
    """
    if not R > 1:
        raise ParameterError(f"R must exceed 1, got {R!r}", "bad_outer_radius")
    if z_abs < 1 - _UNIT_SLACK:
        raise ParameterError(
            f"|z|={z_abs!r} lies inside the data disk |z| <= 1", "inside_data_set"
        )
    if not z_abs < R:
        raise ParameterError(f"|z|={z_abs!r} is not inside |z| < R={R!r}", "outside_region")
    return min(1.0, 1.0 - math.log(z_abs) / math.log(R))


def _check_x(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or np.any(np.isnan(x)):
        raise ParameterError("half-strip distance x must be >= 0", "negative_x")
    return x


def alpha_half_strip(x):
    """``(4/pi) e^{-pi x/2} - (4/pi - 1) e^{-pi x}``: the guaranteed digit fraction at ``x``."""
    x = _check_x(x)
    e1 = np.exp(-0.5 * math.pi * x)
    a = _FOUR_OVER_PI * e1 - (_FOUR_OVER_PI - 1.0) * e1 * e1
    return float(a) if a.ndim == 0 else a


def beta_half_strip(x):
    """``(4/pi) e^{-pi x/2}``: no method can beat ``eps**beta`` at ``x`` in general."""
    x = _check_x(x)
    b = _FOUR_OVER_PI * np.exp(-0.5 * math.pi * x)
    return float(b) if b.ndim == 0 else b


def decade_length(x: float, factor: float = 10.0) -> float:
    """Distance ``d`` with ``alpha(x) / alpha(x + d) = factor`` in the half-strip.

    Tends to ``(2/pi) log(factor)`` for large ``x``.
    """
    a0 = alpha_half_strip(x)
    target = a0 / factor
    g = lambda d: alpha_half_strip(x + d) - target  # noqa: E731
    hi = 1.0
    while g(hi) > 0:
        hi *= 2.0
    return brentq(g, 0.0, hi, xtol=1e-14, rtol=4 * np.finfo(float).eps)


def alpha_ellipse(z, rho_max: float) -> float:
    """Three-circles exponent transplanted to Bernstein ellipses.

    ``1 - log rho(z) / log rho_max`` where ``rho(z)`` is the Bernstein
    parameter of ``z``; equals 1 on ``[-1, 1]``.
    """
    if not rho_max > 1:
        raise ParameterError(f"rho_max must exceed 1, got {rho_max!r}", "bad_outer_radius")
    rho = bernstein_rho(complex(z))
    if not rho < rho_max:
        raise ParameterError(
            f"z={z!r} (rho={rho:g}) lies outside the ellipse rho={rho_max:g}", "outside_region"
        )
    return 1.0 - math.log(rho) / math.log(rho_max)


def chain_rate(r: float, h: float) -> ChainRate:
    """Rate ``eta`` for disks of data radius ``r`` spaced ``h`` apart.

    Raises:
        ParameterError: with code ``r_too_large``, ``h_too_large`` or
            ``overlap_violated`` (``h >= 1 - r``), or ``bad_r`` / ``bad_h``
            for nonpositive values.
    """
    if not r > 0:
        raise ParameterError(f"r must be positive, got {r!r}", "bad_r")
    if r > 0.5:
        raise ParameterError(f"r={r!r} exceeds 1/2", "r_too_large")
    if not h > 0:
        raise ParameterError(f"h must be positive, got {h!r}", "bad_h")
    if h > 0.25:
        raise ParameterError(f"h={h!r} exceeds 1/4", "h_too_large")
    if not h < 1 - r:
        raise ParameterError(f"h={h!r} does not satisfy h < 1 - r", "overlap_violated")
    eta = (1.0 + 2.0 * h) / (r * math.log(1.0 / r))
    return ChainRate(r=float(r), h=float(h), eta=eta)


def chain_epsilons(epsilon: float, rate: ChainRate, xs) -> np.ndarray:
    """Accuracy schedule ``eps_k = epsilon ** exp(-eta x_k)``."""
    if not 0 < epsilon < 1:
        raise ParameterError(f"epsilon must lie in (0, 1), got {epsilon!r}", "bad_epsilon")
    xs = np.asarray(xs, dtype=float)
    if np.any(xs < 0):
        raise ParameterError("positions must be nonnegative", "negative_x")
    if np.any(np.diff(xs) < 0):
        raise ParameterError("positions must be nondecreasing", "unsorted_positions")
    return np.exp(math.log(epsilon) * np.exp(-rate.eta * xs))


def chain_inequality_margin(r, h):
    """``LHS - RHS`` of the reduced inequality closing the chain induction.

    ``LHS = 1 - log(1 + h/r) / log(1/r)``, ``RHS = exp((-h - 2h**2) / (r log(1/r)))``.
    """
    r = np.asarray(r, dtype=float)
    h = np.asarray(h, dtype=float)
    L = np.log(1.0 / r)
    lhs = 1.0 - np.log1p(h / r) / L
    rhs = np.exp(-(h + 2.0 * h * h) / (r * L))
    m = lhs - rhs
    return float(m) if m.ndim == 0 else m


def verify_chain_inequality(grid_r: int = 200, grid_h: int = 200) -> float:
    """Minimum margin over ``r in (0, 1/2]``, ``h in (0, 1/4]``.

    Grids start one step above zero, where both sides are undefined.  A
    positive return value confirms the inequality at every grid point.
    """
    if grid_r < 2 or grid_h < 2:
        raise ParameterError("grid sizes must be at least 2", "grid_too_small")
    r = 0.5 * np.arange(1, grid_r + 1) / grid_r
    h = 0.25 * np.arange(1, grid_h + 1) / grid_h
    rr, hh = np.meshgrid(r, h, indexing="ij")
    return float(np.min(chain_inequality_margin(rr, hh)))


@dataclass(frozen=True)
class ConverseWitness:
    """Extremal function meeting a strip or disk bound with equality.

    Strip: ``h(w) = eps * exp(nu w)`` with ``nu = -log eps``.
    Disk: ``g(z) = (z / R)**n`` with ``eps = R**-n``.
    Calling the witness evaluates it.
    """

    geometry: Geometry
    epsilon: float
    nu_or_n: float
    R: float | None = None

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if self.geometry is Geometry.INFINITE_STRIP:
            out = self.epsilon * np.exp(self.nu_or_n * z)
        else:
            out = (z / self.R) ** int(self.nu_or_n)
        return complex(out) if out.ndim == 0 else out

    def bound(self, z):
        """``eps**alpha`` at ``z``, the value ``|witness(z)|`` attains."""
        z = complex(z)
        if self.geometry is Geometry.INFINITE_STRIP:
            return self.epsilon ** alpha_strip(z.real)
        return self.epsilon ** alpha_disk(abs(z), self.R)


def converse_witness(geometry, epsilon: float, R: float | None = None, rel_tol: float = 1e-9):
    """Build the extremal function for the strip or disk bound.

    The disk witness exists only for ``epsilon = R**-n`` with integer ``n``;
    other values are rejected.
    """
    geometry = Geometry(geometry)
    if not 0 < epsilon < 1:
        raise ParameterError(f"epsilon must lie in (0, 1), got {epsilon!r}", "bad_epsilon")
    if geometry is Geometry.INFINITE_STRIP:
        return ConverseWitness(geometry, float(epsilon), -math.log(epsilon))
    if geometry is not Geometry.DISK:
        raise ParameterError(f"no closed-form witness for {geometry.value}", "unsupported_geometry")
    if R is None or not R > 1:
        raise ParameterError(f"disk witness needs R > 1, got {R!r}", "bad_outer_radius")
    n_real = -math.log(epsilon) / math.log(R)
    n = round(n_real)
    if abs(n_real - n) > rel_tol * max(1.0, n_real):
        raise ParameterError(
            f"epsilon={epsilon!r} is not of the form R**-n (got n={n_real:.6g})", "epsilon_not_in_sequence"
        )
    return ConverseWitness(geometry, float(epsilon), float(n), float(R))


def bound_report(geometry, query, epsilon=None, **params) -> BoundReport:
    """Evaluate the exponent for ``geometry`` at ``query``.

    Keyword parameters: ``R`` for the disk, ``rho_max`` for the ellipse,
    ``rate`` (a :class:`ChainRate`) for the chain, where ``query`` is the
    distance ``x`` along the channel.
    """
    geometry = Geometry(geometry)
    if geometry is Geometry.INFINITE_STRIP:
        alpha = alpha_strip(complex(query).real)
    elif geometry is Geometry.DISK:
        alpha = alpha_disk(abs(complex(query)), params["R"])
    elif geometry is Geometry.HALF_STRIP:
        alpha = alpha_half_strip(complex(query).real)
    elif geometry is Geometry.ELLIPSE:
        alpha = alpha_ellipse(query, params["rho_max"])
    else:
        x = complex(query).real
        if x < 0:
            raise ParameterError("chain position must be >= 0", "negative_x")
        alpha = math.exp(-params["rate"].eta * x)
    if epsilon is not None and not 0 < epsilon < 1:
        raise ParameterError(f"epsilon must lie in (0, 1), got {epsilon!r}", "bad_epsilon")
    return BoundReport(geometry, complex(query), float(alpha), epsilon)


def headline_constants() -> dict:
    """Digit-loss factors over a channel of length ``2 pi``, and the half-strip decade length."""
    return {
        "half_strip_factor": math.pi / 4 * math.exp(math.pi**2),
        "chain_factor": math.exp(2 * math.pi * math.e),
        "decade_length": 2 / math.pi * math.log(10),
    }
