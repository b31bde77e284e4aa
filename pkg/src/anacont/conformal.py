"""Conformal maps used to transplant the strip and disk estimates.

The half-strip ``H = {x > 0, -1 < y < 1}`` is carried onto the strip
``S = {0 < Re w < 1}`` by composing ``u = sinh(pi z / 2)`` (onto the right
half-plane), ``v = (i - u)/(i + u)`` (onto the upper half-plane) and
``w = -(i/pi) log v``.  The end segment ``(-i, i)`` goes to ``Re w = 0``,
the long sides to ``Re w = 1`` and the corners ``z = +-i`` to ``w = +-i inf``.

The Joukowski map and the Bernstein parameter ``rho(z) = |z + sqrt(z**2 - 1)|``
do the same job for an interval and its confocal ellipses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

__all__ = [
    "MapPoint",
    "halfstrip_to_strip",
    "strip_map_sinh",
    "strip_map_exp",
    "strip_map_gap",
    "strip_asymp_envelope",
    "joukowski",
    "bernstein_rho",
]

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class MapPoint:
    """A point of ``H`` with its images under the three stages of the map.

    ``gap`` is ``1 - w`` computed without cancellation; it stays accurate
    when ``w`` is within rounding of 1.  ``corner`` is ``+1`` or ``-1`` at
    ``z = +-i`` (where ``w`` is ``+-i inf``) and 0 elsewhere.
    """

    z: complex
    u: complex
    v: complex
    w: complex
    gap: complex
    corner: int = 0


def _check_halfstrip(z: complex) -> None:
    if not (z.real >= 0 and abs(z.imag) <= 1) or math.isnan(z.real) or math.isnan(z.imag):
        raise ParameterError(
            f"z={z!r} lies outside the closed half-strip x >= 0, |y| <= 1", "outside_halfstrip"
        )


def strip_map_sinh(z):
    """``w = -(i/pi) log((i - sinh(pi z/2)) / (i + sinh(pi z/2)))`` (first form)."""
    u = np.sinh(_HALF_PI * np.asarray(z, dtype=complex))
    return -1j / math.pi * np.log((1j - u) / (1j + u))


def strip_map_exp(z):
    """Second form of the map, ``(2i/pi) log((1 - i e^{pi z/2}) / (-i + e^{pi z/2}))``.

    Numerator and denominator are divided by ``e^{pi z/2}`` so that large
    ``x`` does not overflow.
    """
    t = np.exp(-_HALF_PI * np.asarray(z, dtype=complex))
    return 2j / math.pi * np.log((t - 1j) / (1 - 1j * t))


def strip_map_gap(z):
    """``1 - w`` as ``(4/pi) arctan(exp(-pi z/2))``, free of cancellation near ``w = 1``."""
    t = np.exp(-_HALF_PI * np.asarray(z, dtype=complex))
    return 4.0 / math.pi * np.arctan(t)


def halfstrip_to_strip(z: complex) -> MapPoint:
    """Map a point of the closed half-strip to the strip, keeping the stages.

    ``w(0) = 0`` and ``w -> 1`` as ``x -> inf``; principal logarithms
    (imaginary part in ``(-pi, pi]``) give a continuous branch on the whole
    closed half-strip.  The sinh form is used for ``x <= 1`` and the
    exponential form beyond.

    Raises:
        ParameterError: ``z`` is outside the closed half-strip.
    """
    z = complex(z)
    _check_halfstrip(z)
    if z.real == 0 and abs(z.imag) == 1:
        sign = 1 if z.imag > 0 else -1
        u = complex(0.0, sign)
        v = complex(0.0) if sign > 0 else complex(math.inf, 0.0)
        w = complex(0.0, sign * math.inf)
        return MapPoint(z, u, v, w, complex(1.0, -sign * math.inf), corner=sign)
    if z.real <= 1:
        u = complex(np.sinh(_HALF_PI * z))
        v = (1j - u) / (1j + u)
        w = complex(strip_map_sinh(z))
    else:
        # u and v are only recorded; they overflow harmlessly for huge x.
        with np.errstate(over="ignore", invalid="ignore"):
            u = complex(np.sinh(_HALF_PI * z))
            v = (1j - u) / (1j + u) if math.isfinite(abs(u)) else complex(-1.0, 0.0)
        w = complex(strip_map_exp(z))
    gap = complex(strip_map_gap(z))
    if z.imag == 0:
        w, gap = complex(w.real, 0.0), complex(gap.real, 0.0)
    return MapPoint(z, u, v, w, gap)


def strip_asymp_envelope(x):
    """Two-sided bracket ``(lower, upper)`` for ``1 - w(x)`` on the centreline.

    ``lower = (4/pi) e^{-pi x/2} - (4/pi - 1) e^{-pi x}`` and
    ``upper = (4/pi) e^{-pi x/2}``, valid for ``x >= 0``.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ParameterError("the envelope is defined for x >= 0", "negative_x")
    e1 = np.exp(-_HALF_PI * x)
    upper = 4.0 / math.pi * e1
    lower = upper - (4.0 / math.pi - 1.0) * e1 * e1
    if x.ndim == 0:
        return float(lower), float(upper)
    return lower, upper


def joukowski(w):
    """``(w + 1/w) / 2``."""
    w_arr = np.asarray(w, dtype=complex)
    if np.any(w_arr == 0):
        raise ParameterError("the Joukowski map is singular at w = 0", "joukowski_zero")
    out = 0.5 * (w_arr + 1.0 / w_arr)
    return complex(out) if out.ndim == 0 else out


def bernstein_rho(z):
    """Bernstein parameter ``|z + sqrt(z**2 - 1)|``, branch chosen so it is >= 1.

    ``z`` lies on the ellipse with foci ``+-1`` and semi-axis sum ``rho``.
    Points of ``[-1, 1]`` give exactly 1.  Accepts scalars or arrays.
    """
    z_arr = np.asarray(z, dtype=complex)
    s = np.sqrt(z_arr - 1) * np.sqrt(z_arr + 1)
    rho = np.maximum(np.abs(z_arr + s), np.abs(z_arr - s))
    on_interval = (z_arr.imag == 0) & (np.abs(z_arr.real) <= 1)
    rho = np.where(on_interval, 1.0, np.maximum(rho, 1.0))
    return float(rho) if rho.ndim == 0 else rho
