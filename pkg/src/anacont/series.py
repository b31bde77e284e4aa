"""Taylor series about an arbitrary center.

A :class:`TaylorSeries` stores the coefficients ``c_0..c_n`` of
``sum c_k (z - center)**k`` together with the radius of the disk on which
the represented function is known to be analytic and bounded.  The
routines here evaluate such series, recover coefficients from samples on a
circle by the discrete Fourier transform, move the expansion point, and
bound the discarded tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError

__all__ = [
    "TaylorSeries",
    "CircleSamples",
    "circle_points",
    "sample_circle",
    "default_sample_count",
    "eval_taylor",
    "coeffs_from_circle_samples",
    "recenter",
    "tail_bound",
]


def _frozen_array(values, dtype=complex):
    arr = np.array(values, dtype=dtype).ravel()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class TaylorSeries:
    """Truncated power series ``sum_k coeffs[k] * (z - center)**k``.

    Attributes:
        center: Expansion point.
        coeffs: Complex coefficients, lowest order first (read-only array).
        radius: Radius of the disk about ``center`` on which the represented
            function is analytic and bounded.  May be ``math.inf``.
    """

    center: complex
    coeffs: np.ndarray
    radius: float = math.inf

    def __post_init__(self):
        coeffs = _frozen_array(self.coeffs)
        if coeffs.size == 0:
            raise ParameterError("a Taylor series needs at least one coefficient", "empty_series")
        if not self.radius > 0:
            raise ParameterError(f"radius must be positive, got {self.radius!r}", "bad_radius")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, z):
        return eval_taylor(self, z)

    def __repr__(self):
        return (
            f"TaylorSeries(center={self.center!r}, degree={self.degree}, "
            f"radius={self.radius!r})"
        )


@dataclass(frozen=True, eq=False)
class CircleSamples:
    """Values at ``center + radius * exp(2j*pi*j/N)`` for ``j = 0..N-1``."""

    center: complex
    radius: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = _frozen_array(self.values)
        if values.size < 1:
            raise ParameterError("need at least one sample", "no_samples")
        if not self.radius > 0:
            raise ParameterError(f"radius must be positive, got {self.radius!r}", "bad_radius")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))

    @property
    def N(self) -> int:
        return self.values.size

    def points(self) -> np.ndarray:
        return circle_points(self.N, self.center, self.radius)


def circle_points(N: int, center: complex = 0.0, radius: float = 1.0) -> np.ndarray:
    """The ``N`` points ``center + radius * omega**j``, starting at angle 0."""
    return center + radius * np.exp(2j * np.pi * np.arange(N) / N)


def sample_circle(f, N: int, center: complex = 0.0, radius: float = 1.0) -> CircleSamples:
    """Evaluate ``f`` (vectorised over numpy arrays) on an ``N``-point circle grid."""
    z = circle_points(N, center, radius)
    values = np.broadcast_to(np.asarray(f(z), dtype=complex), z.shape)
    return CircleSamples(center, radius, values)


def default_sample_count(n_max: int, oversample: int = 4) -> int:
    """Smallest power of two that is at least ``oversample * (n_max + 1)``."""
    target = max(1, oversample * (n_max + 1))
    return 1 << (target - 1).bit_length()


def eval_taylor(s: TaylorSeries, z):
    """Evaluate ``s`` at ``z`` (scalar or array) by nested multiplication."""
    t = np.asarray(z, dtype=complex) - s.center
    acc = np.full(t.shape, s.coeffs[-1], dtype=complex)
    for c in s.coeffs[-2::-1]:
        acc = acc * t + c
    if acc.ndim == 0:
        return complex(acc)
    return acc


def coeffs_from_circle_samples(samples: CircleSamples, n_max: int, radius=None) -> TaylorSeries:
    """Recover Taylor coefficients ``0..n_max`` from equispaced circle samples.

    The inverse DFT of the samples gives ``c_k * radius**k`` plus aliased
    contributions ``c_{k+mN} * radius**(k+mN)``, which are negligible for
    functions analytic well beyond the sampling circle.

    Args:
        samples: Values on the circle of ``samples.radius`` about ``samples.center``.
        n_max: Highest coefficient index wanted; must satisfy ``n_max < N``.
        radius: Analyticity radius recorded on the result.  Defaults to the
            sampling radius.

    Returns:
        TaylorSeries: Degree ``n_max`` series about ``samples.center``.
    """
    N = samples.N
    if n_max < 0:
        raise ParameterError(f"n_max must be nonnegative, got {n_max}", "bad_degree")
    if n_max >= N:
        raise ParameterError(
            f"n_max={n_max} needs more than N={N} samples", "insufficient_samples"
        )
    spectrum = np.fft.fft(samples.values) / N
    scale = samples.radius ** -np.arange(n_max + 1, dtype=float)
    coeffs = spectrum[: n_max + 1] * scale
    return TaylorSeries(samples.center, coeffs, samples.radius if radius is None else radius)


def _shift_weights(delta: complex, degree: int) -> np.ndarray:
    # Row j holds C(j, i) * delta**(j - i), i.e. the coefficients of (delta + t)**j.
    w = np.zeros((degree + 1, degree + 1), dtype=complex)
    w[0, 0] = 1.0
    for j in range(1, degree + 1):
        w[j, 1 : j + 1] = w[j - 1, :j]
        w[j, :j] += delta * w[j - 1, :j]
    return w


def recenter(s: TaylorSeries, delta: complex, new_degree: int, radius=None) -> TaylorSeries:
    """Re-expand ``s`` about ``s.center + delta`` and truncate at ``new_degree``.

    The new coefficients are ``b_i = sum_{j>=i} C(j, i) c_j delta**(j-i)``.
    The binomial weights are accumulated row by row as the coefficients of
    ``(delta + t)**j``, so no factorials are ever formed.

    Args:
        s: Series to re-expand.
        delta: Shift of the expansion point; ``|delta| < s.radius``.
        new_degree: Degree of the returned series.
        radius: Analyticity radius of the result.  Defaults to
            ``s.radius - |delta|``, the largest disk about the new center
            contained in the old one.
    """
    delta = complex(delta)
    if not abs(delta) < s.radius:
        raise ParameterError(
            f"|delta|={abs(delta):g} leaves the disk of radius {s.radius:g}", "outside_disk"
        )
    if new_degree < 0:
        raise ParameterError(f"new_degree must be nonnegative, got {new_degree}", "bad_degree")
    if delta == 0:
        b = np.zeros(new_degree + 1, dtype=complex)
        m = min(new_degree, s.degree) + 1
        b[:m] = s.coeffs[:m]
    else:
        b = s.coeffs @ _shift_weights(delta, s.degree)
        if new_degree > s.degree:
            b = np.concatenate([b, np.zeros(new_degree - s.degree, dtype=complex)])
        b = b[: new_degree + 1]
    if radius is None:
        radius = s.radius - abs(delta)
    return TaylorSeries(s.center + delta, b, radius)


def tail_bound(M: float, R: float, n: int, z_abs: float) -> float:
    """Bound on ``|sum_{k>n} c_k z**k|`` given ``|c_k| <= M R**-k``.

    Equals ``M q**(n+1) / (1 - q)`` with ``q = z_abs / R``.
    """
    if z_abs < 0:
        raise ParameterError(f"z_abs must be nonnegative, got {z_abs}", "bad_modulus")
    if not z_abs < R:
        raise ParameterError(
            f"|z|={z_abs:g} is not inside the radius {R:g}; the tail diverges", "outside_disk"
        )
    q = z_abs / R
    return M * q ** (n + 1) / (1.0 - q)
