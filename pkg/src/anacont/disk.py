"""Continuation from the unit disk into the disk ``|z| < R``.

Samples of ``f`` on the unit circle, each in error by at most ``epsilon``,
are turned into Taylor coefficients by the DFT; the series is cut at
``n = ceil(log(1/epsilon) / log R)`` and evaluated in the larger disk.  The
truncation is the whole regularisation.  If ``|f| <= 1/2`` on ``|z| < R``
the error at ``z`` is of order ``epsilon**alpha(z)`` with
``alpha = 1 - log|z| / log R``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import alpha_disk
from .errors import ParameterError
from .series import (
    CircleSamples,
    TaylorSeries,
    circle_points,
    coeffs_from_circle_samples,
    eval_taylor,
    tail_bound,
)

__all__ = [
    "DiskProblem",
    "ContinuationResult",
    "truncation_degree",
    "build_continuation",
    "continue_at",
    "noisy_samples",
    "adversarial_samples",
]


def truncation_degree(epsilon: float, R: float) -> int:
    """``ceil(log(1/epsilon) / log R)``, treating near-integers as integers."""
    x = -math.log(epsilon) / math.log(R)
    k = round(x)
    if abs(x - k) <= 1e-9 * max(1.0, x):
        return int(k)
    return math.ceil(x)


@dataclass(frozen=True)
class DiskProblem:
    """Outer radius ``R``, data accuracy ``epsilon``, sup bound ``bound_M`` and degree ``n``.

    ``n`` defaults to :func:`truncation_degree`.
    """

    R: float
    epsilon: float
    bound_M: float = 0.5
    n: int | None = None

    def __post_init__(self):
        if not self.R > 1:
            raise ParameterError(f"R must exceed 1, got {self.R!r}", "bad_outer_radius")
        if not 0 < self.epsilon < 1:
            raise ParameterError(f"epsilon must lie in (0, 1), got {self.epsilon!r}", "bad_epsilon")
        if not self.bound_M > 0:
            raise ParameterError(f"bound_M must be positive, got {self.bound_M!r}", "bad_bound")
        if self.n is None:
            object.__setattr__(self, "n", truncation_degree(self.epsilon, self.R))
        elif self.n < 0:
            raise ParameterError(f"n must be nonnegative, got {self.n}", "bad_degree")


@dataclass(frozen=True)
class ContinuationResult:
    value: complex
    predicted_error: float
    truncation_bound: float
    sampling_bound: float

    @property
    def error_bound(self) -> float:
        """Rigorous bound: sampling part plus truncation tail."""
        return self.sampling_bound + self.truncation_bound


def build_continuation(samples: CircleSamples, problem: DiskProblem) -> TaylorSeries:
    """Degree-``problem.n`` Taylor series from unit-circle samples."""
    if samples.radius != 1.0 or samples.center != 0:
        raise ParameterError("samples must lie on the unit circle about 0", "bad_sample_circle")
    if samples.N <= problem.n:
        raise ParameterError(
            f"N={samples.N} samples cannot resolve degree n={problem.n}", "insufficient_samples"
        )
    return coeffs_from_circle_samples(samples, problem.n, radius=problem.R)


def continue_at(series: TaylorSeries, problem: DiskProblem, z: complex) -> ContinuationResult:
    """Evaluate the continuation at ``1 <= |z| < R`` with its error estimates.

    ``predicted_error`` is ``epsilon**alpha(z)``.  ``sampling_bound`` is
    ``sum_{k<=n} epsilon |z|**k`` (coefficient errors at most ``epsilon``) and
    ``truncation_bound`` is the tail bound for ``|c_k| <= M R**-k``.
    """
    z = complex(z)
    r = abs(z)
    alpha = alpha_disk(r, problem.R)
    n = series.degree
    if r == 1.0:
        geo = n + 1.0
    else:
        geo = (r ** (n + 1) - 1.0) / (r - 1.0)
    return ContinuationResult(
        value=eval_taylor(series, z),
        predicted_error=problem.epsilon**alpha,
        truncation_bound=tail_bound(problem.bound_M, problem.R, n, r),
        sampling_bound=problem.epsilon * geo,
    )


def _uniform_disk_noise(rng: np.random.Generator, N: int, epsilon: float) -> np.ndarray:
    modulus = epsilon * rng.uniform(0.0, 1.0, N)
    angle = rng.uniform(0.0, 2 * math.pi, N)
    return modulus * np.exp(1j * angle)


def noisy_samples(f, N: int, epsilon: float, seed: int = 0, center=0.0, radius=1.0) -> CircleSamples:
    """Samples of ``f`` on an ``N``-point circle with perturbations of modulus ``<= epsilon``.

    Each perturbation has modulus uniform in ``[0, epsilon]`` and uniform
    phase; the draw is fixed by ``seed``.
    """
    if epsilon < 0:
        raise ParameterError(f"epsilon must be nonnegative, got {epsilon!r}", "bad_epsilon")
    z = circle_points(N, center, radius)
    values = np.broadcast_to(np.asarray(f(z), dtype=complex), z.shape)
    if epsilon > 0:
        values = values + _uniform_disk_noise(np.random.default_rng(seed), N, epsilon)
    return CircleSamples(center, radius, values)


def adversarial_samples(f, N: int, epsilon: float, target: complex, degree: int) -> CircleSamples:
    """Unit-circle samples perturbed by ``epsilon`` in the worst direction for ``target``.

    A perturbation ``eta_j`` of the samples changes the degree-``degree``
    reconstruction at ``target`` by ``sum_j eta_j K_j`` with
    ``K_j = (1/N) sum_k (target * omega**-j)**k``.  Choosing
    ``eta_j = epsilon * conj(K_j)/|K_j|`` maximises that change subject to
    ``|eta_j| <= epsilon``, realising the least favourable data allowed by
    the accuracy assumption.
    """
    if degree >= N:
        raise ParameterError(f"degree={degree} needs more than N={N} samples", "insufficient_samples")
    z = circle_points(N)
    values = np.broadcast_to(np.asarray(f(z), dtype=complex), z.shape)
    ratio = complex(target) * np.conj(z)
    K = np.sum(ratio[:, None] ** np.arange(degree + 1), axis=1) / N
    phase = np.ones(N, dtype=complex)
    nz = K != 0
    phase[nz] = np.conj(K[nz]) / np.abs(K[nz])
    return CircleSamples(0.0, 1.0, values + epsilon * phase)
