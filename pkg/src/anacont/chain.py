"""Weierstrass chain-of-disks continuation along a channel.

The channel ``G`` is the strip ``|Im z| < 1`` between ``x = 0`` and
``x = L`` capped by unit half-disks.  Expansions are held about
``x_k = k h`` (``h = L / n``); each is trusted on the disk of radius ``r``
around its center, re-expanded about the next center and truncated.  For
``|f| <= 1`` on ``G`` the accuracy available on the ``k``-th small disk is
``eps_k = eps ** exp(-eta x_k)`` with ``eta = (1 + 2h) / (r log(1/r))``.

The marching here is one concrete realisation of the admissible family of
expansions: recenter, truncate to the degree the three-circles estimate
asks for at radius ``1/r``, and optionally perturb the coefficients at the
scheduled accuracy.  Every hypothesis and conclusion is measured on the
trace rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import ChainRate, chain_epsilons, chain_rate
from .disk import _uniform_disk_noise, truncation_degree
from .errors import NumericalAbort, ParameterError
from .series import (
    CircleSamples,
    TaylorSeries,
    circle_points,
    coeffs_from_circle_samples,
    default_sample_count,
    eval_taylor,
    recenter,
)

__all__ = [
    "ChainConfig",
    "ChainTrace",
    "REALIZATION",
    "plan_chain",
    "chain_step",
    "run_chain",
]

REALIZATION = "recenter-truncate-perturb"


@dataclass(frozen=True, eq=False)
class ChainConfig:
    """Discretisation of the channel and the accuracy schedule.

    Attributes:
        L: Channel length.
        n_steps: Number of steps ``n``; centers are ``x_k = k L / n``, ``k = 0..n``.
        h: Step ``L / n``.
        r: Radius of the disks on which expansions are trusted.
        epsilon0: Accuracy of the initial data on the first small disk.
        rate: Digit decay rate for ``(r, h)``.
        xs: Centers ``x_0..x_n``.
        epsilons: Scheduled accuracies ``eps_0..eps_n``.
        degrees: Truncation degrees ``n_0..n_n``.
    """

    L: float
    n_steps: int
    h: float
    r: float
    epsilon0: float
    rate: ChainRate
    xs: np.ndarray
    epsilons: np.ndarray
    degrees: np.ndarray


def plan_chain(L: float, n_steps: int, r: float, epsilon0: float) -> ChainConfig:
    """Validate the channel parameters and build the schedule.

    Degrees are ``n_k = ceil(log(1/eps_k) / log(1/r))``: the disk rule with
    the trusted radius ``r`` rescaled to 1 and the outer radius to ``1/r``.

    Raises:
        ParameterError: one distinct code per violated condition
            (``bad_length``, ``bad_steps``, ``bad_r``, ``r_too_large``,
            ``bad_h``, ``h_too_large``, ``overlap_violated``, ``bad_epsilon``).
    """
    if not L > 0:
        raise ParameterError(f"channel length must be positive, got {L!r}", "bad_length")
    if int(n_steps) != n_steps or n_steps < 1:
        raise ParameterError(f"n_steps must be a positive integer, got {n_steps!r}", "bad_steps")
    n_steps = int(n_steps)
    h = L / n_steps
    rate = chain_rate(r, h)
    if not 0 < epsilon0 < 1:
        raise ParameterError(f"epsilon0 must lie in (0, 1), got {epsilon0!r}", "bad_epsilon")
    xs = h * np.arange(n_steps + 1)
    eps = chain_epsilons(epsilon0, rate, xs)
    degrees = np.array([max(1, truncation_degree(e, 1.0 / r)) for e in eps])
    for arr in (xs, eps, degrees):
        arr.setflags(write=False)
    return ChainConfig(float(L), n_steps, h, float(r), float(epsilon0), rate, xs, eps, degrees)


def _perturb(coeffs: np.ndarray, level: float, r: float, rng: np.random.Generator) -> np.ndarray:
    # m coefficients, each below level * r**-j / m: at most level on the r-disk.
    m = coeffs.size
    scale = r ** -np.arange(m, dtype=float) / m
    return coeffs + scale * _uniform_disk_noise(rng, m, level)


def chain_step(f_k: TaylorSeries, config: ChainConfig, k: int, noise: bool = False, rng=None) -> TaylorSeries:
    """Move the expansion at ``x_k`` to ``x_{k+1}``.

    The series is re-expanded, truncated to ``n_{k+1}`` and, with ``noise``,
    perturbed by at most ``eps_{k+1}`` on the radius-``r`` disk.

    Raises:
        ParameterError: ``f_k`` is not centred at ``x_k`` or ``k`` is out of range.
        NumericalAbort: the coefficients stopped being finite.
    """
    if not 0 <= k < config.n_steps:
        raise ParameterError(f"step index {k} outside 0..{config.n_steps - 1}", "bad_step")
    if abs(f_k.center - config.xs[k]) > 1e-12 * max(1.0, config.L):
        raise ParameterError(
            f"series centred at {f_k.center!r}, expected x_{k}={config.xs[k]!r}", "center_mismatch"
        )
    nxt = recenter(f_k, config.h, int(config.degrees[k + 1]), radius=1.0)
    coeffs = np.asarray(nxt.coeffs)
    if noise:
        if rng is None:
            rng = np.random.default_rng()
        coeffs = _perturb(coeffs, float(config.epsilons[k + 1]), config.r, rng)
    if not np.all(np.isfinite(coeffs)):
        raise NumericalAbort(f"non-finite coefficients at step {k + 1}", "coefficient_overflow")
    return TaylorSeries(complex(config.xs[k + 1]), coeffs, 1.0)


@dataclass(frozen=True, eq=False)
class ChainTrace:
    """Measured quantities of one run, indexed by the step ``k``.

    Attributes:
        config: The schedule the run followed.
        measured_error: ``measured_error[k]`` is the sup of ``|f_{k-1} - f|`` on
            ``|z - x_k| = r`` for ``k >= 1`` and of ``|f_0 - f|`` on
            ``|z - x_0| = r`` for ``k = 0``; to be compared with ``eps_k``.
        step_error: ``step_error[k]`` is the sup of ``|f_k - f_{k-1}|`` on
            ``|z - x_k| = r`` (``|f_0 - f|`` for ``k = 0``), ``k = 0..n-1``.
        disk_norm: sup of ``|f_k|`` on ``|z - x_k| = 1``.
        coeff_norm: largest coefficient modulus of ``f_k``.
        noise: Whether the samples and steps were perturbed.
        realization: Name of the construction used for the ``f_k``.
    """

    config: ChainConfig
    measured_error: np.ndarray
    step_error: np.ndarray
    disk_norm: np.ndarray
    coeff_norm: np.ndarray
    noise: bool
    realization: str = REALIZATION

    @property
    def xs(self):
        return self.config.xs

    @property
    def scheduled(self):
        return self.config.epsilons

    @property
    def degrees(self):
        return self.config.degrees[: self.config.n_steps]

    @property
    def digits(self):
        with np.errstate(divide="ignore"):
            return -np.log10(self.measured_error)

    def hypotheses_hold(self, norm_slack: float = 0.0) -> bool:
        """Initial accuracy, step accuracies and ``|f_k| <= 1`` on ``D_k``, as measured."""
        eps = self.config.epsilons[: self.config.n_steps]
        return bool(np.all(self.step_error <= eps) and np.all(self.disk_norm <= 1.0 + norm_slack))

    def conclusion_holds(self) -> bool:
        """``|f_{k-1} - f| <= eps_k`` on every small disk ``k = 1..n``."""
        return bool(np.all(self.measured_error[1:] <= self.config.epsilons[1:]))

    def fit_digit_decay(self, x_min: float = 0.0, x_max: float = math.inf) -> float:
        """Least-squares rate ``lam`` in ``digits(x) ~ C exp(-lam x)``.

        Uses steps ``k >= 1`` with ``x_min <= x_k <= x_max`` and a positive
        number of correct digits.
        """
        x = self.xs[1:]
        d = self.digits[1:]
        keep = (x >= x_min) & (x <= x_max) & np.isfinite(d) & (d > 0)
        if keep.sum() < 2:
            raise ParameterError("need at least two usable steps to fit a rate", "too_few_points")
        slope, _ = np.polyfit(x[keep], np.log(d[keep]), 1)
        return float(-slope)

    def rows(self):
        """One dict per step, for tabular output."""
        n = self.config.n_steps
        out = []
        for k in range(n + 1):
            row = {
                "k": k,
                "x": float(self.xs[k]),
                "scheduled": float(self.scheduled[k]),
                "measured": float(self.measured_error[k]),
            }
            if k < n:
                row.update(
                    degree=int(self.degrees[k]),
                    step_error=float(self.step_error[k]),
                    disk_norm=float(self.disk_norm[k]),
                    coeff_norm=float(self.coeff_norm[k]),
                )
            out.append(row)
        return out


def _sup_on_circle(g, center, radius, n_points):
    z = circle_points(n_points, center, radius)
    return float(np.max(np.abs(g(z))))


def _lebesgue_constant(N: int, n: int, fine: int = 8) -> float:
    # Sup-norm amplification of sample errors by the degree-n DFT reconstruction.
    theta = 2 * np.pi * np.arange(fine * N) / (fine * N)
    ratio = np.exp(1j * (theta[:, None] - 2 * np.pi * np.arange(N)[None, :] / N))
    kernel = np.zeros_like(ratio)
    term = np.ones_like(ratio)
    for _ in range(n + 1):
        kernel += term
        term = term * ratio
    return float(np.max(np.sum(np.abs(kernel), axis=1)) / N)


def run_chain(f, config: ChainConfig, noise: bool = False, seed: int = 0, n_measure: int = 128) -> ChainTrace:
    """March ``f`` along the channel and measure every inequality involved.

    ``f`` must accept numpy arrays and is assumed bounded by 1 on the
    channel.  ``f_0`` comes from samples on ``|z| = r``; with ``noise`` those
    samples carry errors scaled so that ``|f_0 - f| <= eps_0`` on the
    radius-``r`` disk, and each step perturbs its coefficients at the
    scheduled level.

    Raises:
        NumericalAbort: coefficients overflowed during the march.
    """
    rng = np.random.default_rng(seed)
    n = config.n_steps
    r = config.r
    n0 = int(config.degrees[0])
    N = default_sample_count(n0)
    z0 = circle_points(N, 0.0, r)
    values = np.asarray(f(z0), dtype=complex) * np.ones(N)
    if noise:
        level = config.epsilon0 / _lebesgue_constant(N, n0)
        values = values + _uniform_disk_noise(rng, N, level)
    f_k = coeffs_from_circle_samples(CircleSamples(0.0, r, values), n0, radius=1.0)
    if not np.all(np.isfinite(f_k.coeffs)):
        raise NumericalAbort("non-finite initial coefficients", "coefficient_overflow")

    measured = np.empty(n + 1)
    step_err = np.empty(n)
    disk_norm = np.empty(n)
    coeff_norm = np.empty(n)
    prev = None
    for k in range(n):
        xk = config.xs[k]
        if prev is None:
            step_err[k] = _sup_on_circle(lambda z: eval_taylor(f_k, z) - f(z), xk, r, n_measure)
            measured[0] = step_err[0]
        else:
            p, c = prev, f_k
            step_err[k] = _sup_on_circle(lambda z: eval_taylor(c, z) - eval_taylor(p, z), xk, r, n_measure)
        disk_norm[k] = _sup_on_circle(lambda z: eval_taylor(f_k, z), xk, 1.0, n_measure)
        coeff_norm[k] = float(np.max(np.abs(f_k.coeffs)))
        measured[k + 1] = _sup_on_circle(
            lambda z: eval_taylor(f_k, z) - f(z), config.xs[k + 1], r, n_measure
        )
        if k + 1 < n:
            prev, f_k = f_k, chain_step(f_k, config, k, noise=noise, rng=rng)
    for arr in (measured, step_err, disk_norm, coeff_norm):
        arr.setflags(write=False)
    return ChainTrace(config, measured, step_err, disk_norm, coeff_norm, bool(noise))
