"""Chebyshev approximation on [-1, 1] and its use off the interval.

A function sampled at Chebyshev points is represented by a finite
Chebyshev series; the same series evaluated at complex ``z`` continues the
function into the Bernstein ellipses around the interval, with accuracy
degrading from ``tol`` on ``[-1, 1]`` to nothing at the ellipse
``rho = tol**(-1/degree)`` the resolution implies.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .conformal import bernstein_rho
from .errors import NumericalAbort, ParameterError

__all__ = [
    "ChebApprox",
    "GridSpec",
    "GridField",
    "chebpts2",
    "vals2coeffs",
    "build_cheb",
    "eval_cheb_complex",
    "estimate_ellipse",
    "error_field",
]

TOL_MIN = 1e-16
TOL_MAX = 1e-1
PLATEAU = 3


def chebpts2(n: int) -> np.ndarray:
    """Chebyshev points of the second kind ``cos(pi j / n)``, ``j = 0..n``."""
    if n == 0:
        return np.array([0.0])
    # Sine form keeps the points exactly antisymmetric.
    m = np.arange(-n, n + 1, 2)
    return np.sin(np.pi * m / (2 * n))[::-1]


def vals2coeffs(values) -> np.ndarray:
    """Chebyshev coefficients of the interpolant through values at ``chebpts2``.

    The values are extended evenly around the circle and transformed with the
    FFT, the discrete cosine identity for second-kind points.
    """
    v = np.asarray(values)
    n = v.size - 1
    if n == 0:
        return v.astype(float if np.isrealobj(v) else complex).copy()
    ext = np.concatenate([v, v[-2:0:-1]])
    a = np.fft.fft(ext)[: n + 1] / n
    a[0] /= 2
    a[n] /= 2
    return a.real if np.isrealobj(v) else a


def _clenshaw(coeffs, z):
    b1 = np.zeros_like(z)
    b2 = np.zeros_like(z)
    for a in coeffs[:0:-1]:
        b1, b2 = 2 * z * b1 - b2 + a, b1
    return z * b1 - b2 + coeffs[0]


@dataclass(frozen=True, eq=False)
class ChebApprox:
    """Finite Chebyshev series ``sum a_k T_k(x)`` resolved to ``tol``.

    ``rho_est = tol**(-1/degree)``, the Bernstein parameter of the region the
    approximation claims.
    """

    coeffs: np.ndarray
    tol: float
    degree: int
    rho_est: float

    def __call__(self, z):
        return eval_cheb_complex(self, z)


def build_cheb(f, tol: float = 2.0**-51, max_log2: int = 16) -> ChebApprox:
    """Adaptive Chebyshev interpolant of ``f`` on ``[-1, 1]``.

    Interpolates at ``2**m + 1`` second-kind points for ``m = 3, 4, ...``
    until the last three coefficients all fall below ``tol * max|a_k|``,
    then drops trailing coefficients under that threshold.

    Args:
        f: Function accepting a numpy array of reals.
        tol: Relative accuracy target, ``TOL_MIN <= tol < TOL_MAX``.
        max_log2: Give up beyond ``2**max_log2`` points.

    Raises:
        ParameterError: ``tol`` is out of range.
        NumericalAbort: no plateau was reached (``f`` is probably not
            analytic on the interval) or ``f`` returned non-finite values.
    """
    if not TOL_MIN <= tol < TOL_MAX:
        raise ParameterError(f"tol={tol!r} outside [{TOL_MIN:g}, {TOL_MAX:g})", "bad_tolerance")
    for m in range(3, max_log2 + 1):
        n = 2**m
        values = np.asarray(f(chebpts2(n)))
        if values.shape != (n + 1,):
            values = np.broadcast_to(values, (n + 1,))
        if not np.all(np.isfinite(values)):
            raise NumericalAbort("function returned non-finite values on [-1, 1]", "nonfinite_values")
        a = vals2coeffs(values)
        if np.iscomplexobj(a) and np.all(np.abs(a.imag) <= 1e-15 * np.max(np.abs(a))):
            a = a.real
        scale = np.max(np.abs(a))
        thresh = tol * scale
        if scale == 0:
            a = a[:1]
            break
        if np.all(np.abs(a[-PLATEAU:]) < thresh):
            last = np.nonzero(np.abs(a) >= thresh)[0][-1]
            a = a[: last + 1]
            break
    else:
        raise NumericalAbort(
            f"no coefficient plateau below {tol:g} with {2**max_log2} points", "no_convergence"
        )
    a = np.array(a)
    a.setflags(write=False)
    degree = a.size - 1
    rho = math.inf if degree == 0 else tol ** (-1.0 / degree)
    return ChebApprox(a, float(tol), degree, rho)


def eval_cheb_complex(p: ChebApprox, z):
    """Evaluate ``p`` at real or complex ``z`` by the Clenshaw recurrence."""
    z_arr = np.asarray(z)
    dtype = complex if np.iscomplexobj(z_arr) or np.iscomplexobj(p.coeffs) else float
    out = _clenshaw(p.coeffs, z_arr.astype(dtype))
    if out.ndim == 0:
        return out.item()
    return out


def estimate_ellipse(p: ChebApprox) -> float:
    """``tol**(-1/degree)``: Bernstein parameter of the region resolved by ``p``."""
    if p.degree < 4:
        raise ParameterError(f"degree {p.degree} is too low to estimate an ellipse", "degree_too_low")
    return p.tol ** (-1.0 / p.degree)


@dataclass(frozen=True)
class GridSpec:
    """Rectangle ``[x_min, x_max] x [y_min, y_max]`` sampled at ``nx x ny`` points."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int

    def __post_init__(self):
        if not (2 <= self.nx <= 2000 and 2 <= self.ny <= 2000):
            raise ParameterError("grid resolution must be between 2 and 2000 per side", "bad_grid")
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ParameterError("grid bounds must be increasing", "bad_grid")

    def axes(self):
        return np.linspace(self.x_min, self.x_max, self.nx), np.linspace(self.y_min, self.y_max, self.ny)


@dataclass(frozen=True, eq=False)
class GridField:
    """Measured ``|f - p|`` and predicted ``tol**alpha`` on a grid; arrays are ``(ny, nx)``."""

    x: np.ndarray
    y: np.ndarray
    measured: np.ndarray
    predicted: np.ndarray

    def rows(self):
        for j, yv in enumerate(self.y):
            for i, xv in enumerate(self.x):
                yield xv, yv, self.measured[j, i], self.predicted[j, i]

    def to_csv(self, fh, comment: str | None = None) -> None:
        """Write ``x,y,measured,predicted`` rows (x fastest), 17 significant digits."""
        if comment:
            for line in comment.splitlines():
                fh.write(f"# {line}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["x", "y", "measured", "predicted"])
        for row in self.rows():
            writer.writerow([f"{float(v):.17g}" for v in row])


def error_field(p: ChebApprox, f, grid: GridSpec) -> GridField:
    """Compare ``p`` with ``f`` on a rectangle of the complex plane.

    ``f`` receives a complex array.  Cells where ``f`` is singular hold
    ``inf``.  The prediction is ``tol**alpha`` with
    ``alpha = 1 - log rho(z) / log rho_est`` clipped to ``[0, 1]``, so it is 1
    outside the estimated ellipse.
    """
    xs, ys = grid.axes()
    Z = xs[None, :] + 1j * ys[:, None]
    with np.errstate(all="ignore"):
        fz = np.asarray(f(Z), dtype=complex) * np.ones_like(Z)
        measured = np.abs(fz - eval_cheb_complex(p, Z))
    measured = np.where(np.isfinite(measured), measured, np.inf)
    rho = bernstein_rho(Z)
    if math.isinf(p.rho_est):
        alpha = np.ones_like(rho)
    else:
        alpha = np.clip(1.0 - np.log(rho) / math.log(p.rho_est), 0.0, 1.0)
    predicted = p.tol**alpha
    return GridField(xs, ys, measured, predicted)
