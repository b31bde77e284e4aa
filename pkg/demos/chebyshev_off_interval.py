"""
A Chebyshev interpolant evaluated off the interval
==================================================

log(1 + x^2) is resolved on [-1, 1] to machine precision.  Its Chebyshev
series still converges in the Bernstein ellipse through the singularities
at +-i, with accuracy shrinking toward that ellipse.
"""

import math

import numpy as np

from anacont import GridSpec, bernstein_rho, build_cheb, error_field

p = build_cheb(lambda x: np.log(1 + x**2))
print(f"degree {p.degree}, estimated rho {p.rho_est:.4f}, true rho {1 + math.sqrt(2):.4f}")
print(f"p(0) = {p(0.0):.2e}")
print(f"p(i/2) = {p(0.5j).real:.10f}, ln(3/4) = {math.log(0.75):.10f}")

# Up the imaginary axis the error follows tol**alpha.
for y in (0.2, 0.4, 0.6, 0.8, 0.9):
    z = 1j * y
    alpha = 1 - math.log(bernstein_rho(z)) / math.log(p.rho_est)
    print(f"z = {y}i  error {abs(p(z) - np.log(1 + z * z)):.2e}  predicted {p.tol**alpha:.2e}")

# Coarse error field, written as CSV for plotting elsewhere.
field = error_field(p, lambda z: np.log(1 + z * z), GridSpec(-1.5, 1.5, -1.0, 1.0, 7, 5))
for y, row in zip(field.y, field.measured):
    print(f"{y:+.1f}  " + "  ".join(f"{v:8.1e}" for v in row))
