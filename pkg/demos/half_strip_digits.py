"""
Digit loss along a half-strip
=============================

Data on the left edge of the half-strip |Im z| < 1, Re z > 0 control the
function only weakly far to the right.  The fraction of digits kept, alpha,
decays like exp(-pi x / 2).
"""

import math

import numpy as np

from anacont import alpha_half_strip, beta_half_strip, decade_length, halfstrip_to_strip, headline_constants
from anacont.conformal import strip_asymp_envelope

for x in np.linspace(0, 2 * math.pi, 7):
    print(f"x = {x:5.3f}  alpha = {alpha_half_strip(x):.3e}  beta = {beta_half_strip(x):.3e}")

# Each decade of alpha costs a fixed length once x is moderate.
for x in (0.0, 1.0, 2.0, 4.0):
    print(f"decade length from x = {x}: {decade_length(x):.6f}")

# The map to the strip 0 < Re w < 1 sits between the two envelopes.
for x in (0.0, 0.5, 1.0, 3.0):
    gap = halfstrip_to_strip(x).gap.real
    lower, upper = strip_asymp_envelope(x)
    print(f"x = {x}: {lower:.6f} <= 1 - w = {gap:.6f} <= {upper:.6f}")

for name, value in headline_constants().items():
    print(f"{name}: {value:.8g}")
