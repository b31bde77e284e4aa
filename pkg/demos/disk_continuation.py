"""
Continuing a function out of the unit disk
==========================================

Values of f(z) = 0.2/(1 - z/4) are known on the unit circle to accuracy
eps.  The function is analytic and bounded by 1/2 in |z| < 2, which is all
the continuation is allowed to assume.
"""

import math

import numpy as np

from anacont import DiskProblem, alpha_disk, build_continuation, continue_at, noisy_samples
from anacont.disk import adversarial_samples
from anacont.series import default_sample_count


def f(z):
    return 0.2 / (1 - z / 4)


# The truncation degree balances the data error against the tail.
problem = DiskProblem(R=2.0, epsilon=1e-12)
N = default_sample_count(problem.n)
print(f"degree n = {problem.n}, samples N = {N}")

samples = noisy_samples(f, N, problem.epsilon, seed=0)
series = build_continuation(samples, problem)

# Along the positive axis the digits lost grow with log|z|.
for r in (1.0, 1.2, 1.4, math.sqrt(2), 1.6, 1.8, 1.9):
    res = continue_at(series, problem, r)
    err = abs(res.value - f(r))
    print(f"|z| = {r:.4f}  alpha = {alpha_disk(r, 2):.3f}  error = {err:.2e}  eps^alpha = {res.predicted_error:.2e}")

# Random noise is averaged by the DFT.  The worst admissible perturbation
# is not, and at |z| = sqrt(2) it leaves about half the digits.
z = math.sqrt(2)
worst = build_continuation(adversarial_samples(f, N, problem.epsilon, z, problem.n), problem)
print(f"worst-case error at sqrt(2): {abs(worst(z) - f(z)):.2e}  (sqrt(eps) = {math.sqrt(problem.epsilon):.0e})")

# The rigorous bound is the sampling part plus the tail.
res = continue_at(series, problem, 1.4j)
print(f"rigorous bound at 1.4i: {res.error_bound:.2e}, observed {abs(res.value - f(1.4j)):.2e}")
