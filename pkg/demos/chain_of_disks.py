"""
Marching along a channel with a chain of disks
==============================================

A Taylor expansion of 1/(z + 2) known to 1e-12 near the origin is
re-expanded step by step along [0, 1].  After each step only the accuracy
on a small disk of radius r is trusted, and the digits decay exponentially
in the distance travelled.
"""

import math

from anacont import plan_chain, run_chain
from anacont.bounds import chain_rate


def f(z):
    return 1 / (z + 2)


# The rate eta(r, h) is smallest near r = 1/e.
for r in (0.2, 1 / math.e, 0.5):
    print(f"r = {r:.4f}: eta = {chain_rate(r, 0.05).eta:.4f}")

config = plan_chain(L=1.0, n_steps=20, r=1 / math.e, epsilon0=1e-12)
trace = run_chain(f, config, noise=True, seed=0)

print(" k    x     degree  scheduled   measured")
for row in trace.rows()[:-1]:
    print(f"{row['k']:2d}  {row['x']:.2f}  {row['degree']:6d}  {row['scheduled']:.2e}  {row['measured']:.2e}")

print("conclusion holds:", trace.conclusion_holds())
print(f"fitted digit decay {trace.fit_digit_decay():.3f} against eta = {config.rate.eta:.3f}")
