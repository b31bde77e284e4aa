"""
Test functions as expressions
=============================

The command line takes functions as text.  The same parser is available
from Python and returns a vectorised callable.
"""

import numpy as np

from anacont import parse_expr
from anacont.expr import ExprError, to_source

f = parse_expr("0.2/(1 - z/4)")
print(f(np.array([0, 1j, 2])))

# '^' binds tightest and groups to the right.
print(parse_expr("-2^2")(0), parse_expr("2^3^2")(0))
print(to_source(parse_expr("1 + z^2*exp(-z)")))

try:
    parse_expr("exp(z, 1)")
except ExprError as exc:
    print(exc.code, exc.offset)
