"""Analytic continuation with quantified loss of accuracy.

Taylor series in disks, the half-strip map, Chebyshev series on an
interval and chain-of-disks marching, each paired with the closed-form
exponent ``alpha`` such that data accurate to ``eps`` determine the
continuation to ``eps**alpha``.
"""

from .bounds import (
    BoundReport,
    ChainRate,
    ConverseWitness,
    Geometry,
    alpha_disk,
    alpha_ellipse,
    alpha_half_strip,
    alpha_strip,
    beta_half_strip,
    bound_report,
    chain_epsilons,
    chain_rate,
    converse_witness,
    decade_length,
    headline_constants,
    verify_chain_inequality,
)
from .chain import ChainConfig, ChainTrace, chain_step, plan_chain, run_chain
from .cheb import ChebApprox, GridField, GridSpec, build_cheb, error_field, estimate_ellipse, eval_cheb_complex
from .conformal import MapPoint, bernstein_rho, halfstrip_to_strip, joukowski, strip_asymp_envelope
from .disk import (
    ContinuationResult,
    DiskProblem,
    adversarial_samples,
    build_continuation,
    continue_at,
    noisy_samples,
)
from .errors import AnacontError, NumericalAbort, ParameterError
from .expr import FunctionExpr, parse_expr
from .series import (
    CircleSamples,
    TaylorSeries,
    coeffs_from_circle_samples,
    default_sample_count,
    eval_taylor,
    recenter,
    sample_circle,
    tail_bound,
)

__version__ = "0.1.0"
