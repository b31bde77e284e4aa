"""Command-line front end.

Every subcommand writes a JSON document (``--format json``, the default) or
CSV rows (``--format csv``) to stdout or to ``--out``.  Relative ``--out``
paths are resolved against ``$ANACONT_OUTPUT_DIR`` when it is set.  Numeric
options accept constant expressions such as ``1/e`` or ``2^-51``.

Exit status: 0 on success, 2 when a parameter is rejected, 3 when a
computation aborts.  Failures print ``{"error": {"code": ..., "message": ...}}``
on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import bounds, chain, cheb, conformal, disk, series
from .errors import AnacontError, NumericalAbort, ParameterError
from .expr import parse_expr

SCHEMA_VERSION = 1
OUTPUT_DIR_ENV = "ANACONT_OUTPUT_DIR"


class _JSONArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("usage", message)
        sys.exit(2)


def _emit_error(code, message):
    doc = {"schema_version": SCHEMA_VERSION, "error": {"code": code, "message": message}}
    sys.stderr.write(json.dumps(doc, sort_keys=True) + "\n")


def _constant(text: str) -> complex:
    value = parse_expr(text)(0.0)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ParameterError(f"{text!r} does not evaluate to a finite number", "bad_number")
    return value


def _real(text: str) -> float:
    value = _constant(text)
    if value.imag != 0:
        raise ParameterError(f"{text!r} must be real", "bad_number")
    return value.real


def _cplx(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _float_list(text: str) -> list:
    return [_real(t) for t in text.split(",") if t.strip()]


def _cmd_coeffs(args):
    f = parse_expr(args.f)
    N = args.N or series.default_sample_count(args.n)
    samples = series.sample_circle(f, N, _constant(args.center), _real(args.radius))
    s = series.coeffs_from_circle_samples(samples, args.n)
    rows = [{"k": k, "re": c.real, "im": c.imag} for k, c in enumerate(s.coeffs)]
    return {"N": N, "center": _cplx(s.center), "radius": s.radius}, rows


def _cmd_disk(args):
    f = parse_expr(args.f)
    problem = disk.DiskProblem(_real(args.R), _real(args.eps), _real(args.M))
    N = args.N or series.default_sample_count(problem.n)
    samples = disk.noisy_samples(f, N, problem.epsilon, seed=args.seed)
    s = disk.build_continuation(samples, problem)
    rmax = _real(args.rmax) if args.rmax else 0.95 * problem.R
    rng = np.random.default_rng(args.seed + 1)
    radii = rng.uniform(1.0, rmax, args.points)
    angles = rng.uniform(0.0, 2 * math.pi, args.points)
    rows = []
    for z in radii * np.exp(1j * angles):
        res = disk.continue_at(s, problem, z)
        rows.append(
            {
                "re": z.real,
                "im": z.imag,
                "abs": abs(z),
                "measured": abs(res.value - f(z)),
                "predicted": res.predicted_error,
                "truncation_bound": res.truncation_bound,
                "sampling_bound": res.sampling_bound,
            }
        )
    ratio = max(r["measured"] / r["predicted"] for r in rows)
    return {"n": problem.n, "N": N, "max_measured_over_predicted": ratio}, rows


def _cmd_strip(args):
    xs = _float_list(args.x) if args.x else list(np.linspace(0.0, 2 * math.pi, 9))
    rows = [
        {
            "x": x,
            "alpha": bounds.alpha_half_strip(x),
            "beta": bounds.beta_half_strip(x),
            "decade_length": bounds.decade_length(x),
        }
        for x in xs
    ]
    return {"asymptotic_decade_length": 2 / math.pi * math.log(10)}, rows


def _cmd_map(args):
    xs = _float_list(args.x) if args.x else list(np.linspace(0.0, _real(args.xmax), args.points))
    rows = []
    violations = 0
    for x in xs:
        mp = conformal.halfstrip_to_strip(x)
        lower, upper = conformal.strip_asymp_envelope(x)
        gap = mp.gap.real
        ok = lower <= gap <= upper
        violations += not ok
        rows.append(
            {
                "x": x,
                "w": mp.w.real,
                "gap": gap,
                "lower": lower,
                "upper": upper,
                "inside": ok,
                "form_difference": abs(complex(conformal.strip_map_sinh(x)) - complex(conformal.strip_map_exp(x)))
                if x <= 5
                else None,
            }
        )
    return {"envelope_violations": violations}, rows


def _cmd_chain(args):
    f = parse_expr(args.f)
    config = chain.plan_chain(_real(args.L), args.steps, _real(args.r), _real(args.eps0))
    trace = chain.run_chain(f, config, noise=args.noise, seed=args.seed, n_measure=args.measure)
    summary = {
        "h": config.h,
        "eta": config.rate.eta,
        "realization": trace.realization,
        "noise": trace.noise,
        "hypotheses_hold": trace.hypotheses_hold(),
        "conclusion_holds": trace.conclusion_holds(),
    }
    try:
        summary["fitted_rate"] = trace.fit_digit_decay()
    except ParameterError:
        summary["fitted_rate"] = None
    return summary, trace.rows()


def _cmd_cheb(args):
    f = parse_expr(args.f)
    p = cheb.build_cheb(f.real, _real(args.tol))
    summary = {
        "degree": p.degree,
        "tol": p.tol,
        "rho_est": p.rho_est,
        "coeffs": [float(a) for a in np.real(p.coeffs)],
    }
    rows = []
    for text in args.eval or []:
        z = _constant(text)
        value = complex(cheb.eval_cheb_complex(p, z))
        rho = conformal.bernstein_rho(z)
        row = {"z": text, "re": value.real, "im": value.imag, "rho": rho}
        if rho < p.rho_est:
            alpha = bounds.alpha_ellipse(z, p.rho_est)
            row.update(alpha=alpha, predicted=p.tol**alpha)
        exact = f(z)
        row["error"] = abs(value - exact)
        rows.append(row)
    summary["evaluations"] = rows
    if args.grid:
        parts = args.grid.split(",")
        if len(parts) != 6:
            raise ParameterError("grid needs x_min,x_max,y_min,y_max,nx,ny", "bad_grid")
        spec = cheb.GridSpec(*[_real(t) for t in parts[:4]], int(parts[4]), int(parts[5]))
        field = cheb.error_field(p, f, spec)
        return summary, None, field
    return summary, rows


def _cmd_verify_ineq(args):
    margin = bounds.verify_chain_inequality(args.grid_r, args.grid_h)
    return {
        "grid_r": args.grid_r,
        "grid_h": args.grid_h,
        "min_margin": margin,
        "holds": margin > 0,
        "margin_at_r_half_h_quarter": bounds.chain_inequality_margin(0.5, 0.25),
    }, None


def _cmd_headline(args):
    return bounds.headline_constants(), None


COMMANDS = {
    "coeffs": _cmd_coeffs,
    "disk": _cmd_disk,
    "strip": _cmd_strip,
    "map": _cmd_map,
    "chain": _cmd_chain,
    "cheb": _cmd_cheb,
    "verify-ineq": _cmd_verify_ineq,
    "headline": _cmd_headline,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _JSONArgumentParser(prog="anacont", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_JSONArgumentParser)

    p = sub.add_parser("coeffs", parents=[common], help="Taylor coefficients from circle samples")
    p.add_argument("--f", default="1/(1-z/2)")
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--center", default="0")
    p.add_argument("--radius", default="1")

    p = sub.add_parser("disk", parents=[common], help="disk continuation: measured vs eps^alpha")
    p.add_argument("--f", default="0.2/(1-z/4)")
    p.add_argument("--R", default="2")
    p.add_argument("--eps", default="1e-12")
    p.add_argument("--M", default="0.5")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--rmax", default=None)

    p = sub.add_parser("strip", parents=[common], help="half-strip alpha, beta and decade lengths")
    p.add_argument("--x", default=None, help="comma-separated distances")

    p = sub.add_parser("map", parents=[common], help="half-strip map and its envelope")
    p.add_argument("--x", default=None, help="comma-separated distances")
    p.add_argument("--xmax", default="10")
    p.add_argument("--points", type=int, default=1000)

    p = sub.add_parser("chain", parents=[common], help="chain-of-disks trace")
    p.add_argument("--f", default="1/(z+2)")
    p.add_argument("--L", default="1")
    p.add_argument("--steps", type=int, default=20)
    p.add_argument("--r", default="1/e")
    p.add_argument("--eps0", default="1e-12")
    p.add_argument("--noise", action="store_true")
    p.add_argument("--measure", type=int, default=128)

    p = sub.add_parser("cheb", parents=[common], help="Chebyshev approximation and complex evaluation")
    p.add_argument("--f", default="log(1+z^2)")
    p.add_argument("--tol", default="2^-51")
    p.add_argument("--eval", action="append", help="complex point, repeatable")
    p.add_argument("--grid", default=None, help="x_min,x_max,y_min,y_max,nx,ny for the error field")

    p = sub.add_parser("verify-ineq", parents=[common], help="grid check of the chain inequality")
    p.add_argument("--grid-r", type=int, default=200)
    p.add_argument("--grid-h", type=int, default=200)

    sub.add_parser("headline", parents=[common], help="digit-loss factors over length 2 pi")
    return parser


def _params(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("out", "format")}


def _render(args, summary, rows, field=None) -> str:
    params = _params(args)
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": args.command, "params": params, "result": summary}
        if rows is not None:
            doc["rows"] = rows
        if field is not None:
            doc["field"] = [list(map(float, r)) for r in field.rows()]
        return json.dumps(doc, sort_keys=True, indent=2, default=_json_default) + "\n"
    buf = io.StringIO()
    header = json.dumps({"schema_version": SCHEMA_VERSION, "command": args.command, "params": params}, sort_keys=True)
    if field is not None:
        field.to_csv(buf, comment=header)
        return buf.getvalue()
    buf.write(f"# {header}\n")
    if rows is None:
        rows = [summary]
    keys = list(rows[0].keys()) if rows else []
    for r in rows:
        keys.extend(k for k in r if k not in keys)
    writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({k: _csv_value(r.get(k)) for k in keys})
    return buf.getvalue()


def _csv_value(v):
    if isinstance(v, float):
        return f"{v:.17g}"
    if v is None:
        return ""
    return v


def _json_default(obj):
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, (complex, np.complexfloating)):
        return _cplx(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _write(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    if not os.path.isabs(out) and os.environ.get(OUTPUT_DIR_ENV):
        out = os.path.join(os.environ[OUTPUT_DIR_ENV], out)
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
        text = _render(args, *result)
        _write(text, args.out)
    except NumericalAbort as exc:
        _emit_error(exc.code, str(exc))
        return 3
    except AnacontError as exc:
        _emit_error(exc.code, str(exc))
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
