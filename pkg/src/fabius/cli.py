"""Command-line front door.

Line-oriented plain text by default; ``--json`` switches every command to a
single JSON object ``{"mode": ..., "payload": ...}`` in which exact numbers
are always strings.  Floats print with 17 significant digits so they
round-trip.  Exit codes: 0 success, 1 usage error, 2 internal integrity
violation (or selftest failure).

Environment defaults (flags win): FABIUS_M_MAX for the product truncation,
FABIUS_FOURIER_K for the synthesis length, FABIUS_TABLE_MAX for the largest
level ``table`` accepts and the largest level ``eval`` will scan to find the
minimal common denominator.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import lcm

from . import spectral, stochastic
from .approximants import step_function
from .coefficients import (
    exp_moment_coefficients,
    exp_moment_integer_numerators,
    series_coefficients,
    series_integer_numerators,
)
from .core import Dyadic, format_rational
from .exact import level_denominator_bound, phi_derivative, phi_exact, taylor_at

__all__ = ["main", "render_table"]

USAGE_ERROR = 1
INTEGRITY_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _float_str(x: float) -> str:
    return format(x, ".17g")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"invalid {name}={raw!r}")


def _emit(args, mode: str, payload, text_lines) -> None:
    if args.json:
        print(json.dumps({"mode": mode, "payload": payload}))
    else:
        for line in text_lines:
            print(line)


def level_values(n: int) -> list[Fraction]:
    """phi(q/2^n) for q = 0..2^n."""
    return [phi_exact(Dyadic(q, n)) for q in range((1 << n) + 1)]


def level_denominator(n: int) -> int:
    """Minimal common denominator of the level-n grid values."""
    d = 1
    for v in level_values(n):
        d = lcm(d, v.denominator)
    return d


def render_table(n: int) -> list[str]:
    """Rows ``q<TAB>D*phi(q/2^n)<TAB>phi(q/2^n)`` with D the minimal level denominator."""
    values = level_values(n)
    d = 1
    for v in values:
        d = lcm(d, v.denominator)
    return [
        f"{q}\t{_as_int(v * d)}\t{format_rational(v)}" for q, v in enumerate(values)
    ]


def _as_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return value.numerator


def _cmd_eval(args) -> int:
    t = Dyadic(args.q, args.n)
    value = phi_exact(t)
    if args.n <= args.max_level:
        d = level_denominator(args.n)
    else:
        # beyond the scan cap: valid but possibly non-minimal
        d = level_denominator_bound(args.n)
    scaled = _as_int(value * d)
    _emit(
        args,
        "exact",
        {
            "t": str(t),
            "value": format_rational(value),
            "level_numerator": str(scaled),
            "level_denominator": str(d),
        },
        [format_rational(value), f"{scaled}/{d}"],
    )
    return 0


def _cmd_eval_float(args) -> int:
    fc = spectral.fourier_coefficients(K=args.fourier_k, m_max=args.m_max)
    if args.grid is not None:
        if args.grid < 0:
            raise ValueError("grid level must be >= 0")
        lines = ["t,phi_fourier,phi_exact_if_dyadic,abs_err"]
        rows = []
        for q in range(-(1 << args.grid), (1 << args.grid) + 1):
            t = Dyadic(q, args.grid)
            approx = spectral.phi_fourier(float(t), fc)
            exact_value = phi_exact(t)
            err = abs(approx - float(exact_value))
            rows.append(
                {
                    "t": str(t),
                    "phi_fourier": approx,
                    "phi_exact": format_rational(exact_value),
                    "abs_err": err,
                }
            )
            lines.append(
                f"{_float_str(float(t))},{_float_str(approx)},"
                f"{format_rational(exact_value)},{_float_str(err)}"
            )
        _emit(args, "float", rows, lines)
        return 0
    value = spectral.phi_fourier(args.t, fc)
    _emit(args, "float", {"t": args.t, "value": value}, [_float_str(value)])
    return 0


def _cmd_table(args) -> int:
    if args.n < 0 or args.n > args.max_level:
        print(
            f"fabius: error: table level must be in 0..{args.max_level}",
            file=sys.stderr,
        )
        return USAGE_ERROR
    lines = render_table(args.n)
    payload = {
        "level": args.n,
        "denominator": str(level_denominator(args.n)),
        "rows": [line.split("\t") for line in lines],
    }
    _emit(args, "table", payload, lines)
    return 0


def _cmd_coeffs(args) -> int:
    n = args.count
    if args.which == "c":
        values = [format_rational(v) for v in series_coefficients(n)]
    elif args.which == "F":
        values = [str(v) for v in series_integer_numerators(series_coefficients(n))]
    elif args.which == "d":
        values = [format_rational(v) for v in exp_moment_coefficients(n)]
    else:
        values = [
            str(v) for v in exp_moment_integer_numerators(exp_moment_coefficients(n))
        ]
    _emit(
        args,
        "coeffs",
        {"which": args.which, "values": values},
        [f"{k}\t{v}" for k, v in enumerate(values)],
    )
    return 0


def _cmd_deriv(args) -> int:
    value = phi_derivative(args.k, Dyadic(args.q, args.n))
    _emit(
        args,
        "exact",
        {"order": args.k, "t": str(Dyadic(args.q, args.n)), "value": format_rational(value)},
        [format_rational(value)],
    )
    return 0


def _cmd_taylor(args) -> int:
    poly = taylor_at(Dyadic(args.q, args.n), args.order)
    values = [format_rational(c) for c in poly.coeffs]
    _emit(
        args,
        "exact",
        {"center": str(poly.center), "coeffs": values, "degree": poly.degree},
        [f"{k}\t{v}" for k, v in enumerate(values)],
    )
    return 0


def _cmd_approx(args) -> int:
    sf = step_function(args.m)
    lines = ["left_edge,right_edge,value"]
    rows = []
    for j, value in enumerate(sf.values):
        left, right = sf.interval(j)
        rows.append(
            {"left": str(left), "right": str(right), "value": format_rational(value)}
        )
        lines.append(f"{left},{right},{format_rational(value)}")
    _emit(args, "approx", {"level": args.m, "plateaus": rows}, lines)
    return 0


def _cmd_fourier_coeffs(args) -> int:
    fc = spectral.fourier_coefficients(K=args.fourier_k, m_max=args.m_max)
    _emit(
        args,
        "fourier",
        {"K": fc.K, "m_max": args.m_max, "a": list(fc.a)},
        [f"{k}\t{_float_str(ak)}" for k, ak in enumerate(fc.a)],
    )
    return 0


def _cmd_mc(args) -> int:
    est = stochastic.mc_phi(args.x, args.samples, args.depth, args.seed)
    payload = {
        "x": est.x,
        "estimate": est.estimate,
        "stderr": est.stderr,
        "bias_bound": est.bias_bound,
        "seed": est.seed,
    }
    _emit(args, "mc", payload, [json.dumps(payload)])
    return 0


def _cmd_selftest(args) -> int:
    from .selftest import run_all

    if args.json:
        results = run_all(emit=lambda line: None)
        payload = [
            {"index": r.index, "name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ]
        print(json.dumps({"mode": "selftest", "payload": payload}))
    else:
        results = run_all()
    return 0 if all(r.passed for r in results) else INTEGRITY_ERROR


def build_parser() -> _Parser:
    parser = _Parser(prog="fabius", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit one JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    table_max_default = _env_int("FABIUS_TABLE_MAX", 12)
    m_max_default = _env_int("FABIUS_M_MAX", spectral.DEFAULT_M_MAX)
    fourier_k_default = _env_int("FABIUS_FOURIER_K", spectral.DEFAULT_FOURIER_K)

    p = sub.add_parser("eval", help="exact phi(q/2^n)")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--max-level", type=int, default=table_max_default)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("eval-float", help="float phi(t) via Fourier synthesis")
    p.add_argument("t", type=float, nargs="?", default=0.0)
    p.add_argument("--grid", type=int, default=None, metavar="LEVEL",
                   help="emit CSV over the dyadic grid q/2^LEVEL instead")
    p.add_argument("--fourier-k", type=int, default=fourier_k_default)
    p.add_argument("--m-max", type=int, default=m_max_default)
    p.set_defaults(func=_cmd_eval_float)

    p = sub.add_parser("table", help="scaled value table for one level")
    p.add_argument("n", type=int)
    p.add_argument("--max-level", type=int, default=table_max_default)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("coeffs", help="coefficient sequence dump")
    p.add_argument("which", choices=("c", "F", "d", "G"))
    p.add_argument("count", type=int)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("deriv", help="exact k-th derivative at q/2^n")
    p.add_argument("k", type=int)
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_deriv)

    p = sub.add_parser("taylor", help="exact Taylor coefficients at q/2^n")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("order", type=int)
    p.set_defaults(func=_cmd_taylor)

    p = sub.add_parser("approx", help="step-approximant plateaus as CSV")
    p.add_argument("m", type=int)
    p.set_defaults(func=_cmd_approx)

    p = sub.add_parser("fourier-coeffs", help="cosine synthesis coefficients")
    p.add_argument("fourier_k", type=int, nargs="?", default=fourier_k_default)
    p.add_argument("--m-max", type=int, default=m_max_default)
    p.set_defaults(func=_cmd_fourier_coeffs)

    p = sub.add_parser("mc", help="Monte Carlo estimate of phi(x), x in [-1,0]")
    p.add_argument("x", type=float)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--depth", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--streams", type=int, default=1,
                   help="worker hint; never changes the result")
    p.set_defaults(func=_cmd_mc)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if getattr(args, "streams", 1) < 1:
            parser.error("--streams must be >= 1")
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"fabius: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ArithmeticError as exc:
        print(f"fabius: integrity violation: {exc}", file=sys.stderr)
        return INTEGRITY_ERROR


if __name__ == "__main__":
    sys.exit(main())
