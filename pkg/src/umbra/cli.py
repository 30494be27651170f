"""Command-line front end.

Subcommands: ``special eval``, ``transform``, ``negderiv``, ``check run``,
``check list``. Exit codes: 0 success / all checks pass, 1 computation or
check failure, 2 usage error. ``UMBRA_ORDER`` and ``UMBRA_TOL_SCALE``
override the defaults; explicit flags win over the environment.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import catalog
from . import functions as fn
from . import negderiv as nd
from .quadrature import integrate_finite
from .series import SeriesError, TruncatedSeries
from .transforms import TransformError, TransformSpec, borel_apply
from .umbral import UmbralError


def _env_order() -> int:
    return int(os.environ.get("UMBRA_ORDER", "64"))


def _env_tol_scale() -> float:
    return float(os.environ.get("UMBRA_TOL_SCALE", "1.0"))


# -- special eval ---------------------------------------------------------------


def _special_series(args):
    """Series for the requested family, or None for pointwise-only kinds."""
    fam = args.family
    order = args.order
    if fam == "hermite2":
        return fn.hermite2(args.n, args.y)
    if fam == "laguerre2":
        return fn.laguerre2(args.n, args.y)
    if fam == "tricomi":
        return fn.tricomi(args.n, order)
    if fam == "bessel-trunc":
        return fn.bessel_truncated(args.n, args.y)
    if fam == "mittag-leffler":
        return fn.mittag_leffler_1_beta(args.beta, order)
    if fam == "bessel-wright":
        return fn.bessel_wright(args.gamma, args.alpha, order)
    if fam == "e-alpha-gamma":
        return fn.e_alpha_gamma(args.alpha, args.gamma, order)
    if fam == "cs":
        return fn.cs_sn_family("Cs", args.p, order)
    if fam == "sn":
        return fn.cs_sn_family("Sn", args.p, order)
    if fam == "epsilon-half":
        return fn.epsilon_half(order)
    if fam == "hyp2f2":
        a1, a2, b1, b2 = args.params
        return fn.hyp_2f2(a1, a2, b1, b2, order)
    return None


def _special_value(args, x: float):
    series = _special_series(args)
    if series is not None:
        res = series.eval(x)
        return res.value.real, res.tail
    if args.family == "besselj":
        return fn.bessel_j_value(args.n, x), 0.0
    if args.family == "besselr":
        return fn.bessel_r_value(args.n, x), 0.0
    if args.family == "besseli0":
        return fn.bessel_i0_value(x), 0.0
    raise ValueError(f"unknown family {args.family!r}")


def cmd_special(args) -> int:
    if args.emit_samples:
        try:
            a, b, n = args.emit_samples.split(":")
            a, b, n = float(a), float(b), int(n)
        except ValueError:
            print("--emit-samples expects a:b:n", file=sys.stderr)
            return 2
        print("x,value")
        for i in range(n):
            x = a + (b - a) * i / max(1, n - 1)
            value, _ = _special_value(args, x)
            print(f"{x:.12g},{value:.12g}")
        return 0
    value, tail = _special_value(args, args.x)
    print(f"value={value:.12g} tail={tail:.3g}")
    return 0


# -- transform -------------------------------------------------------------------


def cmd_transform(args) -> int:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = sys.stdin.read()
    series = TruncatedSeries.from_json(text)
    if args.family == "beta":
        if args.beta is None or args.delta is None:
            raise TransformError("beta family requires --beta and --delta")
    elif args.beta is not None or args.delta is not None:
        raise TransformError(f"family {args.family!r} does not take --beta/--delta")
    spec = TransformSpec(
        alpha=args.alpha,
        gamma=args.gamma,
        beta=args.beta,
        delta=args.delta,
        inverse=args.inverse,
    )
    print(borel_apply(series, spec).to_json())
    return 0


# -- negderiv --------------------------------------------------------------------


def _parse_provider(text: str):
    if text == "j0":
        return nd.provider_j0(), lambda t: fn.bessel_j_value(0, t)
    if text.startswith("gauss:"):
        a, b = (float(v) for v in text[len("gauss:"):].split(","))
        return nd.provider_gaussian(a, b), lambda t: math.exp(a * t * t + b * t)
    if text.startswith("hermite:"):
        n, y = text[len("hermite:"):].split(",")
        n, y = int(n), float(y)
        return nd.provider_hermite(n, y), lambda t: fn.hermite2_value(n, t, y)
    raise ValueError(f"unknown integrand spec {text!r}")


def cmd_negderiv(args) -> int:
    provider, plain = _parse_provider(args.f)
    if args.integrand == "one":
        value, _ = nd.negderiv_integral(provider, args.x, args.terms)
        oracle_fn = plain
    else:
        value = nd.negderiv_cos_integral(provider, args.x, args.terms)
        oracle_fn = lambda t: plain(t) * math.cos(t)
    oracle = integrate_finite(oracle_fn, 0.0, args.x, 1e-12).value
    print(f"value={value:.12g} oracle={oracle:.12g} "
          f"abs_diff={abs(value - oracle):.3g}")
    return 0


# -- check -----------------------------------------------------------------------


def cmd_check(args) -> int:
    if args.action == "list":
        for check_id in catalog.all_ids():
            check = catalog.get_check(check_id)
            slow = " [slow]" if "slow" in check.flags else ""
            print(f"{check_id}{slow}: {check.description}")
        return 0

    tol_scale = args.tolerance_scale if args.tolerance_scale is not None \
        else _env_tol_scale()
    if args.id:
        reports = [catalog.run_check(args.id, tolerance_scale=tol_scale)]
    else:
        reports = catalog.run_all(args.filter, include_slow=args.include_slow,
                                  tolerance_scale=tol_scale)

    if args.format == "json":
        print(catalog.reports_to_json(reports, include_runtime=args.timings))
    elif args.format == "csv":
        print(catalog.reports_to_csv(reports, include_runtime=args.timings),
              end="")
    else:
        for r in reports:
            state = "PASS" if r.passed else "FAIL"
            timing = f" ({r.runtime_ms:.0f} ms)" if args.timings else ""
            print(f"{state} {r.id}: max_abs={r.max_abs_diff:.3g} "
                  f"max_rel={r.max_rel_diff:.3g} tol={r.tolerance:.1g}{timing}")
    return 0 if all(r.passed for r in reports) else 1


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbra",
        description="Series transforms, special-function families, and the "
                    "identity check suite",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_special = sub.add_parser("special", help="evaluate special functions")
    special_sub = p_special.add_subparsers(dest="action", required=True)
    p_eval = special_sub.add_parser("eval", help="evaluate one family member")
    p_eval.add_argument("--family", required=True,
                        choices=["hermite2", "laguerre2", "tricomi", "besselj",
                                 "besselr", "besseli0", "bessel-trunc",
                                 "mittag-leffler", "bessel-wright",
                                 "e-alpha-gamma", "cs", "sn", "epsilon-half",
                                 "hyp2f2"])
    p_eval.add_argument("--n", type=int, default=0)
    p_eval.add_argument("--x", type=float, default=0.0)
    p_eval.add_argument("--y", type=float, default=0.0)
    p_eval.add_argument("--p", type=int, default=0)
    p_eval.add_argument("--alpha", type=float, default=1.0)
    p_eval.add_argument("--beta", type=float, default=1.0)
    p_eval.add_argument("--gamma", type=float, default=0.0)
    p_eval.add_argument("--params", type=lambda s: [float(v) for v in s.split(",")],
                        default=None, help="comma list, e.g. hyp2f2 a1,a2,b1,b2")
    p_eval.add_argument("--order", type=int, default=None)
    p_eval.add_argument("--emit-samples", default=None, metavar="a:b:n",
                        help="print CSV samples over [a, b] instead of one value")
    p_eval.set_defaults(func=cmd_special)

    p_tr = sub.add_parser("transform", help="apply a coefficient transform to "
                                            "series JSON on stdin")
    p_tr.add_argument("--family", choices=["borel", "borel-leroy", "beta"],
                      default="borel")
    p_tr.add_argument("--alpha", type=float, required=True)
    p_tr.add_argument("--gamma", type=float, default=1.0)
    p_tr.add_argument("--beta", type=float, default=None)
    p_tr.add_argument("--delta", type=float, default=None)
    p_tr.add_argument("--inverse", action="store_true")
    p_tr.add_argument("--input", default=None, help="file path, '-' for stdin")
    p_tr.set_defaults(func=cmd_transform)

    p_nd = sub.add_parser("negderiv", help="integration-by-parts expansions "
                                           "vs a quadrature oracle")
    p_nd.add_argument("--integrand", choices=["one", "cos"], default="one")
    p_nd.add_argument("--f", required=True,
                      help="j0 | gauss:a,b | hermite:n,y")
    p_nd.add_argument("--x", type=float, required=True)
    p_nd.add_argument("--terms", type=int, default=30)
    p_nd.set_defaults(func=cmd_negderiv)

    p_check = sub.add_parser("check", help="run the identity check suite")
    check_sub = p_check.add_subparsers(dest="action", required=True)
    p_run = check_sub.add_parser("run")
    p_run.add_argument("--all", action="store_true",
                       help="run the default (non-slow) suite")
    p_run.add_argument("--id", default=None, help="run a single check")
    p_run.add_argument("--filter", default=None, help="id prefix filter")
    p_run.add_argument("--include-slow", action="store_true")
    p_run.add_argument("--format", choices=["json", "csv", "text"],
                       default="text")
    p_run.add_argument("--tolerance-scale", type=float, default=None)
    p_run.add_argument("--timings", action="store_true",
                       help="include (non-deterministic) runtimes in output")
    p_run.set_defaults(func=cmd_check)
    p_list = check_sub.add_parser("list")
    p_list.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", None) is None and hasattr(args, "order"):
        args.order = _env_order()
    if getattr(args, "family", None) == "hyp2f2" and not args.params:
        print("hyp2f2 requires --params a1,a2,b1,b2", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except catalog.UnknownCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (catalog.CatalogError, SeriesError, TransformError, UmbralError,
            fn.EvaluationError, nd.NegDerivError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
