"""Command line front end.

Subcommands: normalize, coproduct, antipode, counit, eval, limit, check.
Exit codes: 0 success, 1 a check suite reported failures, 2 parse or usage
errors, 3 an arithmetic bound was exceeded.  Reports are byte-identical
across runs with equal arguments; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .algebra import GENERALIZED, STANDARD, classical_limit, evaluate
from .errors import (
    ArithmeticBoundError,
    EvaluationDomainError,
    ParseError,
    ProfileError,
    UnsupportedInverseError,
)
from .exprparse import parse_element
from .hopf import antipode, coproduct, counit
from .suites import SUITE_IDS, SuiteBounds, render_text, report_json_obj, run_suite

_PROFILES = {"standard": STANDARD, "generalized": GENERALIZED}


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _k_range(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    try:
        bounds = (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return bounds


def _emit(args, text_value, json_obj):
    if args.json:
        print(json.dumps(json_obj, indent=2))
    else:
        print(text_value)


def _cmd_normalize(args) -> int:
    el = parse_element(args.expr, _PROFILES[args.profile])
    _emit(args, str(el), el.to_json_obj())
    return 0


def _cmd_coproduct(args) -> int:
    t = coproduct(parse_element(args.expr))
    _emit(args, str(t), t.to_json_obj())
    return 0


def _cmd_antipode(args) -> int:
    el = antipode(parse_element(args.expr))
    _emit(args, str(el), el.to_json_obj())
    return 0


def _cmd_counit(args) -> int:
    c = counit(parse_element(args.expr))
    _emit(args, str(c), c.to_json_obj())
    return 0


def _cmd_eval(args) -> int:
    profile = _PROFILES[args.profile]
    if profile is STANDARD and args.p is not None:
        print("error: --p only applies to the generalized profile", file=sys.stderr)
        return 2
    if profile is GENERALIZED and args.p is None:
        print("error: the generalized profile needs --p", file=sys.stderr)
        return 2
    el = parse_element(args.expr, profile)
    num = evaluate(el, args.q, args.p)
    _emit(args, str(num), num.to_json_obj())
    return 0


def _cmd_limit(args) -> int:
    num = classical_limit(parse_element(args.expr))
    _emit(args, str(num), num.to_json_obj())
    return 0


def _cmd_check(args) -> int:
    seed = args.seed
    env_seed = os.environ.get("QW22_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            print(f"error: QW22_SEED must be an integer, got {env_seed!r}", file=sys.stderr)
            return 2
    bounds = SuiteBounds(
        max_index=args.max_index,
        max_len=args.max_len,
        k_range=args.k_range,
        seed=seed,
        cases=args.cases,
    )
    reports = run_suite(args.suite, bounds)
    if args.json:
        if len(reports) == 1:
            print(json.dumps(report_json_obj(reports[0]), indent=2))
        else:
            print(json.dumps([report_json_obj(r) for r in reports], indent=2))
    else:
        print("\n\n".join(render_text(r) for r in reports))
    for r in reports:
        print(f"[{r.suite}] wall time: {r.wall_time_s:.3f}s", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qw22",
        description="Exact computations in a q-deformed W(2,2) algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, profile_flag=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("expr", help="element expression, e.g. 'L[2]*L[1]'")
        p.add_argument("--json", action="store_true", help="emit JSON")
        if profile_flag:
            p.add_argument(
                "--profile",
                choices=sorted(_PROFILES),
                default="standard",
                help="coefficient and relation profile",
            )
        else:
            p.set_defaults(profile="standard")
        p.set_defaults(func=func)
        return p

    add("normalize", _cmd_normalize, "rewrite an expression into the PBW basis",
        profile_flag=True)
    add("coproduct", _cmd_coproduct, "apply the coproduct")
    add("antipode", _cmd_antipode, "apply the antipode")
    add("counit", _cmd_counit, "apply the counit")

    p_eval = add("eval", _cmd_eval, "evaluate coefficients at rational points",
                 profile_flag=True)
    p_eval.add_argument("--q", type=_fraction, required=True,
                        help="rational value for q, e.g. 3/2")
    p_eval.add_argument("--p", type=_fraction, default=None,
                        help="rational value for p (generalized profile only)")

    add("limit", _cmd_limit, "evaluate coefficients at q = 1")

    p_check = sub.add_parser("check", help="run a verification suite")
    p_check.add_argument("suite", choices=SUITE_IDS + ("all",),
                         help="suite id, or 'all'")
    p_check.add_argument("--json", action="store_true", help="emit JSON")
    p_check.add_argument("--max-index", type=int, default=4,
                         help="generator index bound (default 4)")
    p_check.add_argument("--max-len", type=int, default=3,
                         help="word length bound (default 3)")
    p_check.add_argument("--k-range", type=_k_range, default=(-8, 8),
                         metavar="LO..HI",
                         help="module grades to test (default -8..8)")
    p_check.add_argument("--seed", type=int, default=0,
                         help="seed for randomized cases (default 0; "
                              "QW22_SEED overrides)")
    p_check.add_argument("--cases", type=int, default=200,
                         help="randomized cases per family (default 200)")
    p_check.set_defaults(func=_cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ProfileError, UnsupportedInverseError, EvaluationDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
