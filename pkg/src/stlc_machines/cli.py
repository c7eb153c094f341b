"""Command-line front end.

    stlc check TERM
    stlc eval --machine krivine TERM
    stlc diff FILE... | stlc diff --fuzz --seed 42 --count 1000
    stlc fuzz --seed 42 --count 10 --emit out/

TERM is a path to a file holding one term, or the term text itself.
Exit codes: 1 syntax or type error, 2 machine disagreement, 3 fuel exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import _config
from .closed import describe
from .errors import ElaborationError, FuelExhausted, GenerationFailed, ParseError
from .generate import GenConfig, generate_term
from .krivine import evaluate_krivine
from .reduction import closure_of, evaluate_smallstep
from .refocus import evaluate_refocus
from .syntax import parse_term, parse_type, elaborate, print_term, print_type
from .trace import DEFAULT_FUEL

EXIT_ERROR = 1
EXIT_DISAGREE = 2
EXIT_FUEL = 3

EVALUATORS = {
    "smallstep": lambda t, fuel, verbose: evaluate_smallstep(closure_of(t), fuel, verbose=verbose),
    "refocus": lambda t, fuel, verbose: evaluate_refocus(closure_of(t), fuel, verbose=verbose),
    "krivine": lambda t, fuel, verbose: evaluate_krivine(t, fuel, verbose=verbose),
}


class CliError(Exception):
    def __init__(self, message, code=EXIT_ERROR):
        super().__init__(message)
        self.code = code


def read_source(arg):
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as f:
            return f.read().strip()
    return arg


def load_term(arg):
    text = read_source(arg)
    try:
        return elaborate(parse_term(text))
    except ParseError as exc:
        exc.text = text
        raise CliError(f"syntax error: {exc.render()}")
    except ElaborationError as exc:
        raise CliError(f"type error: {_with_span(exc, text)}")


def _with_span(exc, text):
    if exc.span is None:
        return str(exc)
    start, end = exc.span
    return f"{exc}\n  {text}\n  {' ' * start}{'^' * max(1, end - start)}"


def positive_int(s):
    n = int(s)
    if n <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return n


def type_arg(s):
    try:
        return parse_type(s)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def cmd_check(args):
    t = load_term(args.term)
    print(print_type(t.ty))
    return 0


def cmd_eval(args):
    t = load_term(args.term)
    try:
        value, log = EVALUATORS[args.machine](t, args.fuel, args.verbose_trace)
    except FuelExhausted as exc:
        print(f"fuel exhausted after {exc.fuel} steps", file=sys.stderr)
        if args.trace:
            _write_json(args.trace, exc.log.to_json())
        return EXIT_FUEL
    print(describe(value, verbose=args.verbose))
    print(f"steps: {log.total}")
    if args.trace:
        _write_json(args.trace, log.to_json())
    return 0


def _fuzz_terms(args):
    cfg = GenConfig(seed=args.seed, max_depth=args.depth, goal_type=args.goal, count=args.count)
    try:
        return generate_term(cfg)
    except GenerationFailed as exc:
        raise CliError(str(exc))


def cmd_diff(args):
    from .diff import run_diff

    if args.fuzz:
        terms = _fuzz_terms(args)
    elif args.files:
        terms = [load_term(f) for f in args.files]
    else:
        raise CliError("diff needs term files or --fuzz")
    report = run_diff(terms, args.fuel)
    print(report.render(verbose=args.verbose))
    if args.json:
        _write_json(args.json, report.to_json())
    if report.ok:
        return 0
    if report.fuel_failures == report.failed:
        return EXIT_FUEL
    return EXIT_DISAGREE


def cmd_fuzz(args):
    terms = _fuzz_terms(args)
    if args.emit:
        os.makedirs(args.emit, exist_ok=True)
        for i, t in enumerate(terms):
            with open(os.path.join(args.emit, f"term_{i}.lam"), "w", encoding="utf-8") as f:
                f.write(print_term(t) + "\n")
        print(f"wrote {len(terms)} terms to {args.emit}")
    else:
        for t in terms:
            print(print_term(t))
    return 0


def _write_json(path, data):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2)
        f.write("\n")


def _add_gen_args(p):
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--count", type=positive_int, default=100)
    p.add_argument("--depth", type=positive_int, default=5)
    p.add_argument("--goal", type=type_arg, default=parse_type("o -> o"))


def build_parser():
    parser = argparse.ArgumentParser(prog="stlc", description=__doc__.splitlines()[0])
    parser.add_argument("--debug", action="store_true", help="check invariants on every step")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="parse and type-check a term")
    p.add_argument("term")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", help="evaluate a closed term to weak head normal form")
    p.add_argument("--machine", choices=sorted(EVALUATORS), default="krivine")
    p.add_argument("--fuel", type=positive_int, default=DEFAULT_FUEL)
    p.add_argument("--trace", metavar="PATH", help="write the step log as JSON")
    p.add_argument("--verbose-trace", action="store_true", help="record full states in the step log")
    p.add_argument("--verbose", action="store_true", help="print the value's environment recursively")
    p.add_argument("term")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("diff", help="run all machines and compare")
    p.add_argument("--fuel", type=positive_int, default=DEFAULT_FUEL)
    p.add_argument("--fuzz", action="store_true", help="diff generated terms instead of files")
    p.add_argument("--json", metavar="PATH", help="write the report as JSON")
    p.add_argument("--verbose", action="store_true", help="list passing terms too")
    _add_gen_args(p)
    p.add_argument("files", nargs="*")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("fuzz", help="generate random closed terms")
    p.add_argument("--emit", metavar="DIR", help="write term_<i>.lam files here")
    _add_gen_args(p)
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.debug:
        _config.set_debug(True)
    try:
        return args.func(args)
    except CliError as exc:
        print(exc, file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
