"""Command-line entry point: ``sigma eval|table|space|diagram|check``.

Exit codes: 0 success, 1 evaluation error, 2 parse error, 3 check failure.
"""

from __future__ import annotations

import argparse
import sys

from . import algebra, emit, verify
from .core import SigmaSet
from .errors import SigmaError
from .evaluate import EvalError, evaluate, render_value
from .functions import FunctionDiagram, SigmaFunction, build_diagram
from .syntax import ParseError, parse

EXIT_OK, EXIT_EVAL, EXIT_PARSE, EXIT_CHECK = 0, 1, 2, 3


def _eval_text(text: str, env: dict):
    return evaluate(parse(text), env)


def _bindings(pairs) -> dict:
    env: dict = {}
    for item in pairs or ():
        name, sep, expr = item.partition("=")
        if not sep:
            raise argparse.ArgumentTypeError(f"--let expects NAME=EXPR, got {item!r}")
        env[name.strip()] = _eval_text(expr, env)
    return env


def _expect_set(v, what: str) -> SigmaSet:
    if not isinstance(v, SigmaSet):
        raise SigmaError(f"{what} must evaluate to a set, got {render_value(v)}")
    return v


def cmd_eval(args, env) -> str:
    return render_value(_eval_text(args.expr, env), raw=args.raw) + "\n"


def cmd_table(args, env) -> str:
    space = _expect_set(_eval_text(args.space, env), "--space")
    rows = list(_expect_set(_eval_text(args.rows, env), "--rows")) if args.rows else None
    cols = list(_expect_set(_eval_text(args.cols, env), "--cols")) if args.cols else None
    return emit.emit_table(space, args.op, args.format, args.delta_labels, rows, cols)


def cmd_space(args, env) -> str:
    operands = [_expect_set(_eval_text(e, env), "operand") for e in args.exprs]
    kind = {"pow": "power", "gen": "generated", "ispace": "integer"}[args.kind]
    try:
        spec = algebra.SpaceSpec(kind, tuple(operands))
    except ValueError as exc:
        raise SigmaError(str(exc)) from exc
    return emit.emit_space(spec.build(), args.cardinality_only)


def cmd_diagram(args, env) -> str:
    v = _eval_text(args.expr, env)
    if args.kind == "lattice":
        return emit.emit_lattice_dot(_expect_set(v, "lattice target"))
    if isinstance(v, SigmaFunction):
        v = build_diagram(v)
    if not isinstance(v, FunctionDiagram):
        raise SigmaError(f"functions diagram needs a function, got {render_value(v)}")
    return emit.emit_function_dot(v)


def _universe(args) -> verify.Universe | None:
    if args.plain is None and args.theta is None and args.depth is None and args.width is None:
        return None
    split = lambda s: tuple(n for n in (s or "").split(",") if n)
    return verify.Universe(
        plain_atoms=split(args.plain) if args.plain is not None else ("1", "2"),
        theta_atoms=split(args.theta),
        max_depth=1 if args.depth is None else args.depth,
        max_width=2 if args.width is None else args.width,
    )


def cmd_check(args) -> tuple[str, bool]:
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    out, ok = [], True
    for name in suites:
        report = verify.run_suite(name, _universe(args), samples=args.samples, seed=args.seed)
        out.append(report.text())
        out.append(report.summary())
        ok = ok and report.ok
    return "\n".join(out) + "\n", ok


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sigma", description="Sigma-set expression evaluator and checker.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_env(sp):
        sp.add_argument("--let", action="append", metavar="NAME=EXPR", help="bind NAME before evaluating")
        return sp

    e = with_env(sub.add_parser("eval", help="evaluate an expression"))
    e.add_argument("expr")
    e.add_argument("--raw", action="store_true", help="print ordered pairs as their set encoding")

    t = with_env(sub.add_parser("table", help="print an operation table over a space"))
    t.add_argument("--space", required=True)
    t.add_argument("--op", default="fuse", choices=sorted(emit.BINARY_OPS))
    t.add_argument("--format", default="csv", choices=["csv", "md", "markdown"])
    t.add_argument("--delta-labels", action="store_true")
    t.add_argument("--rows", help="set whose members label the rows (default: the space)")
    t.add_argument("--cols", help="set whose members label the columns (default: the space)")

    s = with_env(sub.add_parser("space", help="list a power, generated or integer space"))
    s.add_argument("--kind", required=True, choices=["pow", "gen", "ispace"])
    s.add_argument("exprs", nargs="+")
    s.add_argument("--cardinality-only", action="store_true")

    d = with_env(sub.add_parser("diagram", help="export a DOT diagram"))
    d.add_argument("--kind", required=True, choices=["lattice", "functions"])
    d.add_argument("expr")
    d.add_argument("--format", default="dot", choices=["dot"])

    c = sub.add_parser("check", help="run a verification suite")
    c.add_argument("--suite", required=True, choices=[*verify.SUITES, "all"])
    c.add_argument("--plain", help="comma-separated plain atom names")
    c.add_argument("--theta", help="comma-separated theta atom names")
    c.add_argument("--depth", type=int)
    c.add_argument("--width", type=int)
    c.add_argument("--samples", type=int, default=10_000)
    c.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            text, ok = cmd_check(args)
            sys.stdout.write(text)
            return EXIT_OK if ok else EXIT_CHECK
        env = _bindings(args.let)
        handler = {"eval": cmd_eval, "table": cmd_table, "space": cmd_space, "diagram": cmd_diagram}[args.command]
        sys.stdout.write(handler(args, env))
        return EXIT_OK
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EvalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except (SigmaError, argparse.ArgumentTypeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
