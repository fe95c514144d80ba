"""Evaluate parsed expressions against the library and render the results."""

from __future__ import annotations

from typing import Callable

from . import algebra, functions, pairs
from .core import Atom, Element, SigmaSet, Undefined, make_set, render, star, subset
from .errors import SigmaError
from .functions import Classification, FunctionDiagram, Relation, SigmaFunction
from .pairs import OrderedPair
from .syntax import AtomLit, Call, FnLit, Let, Name, PairLit, Program, SetLit, parse

__all__ = ["EvalError", "evaluate", "evaluate_text", "render_value"]


class EvalError(SigmaError):
    """An operation failed; ``error`` holds the underlying library exception."""

    def __init__(self, op: str, operands, error: Exception):
        self.op = op
        self.operands = tuple(operands)
        self.error = error
        shown = ", ".join(render_value(v) for v in self.operands)
        super().__init__(f"{op}({shown}): {type(error).__name__}: {error}")


def _element(v) -> Element:
    if isinstance(v, (Atom, SigmaSet)):
        return v
    if isinstance(v, OrderedPair):
        return v.encoding
    raise TypeError(f"expected a sigma element, got {_kind(v)}")


def _set(v) -> SigmaSet:
    v = _element(v)
    if not isinstance(v, SigmaSet):
        raise TypeError(f"expected a set, got atom {render(v)}")
    return v


def _function(v) -> SigmaFunction:
    if not isinstance(v, SigmaFunction):
        raise TypeError(f"expected a function, got {_kind(v)}")
    return v


def _kind(v) -> str:
    return type(v).__name__


def _defined(v):
    if isinstance(v, Undefined):
        raise SigmaError(str(v))
    return v


_S, _E, _F = _set, _element, _function

# op -> (argument coercions, implementation)
_TABLE: dict[str, tuple[tuple[Callable, ...], Callable]] = {
    "fuse": ((_S, _S), algebra.fuse),
    "int": ((_S, _S), algebra.intersect),
    "aint": ((_S, _S), algebra.anti_intersect),
    "diff": ((_S, _S), algebra.difference),
    "sdiff": ((_S, _S), algebra.star_difference),
    "fsing": ((_E, _E), algebra.fuse_singletons),
    "star": ((_E,), star),
    "antiset": ((_S,), algebra.antiset),
    "pow": ((_S,), algebra.power_set),
    "gen": ((_S, _S), algebra.generated_space),
    "ispace": ((_S,), algebra.integer_space),
    "pair": ((_E, _E), pairs.pair),
    "unpair": ((_S,), pairs.unpair),
    "prod": ((_S, _S), pairs.cartesian_product),
    "member": ((_E, _S), lambda x, a: x in a),
    "subset": ((_S, _S), subset),
    "card": ((_S,), len),
    "compose": ((_F, _F), functions.compose),
    "inverse": ((_F,), functions.inverse),
    "antifn": ((_F,), functions.antifunction),
    "antinv": ((_F,), functions.antinverse),
    "id": ((_S,), functions.identity),
    "antid": ((_S,), functions.antidentity),
    "image": ((_F,), functions.image),
    "preimage": ((_F, _S), functions.preimage),
    "classify": ((_F,), functions.classify),
    "diagram": ((_F,), functions.build_diagram),
}


def evaluate(expr, env: dict | None = None):
    """Evaluate ``expr``; ``env`` maps binding names to values and is updated by ``Let``."""
    env = {} if env is None else env
    if isinstance(expr, AtomLit):
        return expr.atom
    if isinstance(expr, Name):
        if expr.name in env:
            return env[expr.name]
        return Atom(expr.name)
    if isinstance(expr, SetLit):
        items = [evaluate(i, env) for i in expr.items]
        return _apply("set", items, lambda *xs: make_set(_element(x) for x in xs))
    if isinstance(expr, PairLit):
        x, y = evaluate(expr.first, env), evaluate(expr.second, env)
        return _apply("pair", (x, y), lambda a, b: pairs.pair(_element(a), _element(b)))
    if isinstance(expr, Call):
        coercions, impl = _TABLE[expr.op]
        args = [evaluate(a, env) for a in expr.args]
        return _apply(expr.op, args, lambda *xs: impl(*(c(_defined(x)) for c, x in zip(coercions, xs))))
    if isinstance(expr, FnLit):
        a = evaluate(expr.domain, env)
        b = evaluate(expr.codomain, env)
        maps = [(evaluate(x, env), evaluate(y, env)) for x, y in expr.maps]
        return _apply(
            "fn",
            (a, b),
            lambda a, b: functions.make_function(
                _set(a), _set(b), [(_element(x), _element(y)) for x, y in maps]
            ),
        )
    if isinstance(expr, Let):
        env[expr.name] = evaluate(expr.expr, env)
        return env[expr.name]
    if isinstance(expr, Program):
        value = None
        for stmt in expr.statements:
            value = evaluate(stmt, env)
        return value
    raise TypeError(f"not an expression: {expr!r}")


def _apply(op: str, args, fn):
    try:
        return fn(*args)
    except (SigmaError, TypeError) as exc:
        if isinstance(exc, EvalError):
            raise
        raise EvalError(op, args, exc) from exc


def evaluate_text(text: str, env: dict | None = None):
    return evaluate(parse(text), env)


def render_value(v, raw: bool = False) -> str:
    """Canonical text for any evaluation result."""
    if isinstance(v, (Atom, SigmaSet)):
        return render(v)
    if isinstance(v, OrderedPair):
        return render(v.encoding) if raw else str(v)
    if isinstance(v, SigmaFunction):
        return functions.render_function(v)
    if isinstance(v, Relation):
        return "{" + ", ".join(f"({render(x)}, {render(y)})" for x, y in v.pairs) + "}"
    if isinstance(v, FunctionDiagram):
        lines = []
        for name, (dom, cod) in functions.DIAGRAM_NODES.items():
            lines.append(f"{name}: {dom} -> {cod} {functions.render_function(v.nodes[name])}")
        return "\n".join(lines)
    if isinstance(v, (Classification, Undefined)):
        return str(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)
