"""Text emitters: space listings, Cayley tables and Graphviz DOT diagrams."""

from __future__ import annotations

import csv
import io
from typing import Callable, Sequence

from . import algebra
from .core import Atom, SigmaSet, render, subset
from .errors import NotClosed
from .functions import DIAGRAM_NODES, FunctionDiagram, render_function

__all__ = [
    "BINARY_OPS",
    "delta_label",
    "emit_space",
    "cayley_table",
    "emit_table",
    "covering_edges",
    "emit_lattice_dot",
    "emit_function_dot",
]

BINARY_OPS: dict[str, Callable[[SigmaSet, SigmaSet], SigmaSet]] = {
    "fuse": algebra.fuse,
    "int": algebra.intersect,
    "aint": algebra.anti_intersect,
    "diff": algebra.difference,
    "sdiff": algebra.star_difference,
}


def delta_label(s) -> str:
    """Compact label: ``∅``, ``δ_{1*2}`` for ``{1*, 2}``; falls back to canonical text."""
    if isinstance(s, SigmaSet):
        if not s:
            return "∅"
        if all(isinstance(m, Atom) for m in s):
            return "δ_{" + "".join(render(m) for m in s) + "}"
    return render(s)


def emit_space(space: SigmaSet, cardinality_only: bool = False) -> str:
    lines = [f"# card={len(space)}"]
    if not cardinality_only:
        lines.extend(render(m) for m in space)
    return "\n".join(lines) + "\n"


def cayley_table(
    space: SigmaSet,
    op: str = "fuse",
    rows: Sequence | None = None,
    cols: Sequence | None = None,
) -> list[list[SigmaSet]]:
    """Entries ``op(r, c)``; raises :class:`NotClosed` if one leaves ``space``.

    ``rows``/``cols`` default to the whole space in canonical order.
    """
    fn = BINARY_OPS[op]
    rows = list(space) if rows is None else list(rows)
    cols = list(space) if cols is None else list(cols)
    table = []
    for r in rows:
        line = []
        for c in cols:
            v = fn(r, c)
            if v not in space:
                raise NotClosed(r, c, v)
            line.append(v)
        table.append(line)
    return table


def emit_table(
    space: SigmaSet,
    op: str = "fuse",
    fmt: str = "csv",
    delta_labels: bool = False,
    rows: Sequence | None = None,
    cols: Sequence | None = None,
) -> str:
    rows = list(space) if rows is None else list(rows)
    cols = list(space) if cols is None else list(cols)
    table = cayley_table(space, op, rows, cols)
    label = delta_label if delta_labels else render
    grid = [[op, *(label(c) for c in cols)]]
    grid += [[label(r), *(label(v) for v in line)] for r, line in zip(rows, table)]
    if fmt == "csv":
        out = io.StringIO()
        csv.writer(out, lineterminator="\n").writerows(grid)
        return out.getvalue()
    if fmt in ("md", "markdown"):
        head, *body = grid
        lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
        lines += ["| " + " | ".join(r) + " |" for r in body]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")


def covering_edges(space: SigmaSet) -> list[tuple[SigmaSet, SigmaSet]]:
    """Pairs ``(a, b)`` with ``a ⊊ b`` and nothing of ``space`` strictly between."""
    sets = [m for m in space if isinstance(m, SigmaSet)]
    below = {b: [a for a in sets if a != b and subset(a, b)] for b in sets}
    edges = []
    for b in sets:
        for a in below[b]:
            if not any(c != a and subset(a, c) for c in below[b]):
                edges.append((a, b))
    return edges


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def emit_lattice_dot(space: SigmaSet, name: str = "space") -> str:
    sets = [m for m in space if isinstance(m, SigmaSet)]
    ids = {s: f"n{i}" for i, s in enumerate(sets)}
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    lines += [f"  {ids[s]} [label={_quote(render(s))}];" for s in sets]
    lines += [f"  {ids[a]} -> {ids[b]};" for a, b in covering_edges(space)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_function_dot(diagram: FunctionDiagram, name: str = "functions") -> str:
    """Sixteen labelled nodes; an edge ``g -> h`` labelled ``r`` means ``h ∘ g = r``."""
    ids = {n: f"f{i}" for i, n in enumerate(DIAGRAM_NODES)}
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    for n, (dom, cod) in DIAGRAM_NODES.items():
        text = f"{n}: {dom} -> {cod}\\n{render_function(diagram.nodes[n])}"
        lines.append(f"  {ids[n]} [label={_quote(text)}];")
    for e in diagram.edges:
        lines.append(f"  {ids[e.first]} -> {ids[e.then]} [label={_quote(e.result)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
