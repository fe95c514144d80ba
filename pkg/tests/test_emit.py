import re

import pytest

from sigmaset.algebra import integer_space, power_set
from sigmaset.core import EMPTY, render
from sigmaset.emit import (
    cayley_table,
    covering_edges,
    delta_label,
    emit_function_dot,
    emit_lattice_dot,
    emit_space,
    emit_table,
)
from sigmaset.errors import NotClosed
from sigmaset.functions import build_diagram, make_function

from conftest import sv


def test_delta_labels():
    assert delta_label(EMPTY) == "∅"
    assert delta_label(sv("{1*, 2}")) == "δ_{1*2}"
    assert delta_label(sv("{{1}}")) == "{{1}}"


def test_emit_space_listing():
    assert emit_space(power_set(sv("{1}"))) == "# card=2\n{}\n{1}\n"
    assert emit_space(power_set(sv("{1}")), cardinality_only=True) == "# card=2\n"


def test_fuse_table_on_one_atom_integer_space():
    space = integer_space(sv("{1}"))
    table = cayley_table(space, "fuse")
    assert [[render(v) for v in row] for row in table] == [
        ["{}", "{1}", "{1*}"],
        ["{1}", "{1}", "{}"],
        ["{1*}", "{}", "{1*}"],
    ]
    assert emit_table(space, fmt="csv", delta_labels=True) == (
        "fuse,∅,δ_{1},δ_{1*}\n∅,∅,δ_{1},δ_{1*}\nδ_{1},δ_{1},δ_{1},∅\nδ_{1*},δ_{1*},∅,δ_{1*}\n"
    )


def test_empty_space_table():
    assert cayley_table(EMPTY, "fuse") == []
    assert emit_table(EMPTY) == "fuse\n"


def test_table_not_closed():
    with pytest.raises(NotClosed):
        cayley_table(sv("{{1}, {2}}"), "fuse")


def test_markdown_table_shape():
    out = emit_table(integer_space(sv("{1}")), fmt="md").splitlines()
    assert len(out) == 5
    assert out[1] == "|---|---|---|---|"


def test_lattice_of_power_set_of_singleton():
    dot = emit_lattice_dot(power_set(sv("{1}")))
    assert len(re.findall(r"\[label=", dot)) == 2
    assert len(re.findall(r"->", dot)) == 1


def test_covering_edges_of_integer_space_pyramid():
    edges = covering_edges(integer_space(sv("{1, 2, 3}")))
    apex = sv("{1, 2*, 3}")
    assert {lo for lo, hi in edges if hi == apex} == set(sv("{{1, 3}, {2*, 3}, {1, 2*}}"))
    assert len(edges) == 54


def test_function_dot_has_sixteen_nodes():
    a = sv("{1, 2}")
    f = make_function(a, a, dict(zip(a, reversed(a.members))))
    dot = emit_function_dot(build_diagram(f))
    assert len(re.findall(r"^  f\d+ \[label=", dot, re.M)) == 16


def test_emitters_are_deterministic():
    space = integer_space(sv("{1, 2}"))
    assert emit_lattice_dot(space) == emit_lattice_dot(space)
    assert emit_table(space, fmt="md") == emit_table(space, fmt="md")
