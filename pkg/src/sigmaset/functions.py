"""Relations, functions, antifunctions and the sixteen-function diagram."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator

from .algebra import antiset, intersect, require_antiset
from .core import Element, SigmaSet, Undefined, antielement, make_set, render, sort_key
from .errors import (
    EmptyComposition,
    NoAntiset,
    NotBijective,
    NotSingleValued,
    NotTotal,
    PairOutOfCarrier,
    SigmaError,
)
from .pairs import pair

__all__ = [
    "Relation",
    "SigmaFunction",
    "Classification",
    "FunctionDiagram",
    "make_relation",
    "as_function",
    "make_function",
    "image",
    "preimage",
    "classify",
    "antifunction",
    "identity",
    "antidentity",
    "compose",
    "inverse",
    "antinverse",
    "all_functions",
    "build_diagram",
    "render_function",
    "DIAGRAM_NODES",
]


@dataclass(frozen=True)
class Relation:
    """A subset of ``domain_carrier × codomain_carrier``, kept as (x, y) tuples."""

    domain_carrier: SigmaSet
    codomain_carrier: SigmaSet
    pairs: tuple

    @property
    def graph(self) -> SigmaSet:
        return make_set(pair(x, y).encoding for x, y in self.pairs)

    def dom(self) -> SigmaSet:
        return make_set(x for x, _ in self.pairs)

    def ran(self) -> SigmaSet:
        return make_set(y for _, y in self.pairs)


def _sorted_pairs(pairs: Iterable[tuple]) -> tuple:
    return tuple(sorted(set(pairs), key=lambda p: (sort_key(p[0]), sort_key(p[1]))))


def make_relation(a: SigmaSet, b: SigmaSet, pairs: Iterable[tuple]) -> Relation:
    pairs = _sorted_pairs(pairs)
    for x, y in pairs:
        if x not in a or y not in b:
            raise PairOutOfCarrier(f"({render(x)}, {render(y)}) is not in {render(a)} x {render(b)}")
    return Relation(a, b, pairs)


class SigmaFunction(Relation):
    """A total, single-valued relation.  Callable: ``f(x)``.

    Two functions are equal when they share a domain and agree pointwise;
    the codomain carrier is ignored.
    """

    def __init__(self, domain: SigmaSet, codomain: SigmaSet, mapping: dict):
        pairs = _sorted_pairs(mapping.items())
        for x, y in pairs:
            if x not in domain or y not in codomain:
                raise PairOutOfCarrier(
                    f"({render(x)}, {render(y)}) is not in {render(domain)} x {render(codomain)}"
                )
        for x in domain:
            if x not in mapping:
                raise NotTotal(x)
        super().__init__(domain, codomain, pairs)
        object.__setattr__(self, "_map", dict(pairs))

    @property
    def domain(self) -> SigmaSet:
        return self.domain_carrier

    @property
    def codomain(self) -> SigmaSet:
        return self.codomain_carrier

    def __call__(self, x: Element) -> Element:
        return self._map[x]

    def items(self) -> Iterator[tuple]:
        return iter(self.pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SigmaFunction):
            return NotImplemented
        return self.domain == other.domain and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash((self.domain, self.pairs))

    def __str__(self) -> str:
        return render_function(self)

    def __repr__(self) -> str:
        return f"SigmaFunction({render(self.domain)} -> {render(self.codomain)}, {render_function(self)})"


def render_function(f: SigmaFunction) -> str:
    return "{" + ", ".join(f"{render(x)} -> {render(y)}" for x, y in f.pairs) + "}"


def as_function(r: Relation) -> SigmaFunction:
    values: dict = {}
    for x, y in r.pairs:
        if x in values:
            raise NotSingleValued(x)
        values[x] = y
    for x in r.domain_carrier:
        if x not in values:
            raise NotTotal(x)
    return SigmaFunction(r.domain_carrier, r.codomain_carrier, values)


def make_function(a: SigmaSet, b: SigmaSet, mapping) -> SigmaFunction:
    items = mapping.items() if isinstance(mapping, dict) else mapping
    return as_function(make_relation(a, b, items))


def image(f: SigmaFunction) -> SigmaSet:
    return f.ran()


def preimage(f: SigmaFunction, s: SigmaSet) -> SigmaSet:
    return make_set(x for x, y in f.pairs if y in s)


@dataclass(frozen=True)
class Classification:
    onto: bool
    one_one: bool

    @property
    def bijective(self) -> bool:
        return self.onto and self.one_one

    def __str__(self) -> str:
        flag = lambda v: "true" if v else "false"
        return f"onto={flag(self.onto)}, one_one={flag(self.one_one)}, bijective={flag(self.bijective)}"


def classify(f: SigmaFunction) -> Classification:
    values = [y for _, y in f.pairs]
    return Classification(onto=f.ran() == f.codomain, one_one=len(set(values)) == len(values))


def antifunction(f: SigmaFunction) -> SigmaFunction:
    """``x ↦ f(x)*``, landing in ``B*`` when it exists, else in ``ran(f)*``."""
    values = {}
    for x, y in f.pairs:
        w = antielement(y)
        if w is None:
            raise NoAntiset(y)
        values[x] = w
    codomain = antiset(f.codomain)
    if isinstance(codomain, Undefined):
        codomain = require_antiset(f.ran())
    return SigmaFunction(f.domain, codomain, values)


def identity(a: SigmaSet) -> SigmaFunction:
    return SigmaFunction(a, a, {x: x for x in a})


def antidentity(a: SigmaSet) -> SigmaFunction:
    anti = require_antiset(a)
    return SigmaFunction(a, anti, {x: antielement(x) for x in a})


def compose(f: SigmaFunction, g: SigmaFunction) -> SigmaFunction:
    """``f ∘ g`` restricted to the points where ``g`` lands in ``dom(f)``.

    The result is partial with respect to ``dom(g)`` whenever ``ran(g)``
    sticks out of ``dom(f)``.
    """
    if not intersect(g.ran(), f.domain):
        raise EmptyComposition(f"ran(g) and dom(f) are disjoint for f={f}, g={g}")
    values = {x: f(y) for x, y in g.pairs if y in f.domain}
    return SigmaFunction(make_set(values), f.codomain, values)


def inverse(f: SigmaFunction) -> SigmaFunction:
    if not classify(f).bijective:
        raise NotBijective(f"{render_function(f)} is not a bijection onto {render(f.codomain)}")
    return SigmaFunction(f.codomain, f.domain, {y: x for x, y in f.pairs})


def antinverse(f: SigmaFunction) -> SigmaFunction:
    """The unique ``g: B* → A*`` with ``g(f*(x)) = x*``, built as ``(f*_{-1})*``."""
    if not classify(f).bijective:
        raise NotBijective(f"{render_function(f)} is not a bijection onto {render(f.codomain)}")
    require_antiset(f.domain)
    require_antiset(f.codomain)
    return antifunction(inverse(antifunction(f)))


def all_functions(a: SigmaSet, b: SigmaSet) -> Iterator[SigmaFunction]:
    """Every function ``a → b`` (``|b|^|a|`` of them), in a fixed order."""
    xs = a.members
    for ys in product(b.members, repeat=len(xs)):
        yield SigmaFunction(a, b, dict(zip(xs, ys)))


# name -> (domain symbol, codomain symbol), in the order of the sixteen-item list
DIAGRAM_NODES = {
    "f": ("A", "B"),
    "f_-1": ("B", "A"),
    "(f_-1)*": ("B", "A*"),
    "(f_-1)*_-1": ("A*", "B"),
    "f*": ("A", "B*"),
    "f*_-1": ("B*", "A"),
    "f_-1*": ("B*", "A*"),
    "(f_-1*)_-1": ("A*", "B*"),
    "Id_A": ("A", "A"),
    "Id_B": ("B", "B"),
    "Id_A*": ("A*", "A*"),
    "Id_B*": ("B*", "B*"),
    "Id*_A": ("A", "A*"),
    "Id*_A*": ("A*", "A"),
    "Id*_B": ("B", "B*"),
    "Id*_B*": ("B*", "B"),
}


@dataclass(frozen=True)
class Composition:
    first: str
    then: str
    result: str

    def __str__(self) -> str:
        return f"{self.then} o {self.first} = {self.result}"


@dataclass
class FunctionDiagram:
    """The sixteen functions generated by a bijection with antisets on both sides.

    ``edges`` lists every composition ``then ∘ first`` whose carriers chain
    and whose result agrees pointwise with the node on the outer carriers;
    ``mismatches`` lists chained compositions that did not.
    """

    carriers: dict
    nodes: dict
    edges: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.nodes)

    def __getitem__(self, name: str) -> SigmaFunction:
        return self.nodes[name]

    def node_for(self, dom: str, cod: str) -> str:
        (name,) = [n for n, dc in DIAGRAM_NODES.items() if dc == (dom, cod)]
        return name


def build_diagram(f: SigmaFunction) -> FunctionDiagram:
    if not classify(f).bijective:
        raise NotBijective(f"{render_function(f)} is not a bijection onto {render(f.codomain)}")
    a, b = f.domain, f.codomain
    a_star, b_star = require_antiset(a), require_antiset(b)
    f_inv = inverse(f)
    f_inv_star = antifunction(f_inv)
    f_star = antifunction(f)
    f_antinv = antinverse(f)
    nodes = {
        "f": f,
        "f_-1": f_inv,
        "(f_-1)*": f_inv_star,
        "(f_-1)*_-1": inverse(f_inv_star),
        "f*": f_star,
        "f*_-1": inverse(f_star),
        "f_-1*": f_antinv,
        "(f_-1*)_-1": inverse(f_antinv),
        "Id_A": identity(a),
        "Id_B": identity(b),
        "Id_A*": identity(a_star),
        "Id_B*": identity(b_star),
        "Id*_A": antidentity(a),
        "Id*_A*": antidentity(a_star),
        "Id*_B": antidentity(b),
        "Id*_B*": antidentity(b_star),
    }
    carriers = {"A": a, "B": b, "A*": a_star, "B*": b_star}
    for name, (dom, cod) in DIAGRAM_NODES.items():
        node = nodes[name]
        if node.domain != carriers[dom] or node.codomain != carriers[cod]:
            raise SigmaError(f"diagram node {name} has carriers {render(node.domain)} -> {render(node.codomain)}")
    diagram = FunctionDiagram(carriers=carriers, nodes=nodes)
    for first, (x, y) in DIAGRAM_NODES.items():
        for then, (y2, z) in DIAGRAM_NODES.items():
            if y != y2:
                continue
            result = diagram.node_for(x, z)
            composite = compose(nodes[then], nodes[first]) if nodes[first].pairs else nodes[result]
            entry = Composition(first, then, result)
            if composite == nodes[result]:
                diagram.edges.append(entry)
            else:
                diagram.mismatches.append(entry)
    return diagram
