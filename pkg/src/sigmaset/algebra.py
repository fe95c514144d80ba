"""Set operations with annihilation: fusion, anti-intersection and the spaces."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Union

from .core import (
    EMPTY,
    Element,
    SigmaSet,
    Undefined,
    antielement,
    canonical_sorted,
    make_set,
    star,
)
from .errors import NoAntiset, SigmaError

__all__ = [
    "intersect",
    "difference",
    "anti_intersect",
    "star_difference",
    "fuse",
    "fuse_singletons",
    "antiset",
    "power_set",
    "subsets",
    "generated_space",
    "integer_space",
    "SpaceSpec",
]


def intersect(a: SigmaSet, b: SigmaSet) -> SigmaSet:
    return make_set(x for x in a if x in b)


def difference(a: SigmaSet, b: SigmaSet) -> SigmaSet:
    return make_set(x for x in a if x not in b)


def anti_intersect(a: SigmaSet, b: SigmaSet) -> SigmaSet:
    """Members of ``a`` whose antielement lies in ``b``."""
    return make_set(x for x in a if _anti_in(x, b))


def _anti_in(x: Element, b: SigmaSet) -> bool:
    w = antielement(x)
    return w is not None and w in b


def star_difference(a: SigmaSet, b: SigmaSet) -> SigmaSet:
    return difference(a, anti_intersect(a, b))


def fuse(a: SigmaSet, b: SigmaSet) -> SigmaSet:
    """Union in which every member meeting its antielement cancels.

    Only top-level members cancel; nothing inside a member is rewritten.
    Commutative and idempotent, but not associative.
    """
    return make_set([*star_difference(a, b), *star_difference(b, a)])


def fuse_singletons(x: Element, y: Element) -> SigmaSet:
    """``{x} ∪ {y}``: empty when ``y`` is the antielement of ``x``."""
    if antielement(x) == y:
        return EMPTY
    return make_set([x, y])


def antiset(a: SigmaSet) -> Union[SigmaSet, Undefined]:
    """The ``b`` with ``a ∪ b = ∅``, or :class:`Undefined`.

    Every member must cancel, so this exists exactly when ``a`` holds only
    plain and starred atoms; it is then the memberwise star of ``a``.
    """
    for x in a:
        if antielement(x) is None:
            return Undefined(x)
    return star(a)


def require_antiset(a: SigmaSet) -> SigmaSet:
    s = antiset(a)
    if isinstance(s, Undefined):
        raise NoAntiset(a, s.blocker)
    return s


def subsets(a: SigmaSet) -> Iterator[SigmaSet]:
    ms = a.members
    for k in range(len(ms) + 1):
        for combo in combinations(ms, k):
            yield make_set(combo)


def power_set(a: SigmaSet) -> SigmaSet:
    return make_set(subsets(a))


def generated_space(a: SigmaSet, b: SigmaSet) -> SigmaSet:
    """All fusions ``x ∪ y`` with ``x ⊆ a`` and ``y ⊆ b`` (full enumeration)."""
    sa = list(subsets(a))
    sb = list(subsets(b))
    return make_set(fuse(x, y) for x in sa for y in sb)


def integer_space(a: SigmaSet) -> SigmaSet:
    """``⟨2^a, 2^{a*}⟩``; raises :class:`NoAntiset` when ``a*`` does not exist."""
    space = generated_space(a, require_antiset(a))
    if len(space) != 3 ** len(a):
        raise SigmaError(f"integer space of {a} has {len(space)} members, expected {3 ** len(a)}")
    return space


@dataclass(frozen=True)
class SpaceSpec:
    kind: str
    operands: tuple

    def __post_init__(self):
        arity = {"power": 1, "integer": 1, "generated": 2}
        if self.kind not in arity:
            raise ValueError(f"unknown space kind {self.kind!r}")
        if len(self.operands) != arity[self.kind]:
            raise ValueError(f"{self.kind} space takes {arity[self.kind]} operand(s)")
        if self.kind == "integer":
            require_antiset(self.operands[0])

    def build(self) -> SigmaSet:
        if self.kind == "power":
            return power_set(*self.operands)
        if self.kind == "generated":
            return generated_space(*self.operands)
        return integer_space(*self.operands)

    def members(self) -> list:
        return canonical_sorted(self.build())
