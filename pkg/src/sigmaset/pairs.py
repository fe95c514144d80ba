"""Ordered pairs ``(x, y) = {{x}, {x} ∪ {y}}`` and Cartesian products."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import fuse_singletons, generated_space
from .core import EMPTY, Element, SigmaSet, antielement, make_set, render, subset
from .errors import NotAPair, SigmaError

__all__ = ["OrderedPair", "pair", "unpair", "cartesian_product"]


@dataclass(frozen=True)
class OrderedPair:
    first: Element
    second: Element
    encoding: SigmaSet = field(compare=False)

    def __str__(self) -> str:
        return f"({render(self.first)}, {render(self.second)})"


def pair(x: Element, y: Element) -> OrderedPair:
    """Encode ``(x, y)``.

    When ``y`` is the antielement of ``x`` the second component fuses to the
    empty set, giving ``{{x}, ∅}``; when ``x == y`` the encoding collapses
    to ``{{x}}``.
    """
    enc = make_set([make_set([x]), fuse_singletons(x, y)])
    return OrderedPair(x, y, enc)


def unpair(s) -> OrderedPair:
    """Decode a pair encoding; raises :class:`NotAPair` for anything else."""
    if not isinstance(s, SigmaSet) or not 1 <= len(s) <= 2:
        raise NotAPair(f"{render(s)} is not an ordered pair encoding")
    singletons = [m for m in s if isinstance(m, SigmaSet) and len(m) == 1]
    if len(s) == 1:
        if singletons:
            (x,) = singletons[0].members
            return OrderedPair(x, x, s)
        raise NotAPair(f"{render(s)} is not an ordered pair encoding")
    for head in singletons:
        (x,) = head.members
        (other,) = [m for m in s if m is not head]
        if other == EMPTY:
            y = antielement(x)
            if y is None:
                raise NotAPair(f"{render(s)}: {render(x)} has no antielement")
        elif isinstance(other, SigmaSet) and len(other) == 2 and x in other:
            (y,) = [m for m in other if m != x]
        else:
            continue
        return OrderedPair(x, y, s)
    raise NotAPair(f"{render(s)} is not an ordered pair encoding")


def cartesian_product(a: SigmaSet, b: SigmaSet, check: bool | None = None) -> SigmaSet:
    """Set of pair encodings over ``a × b``.

    With ``check`` (default: only while the generated space stays small), every
    encoding is verified to be a subset of ``⟨2^a, 2^b⟩``.
    """
    product = make_set(pair(x, y).encoding for x in a for y in b)
    if check is None:
        check = len(a) + len(b) <= 10
    if check:
        space = generated_space(a, b)
        for enc in product:
            if not subset(enc, space):
                raise SigmaError(f"pair encoding {render(enc)} escapes the generated space")
    return product
