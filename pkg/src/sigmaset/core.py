"""Atoms, canonical sigma-sets, membership and the star involution.

Every :class:`SigmaSet` is immutable, hash-consed and stored with its members
in canonical order, so structural equality is cheap and rendering is
deterministic.  Construction enforces duplicate-freedom and the exclusion
invariant: no set holds an element together with its antielement.
"""

from __future__ import annotations

import enum
import re
import weakref
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Union

from .errors import ExclusionViolation

__all__ = [
    "Polarity",
    "Atom",
    "SigmaSet",
    "Element",
    "Undefined",
    "EMPTY",
    "plain",
    "starred",
    "theta",
    "make_set",
    "star",
    "antielement",
    "member",
    "subset",
    "depth",
    "contains_theta",
    "render",
    "sort_key",
    "canonical_sorted",
    "is_exclusion_clean",
]

IDENT_RE = re.compile(r"[A-Za-z0-9]+\Z")


class Polarity(enum.IntEnum):
    # IntEnum value doubles as the rank in the canonical order
    THETA = 0
    PLAIN = 1
    STARRED = 2


@dataclass(frozen=True)
class Atom:
    """An opaque generator: ``1`` (plain), ``1*`` (starred) or ``1_T`` (theta)."""

    name: str
    polarity: Polarity = Polarity.PLAIN

    def __post_init__(self):
        if not isinstance(self.name, str) or not IDENT_RE.match(self.name):
            raise ValueError(f"invalid atom name {self.name!r}")
        object.__setattr__(self, "polarity", Polarity(self.polarity))

    @property
    def key(self) -> tuple:
        return (0, self.name, int(self.polarity))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Atom({render(self)!r})"


def plain(name: str) -> Atom:
    return Atom(name, Polarity.PLAIN)


def starred(name: str) -> Atom:
    return Atom(name, Polarity.STARRED)


def theta(name: str) -> Atom:
    return Atom(name, Polarity.THETA)


@dataclass(frozen=True)
class Undefined:
    """Outcome of :func:`star` or ``antiset`` when no value exists.

    ``blocker`` is the first offending member in canonical order: a theta
    atom, or (for antisets) a member with no antielement.  Test with
    ``isinstance``; the empty set is falsy too.
    """

    blocker: "Element"

    def __str__(self) -> str:
        return f"undefined (blocked by {render(self.blocker)})"


_construction_hooks: list[Callable[["SigmaSet"], None]] = []


def add_construction_hook(fn: Callable[["SigmaSet"], None]) -> None:
    """Call ``fn`` on every newly built (not re-used) set."""
    _construction_hooks.append(fn)


def remove_construction_hook(fn: Callable[["SigmaSet"], None]) -> None:
    _construction_hooks.remove(fn)


class SigmaSet:
    """A finite, canonical, exclusion-clean sigma-set.

    Build with ``SigmaSet(iterable)`` or :func:`make_set`.  Equal sets are the
    same object (hash-consing), though ``==`` also falls back to a structural
    comparison.
    """

    __slots__ = ("_members", "_index", "_hash", "_key", "_star", "__weakref__")

    _interned: "weakref.WeakValueDictionary[tuple, SigmaSet]" = weakref.WeakValueDictionary()

    def __new__(cls, elems: Iterable["Element"] = ()):
        unique = set()
        for e in elems:
            if not isinstance(e, (Atom, SigmaSet)):
                raise TypeError(f"not a sigma element: {e!r}")
            unique.add(e)
        members = tuple(sorted(unique, key=sort_key))
        cached = cls._interned.get(members)
        if cached is not None:
            return cached
        for m in members:
            w = antielement(m)
            if w is not None and w in unique:
                raise ExclusionViolation(m, w)
        self = object.__new__(cls)
        self._members = members
        self._index = frozenset(members)
        self._hash = hash(members)
        self._key = (1, len(members), tuple(sort_key(m) for m in members))
        self._star = None
        cls._interned[members] = self
        for hook in _construction_hooks:
            hook(self)
        return self

    @property
    def members(self) -> tuple:
        return self._members

    @property
    def key(self) -> tuple:
        return self._key

    def __iter__(self) -> Iterator["Element"]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __bool__(self) -> bool:
        return bool(self._members)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if isinstance(other, SigmaSet):
            return self._members == other._members
        return NotImplemented

    def __lt__(self, other) -> bool:
        return sort_key(self) < sort_key(other)

    def __reduce__(self):
        return (SigmaSet, (self._members,))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"SigmaSet({render(self)})"


Element = Union[Atom, SigmaSet]


def make_set(elems: Iterable[Element] = ()) -> SigmaSet:
    """Canonical set of ``elems``; raises :class:`ExclusionViolation` on ``{x, x*}``."""
    return SigmaSet(elems)


def sort_key(e: Element) -> tuple:
    return e.key


def canonical_sorted(elems: Iterable[Element]) -> list:
    return sorted(elems, key=sort_key)


EMPTY = SigmaSet()


def star(e: Element) -> Union[Element, Undefined]:
    """Structural star: flip every atom's polarity, at any depth.

    On atoms this is the antielement; on a set it is the memberwise image,
    i.e. the antiset of a set of atoms.  Theta atoms have no star, so any
    value containing one maps to :class:`Undefined`.  Sets without atoms
    (the empty set, ``{∅}``, ...) are fixed points.
    """
    if isinstance(e, Atom):
        if e.polarity is Polarity.PLAIN:
            return Atom(e.name, Polarity.STARRED)
        if e.polarity is Polarity.STARRED:
            return Atom(e.name, Polarity.PLAIN)
        return Undefined(e)
    if e._star is not None:
        return e._star
    flipped = []
    result = None
    for m in e._members:
        s = star(m)
        if isinstance(s, Undefined):
            result = s
            break
        flipped.append(s)
    if result is None:
        result = SigmaSet(flipped)
    e._star = result
    return result


def antielement(e: Element) -> Element | None:
    """The antielement of ``e`` (the ``w`` with ``{e} ∪ {w} = ∅``), or None.

    Only plain and starred atoms have one.  Sets never do: ``{1}`` and
    ``{1*}`` sit side by side in every integer space, so they cannot cancel.
    A set's structural :func:`star` is its antiset, not an antielement.
    """
    if isinstance(e, Atom) and e.polarity is not Polarity.THETA:
        return Atom(e.name, Polarity.STARRED if e.polarity is Polarity.PLAIN else Polarity.PLAIN)
    return None


def member(x: Element, a: SigmaSet) -> bool:
    return x in a


def subset(a: SigmaSet, b: SigmaSet) -> bool:
    return all(x in b for x in a)


def depth(e: Element) -> int:
    if isinstance(e, Atom):
        return 0
    return 1 + max((depth(m) for m in e), default=0)


def contains_theta(e: Element) -> bool:
    if isinstance(e, Atom):
        return e.polarity is Polarity.THETA
    return any(contains_theta(m) for m in e)


def render(e: Element) -> str:
    """Canonical ASCII text: ``{}``, ``1``, ``1*``, ``1_T``, ``{1, {2*}}``."""
    if isinstance(e, Atom):
        if e.polarity is Polarity.STARRED:
            return e.name + "*"
        if e.polarity is Polarity.THETA:
            return e.name + "_T"
        return e.name
    return "{" + ", ".join(render(m) for m in e._members) + "}"


def is_exclusion_clean(a: SigmaSet) -> bool:
    """Pairwise scan of ``a``'s top-level members."""
    ms = a.members
    for i, x in enumerate(ms):
        for y in ms[i + 1:]:
            if antielement(x) == y:
                return False
    return True
