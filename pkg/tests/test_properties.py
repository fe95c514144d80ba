"""Algebraic laws checked against a small dict-based model of fusion."""

from hypothesis import given, settings
from hypothesis import strategies as st

from sigmaset.algebra import antiset, fuse, fuse_singletons
from sigmaset.core import EMPTY, Polarity, SigmaSet, Undefined, make_set, plain, star, starred, theta
from sigmaset.errors import ExclusionViolation
from sigmaset.pairs import pair, unpair

atoms = st.sampled_from([plain("1"), plain("2"), starred("1"), starred("2"), theta("t")])


def _clean(members):
    chosen = {}
    for m in members:
        if getattr(m, "polarity", None) is not None and m.polarity != Polarity.THETA:
            if (m.name, 3 - m.polarity) in chosen:
                continue
            chosen[(m.name, int(m.polarity))] = m
        else:
            chosen[("set", repr(m))] = m
    return make_set(chosen.values())


elements = st.recursive(atoms, lambda kids: st.lists(kids, max_size=3).map(_clean), max_leaves=10)
sets = st.lists(elements, max_size=4).map(_clean)


def model_fuse(a, b):
    # cancel atom members whose opposite polarity sits on the other side
    def anti(x):
        if isinstance(x, SigmaSet) or x.polarity == Polarity.THETA:
            return None
        return starred(x.name) if x.polarity == Polarity.PLAIN else plain(x.name)

    keep = [x for x in a if anti(x) not in set(b)] + [y for y in b if anti(y) not in set(a)]
    return make_set(keep)


@settings(max_examples=300, deadline=None)
@given(sets, sets)
def test_fuse_matches_model_and_commutes(a, b):
    assert fuse(a, b) == model_fuse(a, b) == fuse(b, a)


@settings(max_examples=300, deadline=None)
@given(sets)
def test_empty_is_identity_and_fuse_idempotent(a):
    assert fuse(a, EMPTY) == a
    assert fuse(a, a) == a


@settings(max_examples=300, deadline=None)
@given(elements)
def test_star_is_an_involution_where_defined(x):
    s = star(x)
    if not isinstance(s, Undefined):
        assert star(s) == x


@settings(max_examples=300, deadline=None)
@given(elements, elements)
def test_pair_roundtrip(x, y):
    p = unpair(pair(x, y).encoding)
    assert (p.first, p.second) == (x, y)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(["1", "2", "3"]), unique=True), st.lists(st.booleans(), min_size=3, max_size=3))
def test_antiset_annihilates(names, signs):
    a = make_set(starred(n) if s else plain(n) for n, s in zip(names, signs))
    assert fuse(a, antiset(a)) == EMPTY


@given(atoms)
def test_singleton_fusion_with_antielement(x):
    if x.polarity == Polarity.THETA:
        assert fuse_singletons(x, x) == make_set([x])
    else:
        try:
            make_set([x, star(x)])
        except ExclusionViolation:
            pass
        else:
            raise AssertionError("antielements must not be co-members")
        assert fuse_singletons(x, star(x)) == EMPTY
