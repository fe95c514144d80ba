import pickle

import pytest

from sigmaset.core import (
    EMPTY,
    Atom,
    Polarity,
    SigmaSet,
    Undefined,
    antielement,
    contains_theta,
    depth,
    make_set,
    plain,
    render,
    star,
    starred,
    subset,
    theta,
)
from sigmaset.errors import ExclusionViolation

one, one_s, one_t = plain("1"), starred("1"), theta("1")
two, two_s = plain("2"), starred("2")


def test_atom_rendering():
    assert [render(a) for a in (one, one_s, one_t)] == ["1", "1*", "1_T"]


@pytest.mark.parametrize("bad", ["", "a b", "1*", "x_T"])
def test_atom_names_are_alphanumeric(bad):
    with pytest.raises(ValueError):
        Atom(bad)


def test_sets_are_canonical_and_interned():
    a = make_set([two, one_s, one_s])
    b = SigmaSet([one_s, two])
    assert a is b
    assert render(a) == "{1*, 2}"
    assert len(a) == 2


def test_canonical_order_puts_atoms_before_sets_and_smaller_sets_first():
    s = make_set([make_set([one, two]), make_set([]), two, one_t, one])
    assert render(s) == "{1_T, 1, 2, {}, {1, 2}}"


def test_empty_set_renders_as_braces():
    assert render(EMPTY) == "{}"
    assert make_set() is EMPTY


def test_exclusion_violation_on_construction():
    with pytest.raises(ExclusionViolation):
        make_set([one, one_s])


def test_nested_sets_that_are_stars_of_each_other_may_coexist():
    # only atoms carry antielements, so {2} and {2*} are not mutually exclusive
    s = make_set([make_set([two]), make_set([two_s])])
    assert len(s) == 2


def test_theta_atom_has_no_antielement():
    assert antielement(one_t) is None
    assert antielement(one) == one_s
    assert antielement(one_s) == one


def test_antielement_is_atom_only():
    assert antielement(make_set([one])) is None


def test_star_involution_and_blocker():
    a = make_set([one, make_set([two_s])])
    assert star(star(a)) == a
    assert render(star(a)) == "{1*, {2}}"
    blocked = star(make_set([one_t, two]))
    assert isinstance(blocked, Undefined)
    assert blocked.blocker == one_t


def test_depth_and_theta_detection():
    assert depth(one) == 0
    assert depth(EMPTY) == 1
    assert depth(make_set([make_set([one])])) == 2
    assert contains_theta(make_set([make_set([one_t])]))
    assert not contains_theta(make_set([one]))


def test_subset():
    assert subset(EMPTY, make_set([one]))
    assert subset(make_set([one]), make_set([one, two]))
    assert not subset(make_set([one_s]), make_set([one, two]))


def test_pickle_roundtrip_preserves_identity():
    a = make_set([one, make_set([two])])
    assert pickle.loads(pickle.dumps(a)) is a


def test_hashing_agrees_with_equality():
    d = {make_set([one, two]): "x"}
    assert d[make_set([two, one])] == "x"
    assert Polarity.THETA < Polarity.PLAIN < Polarity.STARRED
