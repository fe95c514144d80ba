import pytest

from sigmaset.algebra import (
    SpaceSpec,
    anti_intersect,
    antiset,
    difference,
    fuse,
    fuse_singletons,
    generated_space,
    integer_space,
    intersect,
    power_set,
    require_antiset,
    star_difference,
)
from sigmaset.core import EMPTY, Undefined, make_set, plain, render, starred, theta
from sigmaset.errors import NoAntiset, SigmaError

from conftest import sv


def test_fuse_keeps_theta_and_cancels_antielements():
    assert render(fuse(sv("{1_T, 2*}"), sv("{1_T, 2}"))) == "{1_T}"


def test_anti_intersect_and_star_difference():
    x, y = sv("{1_T, 2*}"), sv("{1_T, 2}")
    assert render(anti_intersect(x, y)) == "{2*}"
    assert render(star_difference(x, y)) == "{1_T}"


def test_plain_intersect_and_difference():
    x, y = sv("{1, 2, 3}"), sv("{2, 3*}")
    assert intersect(x, y) == sv("{2}")
    assert difference(x, y) == sv("{1, 3}")


def test_fuse_is_commutative_and_idempotent_on_examples():
    a, b = sv("{1, 2*, 3_T}"), sv("{1*, 2*, {1}}")
    assert fuse(a, b) == fuse(b, a) == sv("{2*, 3_T, {1}}")
    assert fuse(a, a) == a


def test_fuse_is_not_associative():
    a, b, c = sv("{1}"), sv("{1}"), sv("{1*}")
    assert fuse(fuse(a, b), c) == EMPTY
    assert fuse(a, fuse(b, c)) == sv("{1}")


def test_fuse_singletons():
    assert fuse_singletons(plain("1"), starred("1")) == EMPTY
    assert fuse_singletons(plain("1"), plain("1")) == sv("{1}")
    assert fuse_singletons(theta("1"), theta("1")) == sv("{1_T}")
    assert fuse_singletons(plain("1"), plain("2")) == sv("{1, 2}")


def test_antiset():
    assert antiset(sv("{1, 2*}")) == sv("{1*, 2}")
    assert antiset(EMPTY) == EMPTY
    assert isinstance(antiset(sv("{1_T, 2}")), Undefined)
    assert isinstance(antiset(sv("{{1}}")), Undefined)
    with pytest.raises(NoAntiset):
        require_antiset(sv("{1_T}"))


def test_fuse_with_antiset_is_empty():
    a = sv("{1, 2*, 3}")
    assert fuse(a, antiset(a)) == EMPTY


def test_power_set_sizes():
    assert len(power_set(EMPTY)) == 1
    assert len(power_set(sv("{1, 2, 3}"))) == 8
    assert render(power_set(sv("{1}"))) == "{{}, {1}}"


def test_generated_space_example():
    g = generated_space(sv("{1_T, 2*}"), sv("{1_T, 2}"))
    assert render(g) == "{{}, {1_T}, {2}, {2*}, {1_T, 2}, {1_T, 2*}}"


def test_integer_space():
    assert render(integer_space(sv("{1}"))) == "{{}, {1}, {1*}}"
    assert len(integer_space(sv("{1, 2, 3}"))) == 27
    assert integer_space(EMPTY) == sv("{{}}")
    with pytest.raises(SigmaError):
        integer_space(sv("{1_T}"))


def test_space_spec():
    spec = SpaceSpec("integer", (sv("{1, 2}"),))
    assert len(spec.build()) == 9
    assert spec.members() == list(spec.build())
    with pytest.raises(ValueError):
        SpaceSpec("generated", (sv("{1}"),))
