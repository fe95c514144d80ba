import pytest

from sigmaset.core import EMPTY, make_set, plain, render, starred, theta
from sigmaset.errors import NotAPair
from sigmaset.pairs import cartesian_product, pair, unpair

from conftest import sv

one, one_s = plain("1"), starred("1")


@pytest.mark.parametrize(
    "x, y, encoded",
    [
        (one, one_s, "{{}, {1}}"),
        (one, one, "{{1}}"),
        (one, plain("2"), "{{1}, {1, 2}}"),
        (theta("1"), theta("1"), "{{1_T}}"),
        (EMPTY, EMPTY, "{{{}}}"),
    ],
)
def test_pair_encoding_and_roundtrip(x, y, encoded):
    p = pair(x, y)
    assert render(p.encoding) == encoded
    back = unpair(p.encoding)
    assert (back.first, back.second) == (x, y)


def test_pair_display():
    assert str(pair(one, plain("2"))) == "(1, 2)"


@pytest.mark.parametrize("text", ["{}", "{1}", "{{1}, {2}}", "{{1}, {2}, {3}}", "{{1, 2}, {1, 3}}"])
def test_unpair_rejects_non_pairs(text):
    with pytest.raises(NotAPair):
        unpair(sv(text))


def test_cartesian_product_example():
    prod = cartesian_product(sv("{1, 2}"), sv("{1*}"))
    assert render(prod) == "{{{}, {1}}, {{2}, {1*, 2}}}"


def test_cartesian_product_sizes():
    assert len(cartesian_product(sv("{1, 2, 3}"), sv("{1*, 2*, 3*}"))) == 9
    assert cartesian_product(EMPTY, sv("{1}")) == EMPTY
