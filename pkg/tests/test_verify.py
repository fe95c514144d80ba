import pytest

from sigmaset.core import EMPTY, make_set, plain, render
from sigmaset.errors import BudgetExceeded, GoldenMismatch
from sigmaset.verify import (
    CheckReport,
    ExclusionAudit,
    Universe,
    check_conjecture_closure,
    check_theorems,
    compare_listing,
    enumerate_universe,
    parse_delta,
    run_suite,
)

from conftest import sv


@pytest.mark.parametrize(
    "u, listing",
    [
        (Universe(plain_atoms=("1",), max_depth=0), ["1", "1*"]),
        (Universe(plain_atoms=("1",), max_depth=1, max_width=1), ["1", "1*", "{}", "{1}", "{1*}"]),
        (Universe(plain_atoms=(), theta_atoms=("t",), max_depth=1, max_width=1), ["t_T", "{}", "{t_T}"]),
    ],
)
def test_enumerate_examples(u, listing):
    assert [render(e) for e in enumerate_universe(u)] == listing


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_universe(Universe(plain_atoms=("1", "2", "3"), max_depth=2, max_width=None, max_card=1000))


def test_enumerate_has_no_duplicates_and_respects_bounds():
    u = Universe(plain_atoms=("1", "2"), theta_atoms=("t",), max_depth=2, max_width=2)
    elems = enumerate_universe(u)
    assert len(elems) == len(set(elems))
    assert all(len(e) <= 2 for e in elems if not hasattr(e, "polarity"))


def test_report_fails_declared_check_with_no_cases():
    r = CheckReport("demo")
    r.expect("never-ran")
    r.finish(0.0)
    assert not r.ok
    assert "suite=demo check=never-ran cases=0 failures=1" in r.summary()


def test_report_summary_format():
    r = run_suite("conjecture", Universe(plain_atoms=("1",)))
    last = r.summary().splitlines()[-1]
    assert last.startswith("suite=conjecture[{1}] cases=10 failures=0 seconds=")
    assert last.endswith("status=pass")


@pytest.mark.parametrize("atoms, cases", [((), 1), (("1",), 9), (("1", "2"), 81)])
def test_conjecture_case_counts(atoms, cases):
    r = check_conjecture_closure(make_set(plain(n) for n in atoms))
    assert r.ok and r.cases["closure"] == cases


def test_theorem_report_is_deterministic():
    u = Universe(plain_atoms=("1",), theta_atoms=("t",))
    a, b = check_theorems(u), check_theorems(u)
    assert a.cases == b.cases and a.failures == b.failures
    assert a.ok


def test_parse_delta():
    assert parse_delta("∅") == EMPTY
    assert parse_delta("δ_{1*2*3}") == sv("{1*, 2*, 3}")
    assert parse_delta("δ_1") == sv("{1}")


def test_compare_listing_reports_first_difference():
    with pytest.raises(GoldenMismatch, match=r"\{2\}"):
        compare_listing("x", [sv("{1}"), sv("{2}")], [sv("{1}"), sv("{3}")])


def test_exclusion_audit_sees_new_sets():
    with ExclusionAudit() as audit:
        make_set([plain("97"), plain("98")])
    assert audit.audited >= 1 and audit.violations == []
    assert audit.sweep() > 0


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")
