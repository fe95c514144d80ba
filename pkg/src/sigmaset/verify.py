"""Brute-force verification over small enumerated universes.

Each ``check_*`` function returns a :class:`CheckReport` with a case count
per named check.  A declared check that ran zero cases counts as a failure,
so a suite can never pass vacuously.
"""

from __future__ import annotations

import os
import random
import re
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations, product
from math import comb

from . import core
from .algebra import (
    antiset,
    fuse,
    fuse_singletons,
    generated_space,
    integer_space,
    power_set,
    require_antiset,
)
from .core import (
    EMPTY,
    Atom,
    Element,
    Polarity,
    SigmaSet,
    Undefined,
    antielement,
    canonical_sorted,
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
from .emit import cayley_table, covering_edges, emit_space
from .errors import (
    BudgetExceeded,
    ExclusionViolation,
    GoldenMismatch,
    NotBijective,
    SigmaError,
)
from .functions import (
    SigmaFunction,
    all_functions,
    antidentity,
    antifunction,
    antinverse,
    as_function,
    build_diagram,
    classify,
    compose,
    identity,
    inverse,
    make_function,
    make_relation,
)
from .pairs import cartesian_product, pair, unpair

__all__ = [
    "DEFAULT_MAX_CARD",
    "Universe",
    "CheckReport",
    "ExclusionAudit",
    "enumerate_universe",
    "check_conjecture_closure",
    "check_theorems",
    "check_function_space",
    "check_properties",
    "check_diagram",
    "reproduce_golden_artifacts",
    "load_golden",
    "parse_delta",
    "SUITES",
    "run_suite",
]

DEFAULT_MAX_CARD = 100_000


def _max_card() -> int:
    return int(os.environ.get("SIGMA_MAX_CARD", DEFAULT_MAX_CARD))


@dataclass(frozen=True)
class Universe:
    """Atoms plus every exclusion-clean set up to ``max_depth`` / ``max_width``.

    Depth 0 means atoms only; ``max_width=None`` lifts the width bound.
    """

    plain_atoms: tuple = ("1", "2")
    theta_atoms: tuple = ()
    max_depth: int = 1
    max_width: int | None = 2
    max_card: int | None = None

    def atoms(self) -> list[Atom]:
        out = [plain(n) for n in self.plain_atoms] + [starred(n) for n in self.plain_atoms]
        out += [theta(n) for n in self.theta_atoms]
        return canonical_sorted(set(out))

    def elements(self) -> list[Element]:
        return enumerate_universe(self)


def enumerate_universe(u: Universe) -> list[Element]:
    """All atoms of ``u`` followed by its sets, in canonical order."""
    cap = u.max_card if u.max_card is not None else _max_card()
    atoms = u.atoms()
    pool: list[Element] = list(atoms)
    for _ in range(u.max_depth):
        width = len(pool) if u.max_width is None else min(u.max_width, len(pool))
        estimate = len(atoms) + sum(comb(len(pool), k) for k in range(width + 1))
        if estimate > cap:
            raise BudgetExceeded(f"universe would hold up to {estimate} values (cap {cap})")
        sets = set()
        for k in range(width + 1):
            for combo in combinations(pool, k):
                try:
                    sets.add(make_set(combo))
                except ExclusionViolation:
                    pass
        pool = atoms + canonical_sorted(sets)
    return pool


@dataclass
class CheckReport:
    suite: str
    cases: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    seconds: float = 0.0
    failure_counts: dict = field(default_factory=dict)

    def expect(self, *checks: str) -> None:
        for c in checks:
            self.cases.setdefault(c, 0)

    def count(self, check: str, n: int = 1) -> None:
        self.cases[check] = self.cases.get(check, 0) + n

    def check(self, name: str, ok: bool, detail=None) -> bool:
        self.count(name)
        if not ok:
            self.fail(name, detail() if callable(detail) else (detail or "failed"))
        return ok

    def fail(self, check: str, message: str) -> None:
        self.failure_counts[check] = self.failure_counts.get(check, 0) + 1
        if self.failure_counts[check] <= 5:
            self.failures.append((check, message))

    def finish(self, started: float) -> "CheckReport":
        for c, n in self.cases.items():
            if n == 0:
                self.fail(c, "no cases ran")
        self.seconds = time.perf_counter() - started
        return self

    @property
    def total_cases(self) -> int:
        return sum(self.cases.values())

    @property
    def total_failures(self) -> int:
        return sum(self.failure_counts.values())

    @property
    def ok(self) -> bool:
        return self.total_failures == 0

    def text(self) -> str:
        lines = [f"== {self.suite}: {'PASS' if self.ok else 'FAIL'} ({self.total_cases} cases, {self.seconds:.2f}s)"]
        for c, n in self.cases.items():
            bad = self.failure_counts.get(c, 0)
            lines.append(f"  {'ok ' if not bad else 'BAD'} {c}: {n} cases" + (f", {bad} failures" if bad else ""))
        for w in self.witnesses:
            lines.append(f"  found (expected): {w}")
        for c, msg in self.failures:
            lines.append(f"  counterexample [{c}]: {msg}")
        return "\n".join(lines)

    def summary(self) -> str:
        lines = [
            f"suite={self.suite} check={c} cases={n} failures={self.failure_counts.get(c, 0)}"
            for c, n in self.cases.items()
        ]
        lines.append(
            f"suite={self.suite} cases={self.total_cases} failures={self.total_failures} "
            f"seconds={self.seconds:.3f} status={'pass' if self.ok else 'fail'}"
        )
        return "\n".join(lines)


def _clashing(x: Element, y: Element) -> bool:
    # written without core.antielement so the audit stays independent of it
    return (
        isinstance(x, Atom)
        and isinstance(y, Atom)
        and x.name == y.name
        and {x.polarity, y.polarity} == {Polarity.PLAIN, Polarity.STARRED}
    )


def independently_clean(s: SigmaSet) -> bool:
    return not any(_clashing(x, y) for x, y in combinations(s.members, 2))


class ExclusionAudit:
    """Scan every set built while active for co-member antielements."""

    def __init__(self):
        self.audited = 0
        self.violations: list[SigmaSet] = []

    def __call__(self, s: SigmaSet) -> None:
        self.audited += 1
        if not independently_clean(s):
            self.violations.append(s)

    def __enter__(self) -> "ExclusionAudit":
        core.add_construction_hook(self)
        return self

    def __exit__(self, *exc) -> None:
        core.remove_construction_hook(self)

    def sweep(self) -> int:
        """Also audit every set still alive in the intern table; returns how many."""
        live = list(SigmaSet._interned.values())
        for s in live:
            self(s)
        return len(live)


@contextmanager
def _timed(report: CheckReport):
    started = time.perf_counter()
    yield report
    report.finish(started)


# ---------------------------------------------------------------- conjecture


def check_conjecture_closure(a: SigmaSet) -> CheckReport:
    """Fusion restricted to ``3^a`` is a binary operation on ``3^a``.

    The operation is assembled as a relation on ``3^a × 3^a`` and refined
    with :func:`as_function`, which checks totality and single-valuedness.
    """
    report = CheckReport(f"conjecture[{render(a)}]")
    report.expect("closure", "single-valued")
    with _timed(report):
        space = integer_space(a)
        graph = []
        for x, y in product(space, space):
            r = fuse(x, y)
            report.check("closure", r in space, lambda: f"{render(x)} + {render(y)} = {render(r)}")
            graph.append((pair(x, y).encoding, r))
        domain = cartesian_product(space, space, check=False)
        try:
            op = as_function(make_relation(domain, space, graph))
            report.check("single-valued", len(op.pairs) == len(space) ** 2)
        except SigmaError as exc:
            report.check("single-valued", False, str(exc))
    return report


# ---------------------------------------------------------------- theorems


def check_theorems(u: Universe = Universe(theta_atoms=("t",))) -> CheckReport:
    """Element-, pair- and set-level laws over every tuple drawn from ``u``."""
    report = CheckReport("theorems")
    report.expect(
        "empty-singleton-fusion",
        "singleton-fusion-symmetry",
        "singleton-fusion-matches-fuse",
        "antielement-uniqueness",
        "antiset-uniqueness",
        "pair-roundtrip",
        "pair-injectivity",
        "pair-in-generated-power",
        "product-cardinality",
        "sub-antiset-existence",
        "fusion-nonassociativity-witness",
    )
    with _timed(report):
        elems = enumerate_universe(u)
        sets = [e for e in elems if isinstance(e, SigmaSet)]

        for x in elems:
            report.check(
                "empty-singleton-fusion",
                fuse_singletons(EMPTY, x) == make_set([EMPTY, x]) == fuse(make_set([EMPTY]), make_set([x])),
                lambda: f"{{∅}} + {{{render(x)}}}",
            )

        for x, y in product(elems, repeat=2):
            xy, yx = fuse_singletons(x, y), fuse_singletons(y, x)
            report.check("singleton-fusion-symmetry", (xy == EMPTY) == (yx == EMPTY), lambda: f"{render(x)}, {render(y)}")
            direct = fuse(make_set([x]), make_set([y]))
            report.check("singleton-fusion-matches-fuse", direct == xy and (direct == EMPTY or set(direct) == {x, y}),
                         lambda: f"{render(x)}, {render(y)}")

        for x in elems:
            found = [w for w in elems if fuse(make_set([x]), make_set([w])) == EMPTY]
            anti = antielement(x)
            expected = [anti] if anti is not None and anti in elems else []
            report.check("antielement-uniqueness", found == expected,
                         lambda: f"{render(x)}: candidates {[render(w) for w in found]}")

        for a in sets:
            found = [b for b in sets if fuse(a, b) == EMPTY]
            anti = antiset(a)
            expected = [] if isinstance(anti, Undefined) else [anti]
            report.check("antiset-uniqueness", found == expected,
                         lambda: f"{render(a)}: candidates {[render(b) for b in found]}")

        seen: dict = {}
        for x, y in product(elems, repeat=2):
            p = pair(x, y)
            try:
                back = unpair(p.encoding)
                ok = (back.first, back.second) == (x, y)
            except SigmaError:
                ok = False
            report.check("pair-roundtrip", ok, lambda: f"({render(x)}, {render(y)}) encoded {render(p.encoding)}")
            prev = seen.setdefault(p.encoding, (x, y))
            report.check("pair-injectivity", prev == (x, y),
                         lambda: f"({render(x)}, {render(y)}) and ({render(prev[0])}, {render(prev[1])})")

        small = [s for s in sets if len(s) <= 2]
        for a, b in product(small, repeat=2):
            space = generated_space(a, b)
            for x, y in product(a, b):
                enc = pair(x, y).encoding
                report.check("pair-in-generated-power", subset(enc, space),
                             lambda: f"({render(x)}, {render(y)}) in 2^<2^{render(a)}, 2^{render(b)}>")
            prod_ab = cartesian_product(a, b)
            report.check("product-cardinality", len(prod_ab) == len(a) * len(b), lambda: f"{render(a)} x {render(b)}")

        for a in sets:
            a_star = antiset(a)
            if isinstance(a_star, Undefined):
                continue
            candidates = list(power_set(a_star))
            for b in power_set(a):
                found = [d for d in candidates if fuse(b, d) == EMPTY]
                report.check("sub-antiset-existence", found == [star(b)],
                             lambda: f"B={render(b)} in 2^{render(a)}: {[render(d) for d in found]}")

        one, one_star = make_set([plain("1")]), make_set([starred("1")])
        left = fuse(fuse(one, one), one_star)
        right = fuse(one, fuse(one, one_star))
        found = left != right
        report.check("fusion-nonassociativity-witness", found, "({1} + {1}) + {1*} equals {1} + ({1} + {1*})")
        if found:
            report.witnesses.append(f"({{1}} + {{1}}) + {{1*}} = {render(left)} but {{1}} + ({{1}} + {{1*}}) = {render(right)}")
    return report


# ---------------------------------------------------------------- functions


def function_carriers(atoms=("1", "2", "3"), max_size: int = 3) -> list[SigmaSet]:
    """Every exclusion-clean set of at most ``max_size`` members over ``atoms`` and their stars."""
    base = make_set(plain(a) for a in atoms)
    return [c for c in integer_space(base) if len(c) <= max_size]


def check_function_space(atoms=("1", "2", "3"), max_size: int = 3) -> CheckReport:
    """Antifunction, antidentity and antinverse laws over all functions between carriers."""
    report = CheckReport("functions")
    report.expect(
        "antifunction-existence",
        "antifunction-range-annihilates",
        "antifunction-uniqueness",
        "antifunction-involution",
        "classification-transfer",
        "inverse-existence-transfer",
        "antinverse-contract",
        "antinverse-uniqueness",
        "antidentity-involution",
    )
    with _timed(report):
        carriers = function_carriers(atoms, max_size)
        for a in carriers:
            report.check("antidentity-involution",
                         antifunction(antidentity(a)) == identity(a) and antifunction(identity(a)) == antidentity(a),
                         lambda: f"A={render(a)}")
        for a, b in product(carriers, repeat=2):
            b_star = require_antiset(b)
            a_star = require_antiset(a)
            anti_candidates = list(all_functions(a, b_star))
            for f in all_functions(a, b):
                _check_one_function(report, f, a_star, b_star, anti_candidates)
    return report


def _check_one_function(report, f: SigmaFunction, a_star, b_star, anti_candidates) -> None:
    a = f.domain
    try:
        fs = antifunction(f)
    except SigmaError as exc:
        report.check("antifunction-existence", False, f"{f}: {exc}")
        return
    report.check("antifunction-existence", fs.codomain == b_star and all(
        fuse_singletons(f(x), fs(x)) == EMPTY for x in a), lambda: str(f))

    ran_f, ran_fs = f.ran(), fs.ran()
    report.check("antifunction-range-annihilates",
                 fuse(ran_f, ran_fs) == EMPTY and antiset(ran_f) == ran_fs and antiset(ran_fs) == ran_f,
                 lambda: f"{f}: ran {render(ran_f)} vs {render(ran_fs)}")

    found = [g for g in anti_candidates if all(fuse_singletons(f(x), g(x)) == EMPTY for x in a)]
    report.check("antifunction-uniqueness", found == [fs], lambda: f"{f}: {len(found)} candidates")

    back = antifunction(fs)
    report.check("antifunction-involution", back == f and back.codomain == f.codomain, lambda: str(f))

    cf, cfs = classify(f), classify(fs)
    report.check("classification-transfer", cf == cfs, lambda: f"{f}: {cf} vs {cfs}")

    report.check("inverse-existence-transfer", _has_inverse(f) == _has_inverse(fs), lambda: str(f))

    if cf.bijective:
        g = antinverse(f)
        report.check("antinverse-contract", all(g(fs(x)) == antielement(x) for x in a), lambda: f"{f}: {g}")
        found = [
            h for h in all_functions(b_star, a_star)
            if all(h(fs(x)) == antielement(x) for x in a)
        ]
        report.check("antinverse-uniqueness", found == [g], lambda: f"{f}: {len(found)} candidates")


def _has_inverse(f: SigmaFunction) -> bool:
    try:
        inverse(f)
        return True
    except NotBijective:
        return False


# ---------------------------------------------------------------- properties


def check_properties(
    u: Universe = Universe(plain_atoms=("1", "2", "3"), theta_atoms=("t",), max_depth=2, max_width=2),
    samples: int = 10_000,
    seed: int = 0,
) -> CheckReport:
    """Algebraic laws of fusion and star on random pairs drawn from ``u``."""
    report = CheckReport("properties")
    report.expect(
        "fusion-commutativity",
        "fusion-identity",
        "fusion-idempotence",
        "exclusion-preservation",
        "star-involution",
        "star-undefined-iff-theta",
        "star-preserves-shape",
        "power-set-antielement-free",
        "fusion-nonassociativity-witness",
    )
    with _timed(report):
        sets = [e for e in enumerate_universe(u) if isinstance(e, SigmaSet)]
        rng = random.Random(seed)
        for _ in range(samples):
            a, b = rng.choice(sets), rng.choice(sets)
            ab = fuse(a, b)
            report.check("fusion-commutativity", ab == fuse(b, a), lambda: f"{render(a)}, {render(b)}")
            report.check("exclusion-preservation", independently_clean(ab), lambda: f"{render(a)} + {render(b)}")
        for a in sets:
            report.check("fusion-identity", fuse(a, EMPTY) == a == fuse(EMPTY, a), lambda: render(a))
            report.check("fusion-idempotence", fuse(a, a) == a, lambda: render(a))
            s = star(a)
            report.check("star-undefined-iff-theta", isinstance(s, Undefined) == contains_theta(a), lambda: render(a))
            if not isinstance(s, Undefined):
                report.check("star-involution", star(s) == a, lambda: render(a))
                report.check("star-preserves-shape", depth(s) == depth(a) and len(s) == len(a), lambda: render(a))
            if len(a) <= 3:
                ps = list(power_set(a))
                report.check("power-set-antielement-free",
                             all(fuse_singletons(x, y) != EMPTY for x, y in combinations(ps, 2)),
                             lambda: render(a))
        witnesses = [
            (a, b, c)
            for a, b, c in product([s for s in sets if depth(s) == 1 and len(s) <= 1], repeat=3)
            if fuse(fuse(a, b), c) != fuse(a, fuse(b, c))
        ]
        w = (make_set([plain("1")]), make_set([plain("1")]), make_set([starred("1")]))
        report.check("fusion-nonassociativity-witness", w in witnesses, "({1}, {1}, {1*}) not detected")
        report.witnesses.append(f"{len(witnesses)} non-associative triples among singletons, including ({{1}}, {{1}}, {{1*}})")
    return report


# ---------------------------------------------------------------- diagram


def check_diagram(f: SigmaFunction) -> CheckReport:
    """Sixteen nodes, and the composition identities forced by their constructions."""
    report = CheckReport("diagram")
    report.expect("sixteen-nodes", "forced-identities", "chained-compositions")
    with _timed(report):
        d = build_diagram(f)
        report.check("sixteen-nodes", len(d.nodes) == 16)
        a, b = f.domain, f.codomain
        forced = {
            "f_-1* = (f*_-1)*": (d["f_-1*"], antifunction(inverse(antifunction(f)))),
            "(f_-1)* = antifunction(f_-1)": (d["(f_-1)*"], antifunction(inverse(f))),
            "f_-1 o f = Id_A": (compose(inverse(f), f), identity(a)),
            "f o f_-1 = Id_B": (compose(f, inverse(f)), identity(b)),
            "(f_-1)* o f = Id*_A": (compose(antifunction(inverse(f)), f), antidentity(a)),
            "f_-1* o f* = Id*_A": (compose(antinverse(f), antifunction(f)), antidentity(a)),
        }
        for label, (lhs, rhs) in forced.items():
            ok = lhs.domain == rhs.domain and all(lhs(x) == rhs(x) for x in lhs.domain)
            report.check("forced-identities", ok, lambda: f"{label}: {lhs} vs {rhs}")
        report.count("chained-compositions", len(d.edges) + len(d.mismatches))
        for m in d.mismatches:
            report.fail("chained-compositions", str(m))
    return report


# ---------------------------------------------------------------- golden


def load_golden(name: str) -> str:
    return resources.files("sigmaset").joinpath("golden", name).read_text(encoding="utf-8")


def _golden_sets(name: str) -> list[SigmaSet]:
    from .evaluate import evaluate_text

    return [evaluate_text(line) for line in load_golden(name).splitlines() if line.strip()]


_DELTA_RE = re.compile(r"δ_(?:\{([^}]*)\}|([A-Za-z0-9](?:\*|_T)?))\Z")
_DELTA_ATOM_RE = re.compile(r"([A-Za-z0-9])(\*|_T)?")


def parse_delta(label: str) -> SigmaSet:
    """Read a compact label (``∅``, ``δ_1``, ``δ_{1*23}``); atom names are single characters."""
    if label == "∅":
        return EMPTY
    m = _DELTA_RE.match(label)
    if not m:
        raise ValueError(f"bad delta label {label!r}")
    atoms = []
    for name, suffix in _DELTA_ATOM_RE.findall(m.group(1) or m.group(2)):
        pol = {"": Polarity.PLAIN, "*": Polarity.STARRED, "_T": Polarity.THETA}[suffix]
        atoms.append(Atom(name, pol))
    return make_set(atoms)


def compare_listing(name: str, produced: list, expected: list) -> None:
    """Raise :class:`GoldenMismatch` at the first position where the listings differ."""
    for i, (p, e) in enumerate(zip(produced, expected)):
        if p != e:
            raise GoldenMismatch(f"{name}: entry {i} is {render(p)}, golden has {render(e)}")
    if len(produced) != len(expected):
        raise GoldenMismatch(f"{name}: {len(produced)} entries, golden has {len(expected)}")


def reproduce_golden_artifacts() -> CheckReport:
    """Regenerate the reference spaces, pyramids and fusion table and diff them against golden files."""
    report = CheckReport("golden")
    report.expect("generated-space-xy", "generated-space-36", "integer-space-123", "pyramids", "fusion-table")
    with _timed(report):
        t1, t2 = theta("1"), theta("2")
        p1, p2, s1, s2 = plain("1"), plain("2"), starred("1"), starred("2")

        x, y = make_set([t1, s2]), make_set([t1, p2])
        gen = generated_space(x, y)
        _diff(report, "generated-space-xy", list(gen), _golden_sets("generated_xy.txt"))
        _diff(report, "generated-space-xy", emit_space(gen).splitlines(),
              ["# card=6", *load_golden("generated_xy.txt").splitlines()], text=True)
        pow_xy = power_set(fuse(x, y))
        report.check("generated-space-xy", pow_xy == make_set([EMPTY, make_set([t1])]) and pow_xy != gen,
                     lambda: f"2^(X+Y) = {render(pow_xy)}")

        big = generated_space(make_set([t1, t2, p1, p2]), make_set([t1, t2, s1, s2]))
        _diff(report, "generated-space-36", list(big), _golden_sets("generated_36.txt"))

        a = make_set(plain(n) for n in "123")
        ispace = integer_space(a)
        _diff(report, "integer-space-123", list(ispace), _golden_sets("integer_space_123.txt"))

        edges = covering_edges(ispace)
        for pyramid in _golden_sets("pyramids.txt"):
            apex = max(pyramid, key=len)
            lower = make_set(lo for lo, hi in edges if hi == apex)
            upper = make_set(hi for lo, hi in edges if lo == apex)
            report.check("pyramids", make_set([*lower, apex]) == pyramid and upper == EMPTY,
                         lambda: f"covers of {render(apex)}: {render(lower)}")

        header, *rows = [line.split() for line in load_golden("oplus_table.txt").splitlines() if line.strip()]
        cols = [parse_delta(c) for c in header[1:]]
        row_heads = [parse_delta(r[0]) for r in rows]
        table = cayley_table(ispace, "fuse", row_heads, cols)
        for r, got_line, row in zip(row_heads, table, rows):
            for c, got, want in zip(cols, got_line, row[1:]):
                expected = parse_delta(want)
                report.check("fusion-table", got == expected,
                             lambda: f"{render(r)} + {render(c)} = {render(got)}, golden {render(expected)}")
    return report


def _diff(report: CheckReport, check: str, produced, expected, text: bool = False) -> None:
    try:
        if text:
            for i, (p, e) in enumerate(zip(produced, expected)):
                if p != e:
                    raise GoldenMismatch(f"{check}: line {i} is {p!r}, golden has {e!r}")
            if len(produced) != len(expected):
                raise GoldenMismatch(f"{check}: {len(produced)} lines, golden has {len(expected)}")
        else:
            compare_listing(check, produced, expected)
        report.check(check, True)
    except GoldenMismatch as exc:
        report.check(check, False, str(exc))


# ---------------------------------------------------------------- dispatch


def _cycle_example() -> SigmaFunction:
    p = [plain(n) for n in "123"]
    a = make_set(p)
    return make_function(a, a, {p[0]: p[1], p[1]: p[2], p[2]: p[0]})


SUITES = ("golden", "theorems", "conjecture", "functions", "properties", "diagram")


def run_suite(name: str, universe: Universe | None = None, samples: int = 10_000, seed: int = 0) -> CheckReport:
    if name == "golden":
        return reproduce_golden_artifacts()
    if name == "theorems":
        return check_theorems(universe or Universe(theta_atoms=("t",)))
    if name == "conjecture":
        atoms = universe.plain_atoms if universe else ("1", "2", "3")
        return check_conjecture_closure(make_set(plain(n) for n in atoms))
    if name == "functions":
        atoms = universe.plain_atoms if universe else ("1", "2", "3")
        return check_function_space(atoms)
    if name == "properties":
        if universe is None:
            return check_properties(samples=samples, seed=seed)
        return check_properties(universe, samples=samples, seed=seed)
    if name == "diagram":
        return check_diagram(_cycle_example())
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
