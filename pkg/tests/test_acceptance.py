"""Exit criteria: worked examples, exhaustive and randomized theorem checks, round trips.

Each criterion records one PASS/FAIL line, printed in the "acceptance
criteria" section of the pytest summary.  Sub-checks of the bundled criteria
get their own lines so a failure names the statement that broke.
"""

import random
import time

import pytest

from conftest import record
from posetgap.classify import GapClass, classify, stalk_poset
from posetgap.formats import parse_poset_json, parse_poset_text, serialize_poset_json, serialize_poset_text
from posetgap.gap import deletion_delta, gap
from posetgap.harness import EnumerationConfig, count_posets, enumerate_posets, random_poset, random_sweep, verify_all
from posetgap.poset import disjoint_union, dual

EXHAUSTIVE_SUBCHECKS = {
    "deletion delta (every minimal non-maximal element)": ["deletion_delta"],
    "antichain bounds, lower": ["antichain_lower_bound"],
    "antichain bounds, upper": ["antichain_upper_bound"],
    "gap 0 three-way equivalence": ["gap_zero_equivalence"],
    "gap 1 three-way equivalence": ["gap_one_equivalence"],
    "antichain identity sum uc*dc == maxchains": ["antichain_chain_identity"],
    "metrics vs chain enumeration": ["metrics_oracle"],
}


def _failures(report, names):
    return sum(report.checks_run[name]["fail"] for name in names)


def _instances(report, names):
    return sum(report.checks_run[name]["pass"] + report.checks_run[name]["fail"] for name in names)


# 1 -----------------------------------------------------------------------------


def test_c1_figure_examples(figures):
    t0 = time.perf_counter()
    r2 = gap(figures["x_avoiding"])
    r3 = gap(figures["with_x"])
    p4 = figures["deletion"]
    d4 = deletion_delta(p4, p4.index("alpha"))
    terms2 = (r2.terms.maxchains, r2.terms.n, r2.terms.maxx, r2.terms.minn, r2.terms.edges)
    terms3 = (r3.terms.maxchains, r3.terms.n, r3.terms.maxx, r3.terms.minn, r3.terms.edges)
    elapsed = time.perf_counter() - t0
    ok = (
        terms2 == (6, 11, 2, 4, 11) and r2.gap == 0
        and terms3 == (8, 10, 3, 4, 9) and r3.gap == 2
        and d4.predicted_delta == d4.actual_delta == 2
    )
    record("C1 worked examples", ok,
           f"fig2 {terms2} gap {r2.gap}; fig3 {terms3} gap {r3.gap}; "
           f"delta {d4.predicted_delta}/{d4.actual_delta}; {elapsed * 1000:.1f} ms")
    assert terms2 == (6, 11, 2, 4, 11) and r2.gap == 0
    assert terms3 == (8, 10, 3, 4, 9) and r3.gap == 2
    assert d4.predicted_delta == d4.actual_delta == 2


# 2 and 3 -------------------------------------------------------------------------


@pytest.fixture(scope="module")
def exhaustive_five():
    t0 = time.perf_counter()
    report = verify_all(EnumerationConfig(max_n=5, workers=1))
    return report, time.perf_counter() - t0


@pytest.fixture(scope="module")
def exhaustive_six():
    t0 = time.perf_counter()
    report = verify_all(EnumerationConfig(max_n=6, workers=4))
    return report, time.perf_counter() - t0


def _exhaustive(label, report, sub):
    names = EXHAUSTIVE_SUBCHECKS[sub]
    fails = _failures(report, names)
    record(f"{label} {sub}", fails == 0, f"{fails} of {_instances(report, names)} instances fail")
    return fails


@pytest.mark.parametrize("sub", list(EXHAUSTIVE_SUBCHECKS))
def test_c2_exhaustive_up_to_five(exhaustive_five, sub):
    report, _ = exhaustive_five
    assert report.posets_checked == {1: 1, 2: 3, 3: 19, 4: 219, 5: 4231}
    assert sum(report.posets_checked.values()) == 4473
    fails = _exhaustive("C2 n<=5:", report, sub)
    assert fails == 0


def test_c2_runtime(exhaustive_five):
    report, elapsed = exhaustive_five
    total = sum(report.posets_checked.values())
    record("C2 n<=5: runtime under 10 s single-threaded", elapsed < 10, f"{elapsed:.1f} s, {total} posets")
    assert elapsed < 10


@pytest.mark.parametrize("sub", list(EXHAUSTIVE_SUBCHECKS))
def test_c3_exhaustive_six(exhaustive_six, sub):
    report, _ = exhaustive_six
    assert report.posets_checked[6] == 130023
    fails = _exhaustive("C3 n<=6:", report, sub)
    assert fails == 0


def test_c3_runtime(exhaustive_six):
    report, elapsed = exhaustive_six
    record("C3 n<=6: runtime under 5 min with 4 workers", elapsed < 300,
           f"{elapsed:.1f} s, {report.posets_checked[6]} posets at n=6")
    assert elapsed < 300


# 4 -----------------------------------------------------------------------------


def test_c4_enumeration_counts():
    counts = [count_posets(n) for n in range(2, 7)]
    ok = counts == [3, 19, 219, 4231, 130023]
    record("C4 labeled poset counts n=2..6", ok, f"{counts}")
    assert ok


# 5 -----------------------------------------------------------------------------


def test_c5_stalk_family():
    bad = []
    for k in range(1, 11):
        p = stalk_poset(k)
        r = gap(p)
        formula = 4 + (k + 4) - (2 + 2 + k + 3)
        terms_ok = (r.terms.maxchains, r.terms.n, r.terms.maxx, r.terms.minn, r.terms.edges) == (4, k + 4, 2, 2, k + 3)
        if not (r.gap == formula == 1 and terms_ok and classify(p).gap_class is GapClass.ONE):
            bad.append(k)
    record("C5 bare stalks k=1..10 have gap 1 and class One", not bad, f"failing k: {bad}" if bad else "")
    assert not bad


# 6 -----------------------------------------------------------------------------

SWEEP_SUBCHECKS = {
    "deletion delta": ["deletion_delta"],
    "antichain bounds, lower": ["antichain_lower_bound"],
    "antichain bounds, upper": ["antichain_upper_bound"],
    "gap 0 equivalence": ["gap_zero_equivalence"],
    "gap 1 equivalence": ["gap_one_equivalence"],
}


@pytest.fixture(scope="module")
def sweep():
    t0 = time.perf_counter()
    report = random_sweep(10_000, seed=2024, max_n=15)
    return report, time.perf_counter() - t0


@pytest.mark.parametrize("sub", list(SWEEP_SUBCHECKS))
def test_c6_random_sweep(sweep, sub):
    report, _ = sweep
    assert sum(report.posets_checked.values()) == 10_000
    assert max(report.posets_checked) <= 15
    names = SWEEP_SUBCHECKS[sub]
    fails = _failures(report, names)
    record(f"C6 random sweep: {sub}", fails == 0, f"{fails} of {_instances(report, names)} instances fail")
    assert fails == 0


def test_c6_union_and_dual():
    rng = random.Random(6)
    bad = 0
    t0 = time.perf_counter()
    for _ in range(1000):
        p = random_poset(rng.randint(1, 15), rng.uniform(0.05, 0.6), rng.getrandbits(63))
        q = random_poset(rng.randint(1, 15), rng.uniform(0.05, 0.6), rng.getrandbits(63))
        gp, gq = gap(p).gap, gap(q).gap
        if gap(disjoint_union(p, q)).gap != gp + gq or gap(dual(p)).gap != gp:
            bad += 1
    elapsed = time.perf_counter() - t0
    record("C6 gap additive over disjoint union and dual-invariant (1000 pairs)", bad == 0,
           f"{bad} failures, {elapsed:.1f} s")
    assert bad == 0


def test_c6_runtime(sweep):
    _, elapsed = sweep
    record("C6 random sweep runtime under 2 min", elapsed < 120, f"{elapsed:.1f} s")
    assert elapsed < 120


# 7 -----------------------------------------------------------------------------


def _round_trips(p):
    text = serialize_poset_text(p)
    doc = serialize_poset_json(p)
    a, b = parse_poset_text(text), parse_poset_json(doc)
    return (
        a == p and b == p
        and a.less_than == p.less_than and b.less_than == p.less_than
        and serialize_poset_text(a) == text and serialize_poset_json(b) == doc
    )


def test_c7_round_trips():
    exhaustive = [p for n in range(0, 6) for p in enumerate_posets(n)]
    rng = random.Random(7)
    randoms = [random_poset(rng.randint(1, 15), rng.uniform(0.0, 1.0), rng.getrandbits(63)) for _ in range(1000)]
    bad = sum(1 for p in exhaustive + randoms if not _round_trips(p))
    record("C7 text and JSON round trips", bad == 0,
           f"{len(exhaustive)} enumerated + {len(randoms)} random, {bad} failures")
    assert bad == 0
