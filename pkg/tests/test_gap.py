import random

import pytest
from hypothesis import given

from conftest import posets
from oracles import gap_bruteforce, maximal_antichains_bruteforce
from posetgap.chains import compute_metrics
from posetgap.classify import stalk_poset
from posetgap.errors import IsIsolated, NotMinimal, TooManyAntichains
from posetgap.gap import (
    bounds,
    chain_polytope_facets,
    deletion_delta,
    enumerate_maximal_antichains,
    gap,
    order_polytope_facets,
    sample_maximal_antichains,
)
from posetgap.harness import enumerate_posets
from posetgap.poset import (
    antichain_poset,
    build_poset,
    chain_poset,
    delete_element,
    disjoint_union,
    dual,
    x_poset,
)


def test_facet_counts_of_figures(figures):
    f2, f3 = figures["x_avoiding"], figures["with_x"]
    assert order_polytope_facets(f2) == 17 and chain_polytope_facets(f2) == 17
    assert order_polytope_facets(f3) == 16 and chain_polytope_facets(f3) == 18


@pytest.mark.parametrize("n", [1, 2, 7])
def test_antichain_facets(n):
    p = antichain_poset(n)
    assert order_polytope_facets(p) == chain_polytope_facets(p) == 2 * n


def test_gap_reports(figures):
    r2 = gap(figures["x_avoiding"])
    assert (r2.terms.maxchains, r2.terms.n, r2.terms.maxx, r2.terms.minn, r2.terms.edges) == (6, 11, 2, 4, 11)
    assert r2.gap == 0
    r3 = gap(figures["with_x"])
    assert (r3.terms.maxchains, r3.terms.n, r3.terms.maxx, r3.terms.minn, r3.terms.edges) == (8, 10, 3, 4, 9)
    assert r3.gap == 2


def test_gap_of_x():
    r = gap(x_poset())
    assert (r.chain_facets, r.order_facets, r.gap) == (9, 8, 1)
    assert r.gap == gap_bruteforce(x_poset())


@pytest.mark.parametrize("k", range(1, 8))
def test_bare_stalk_has_gap_one(k):
    r = gap(stalk_poset(k))
    assert (r.terms.maxchains, r.terms.n) == (4, k + 4)
    assert (r.terms.maxx, r.terms.minn, r.terms.edges) == (2, 2, k + 3)
    assert r.gap == 1


def test_delta_of_figure4(figures):
    p = figures["deletion"]
    d = deletion_delta(p, p.index("alpha"))
    assert [p.names[v] for v in d.betas] == ["beta1", "beta2"]
    assert [p.names[v] for v in d.gammas] == ["gamma1", "gamma2"]
    assert d.beta_uc == (2, 2)
    assert d.predicted_delta == d.actual_delta == 2


def test_delta_bottom_of_two_chain():
    d = deletion_delta(chain_poset(2), 0)
    assert (len(d.betas), len(d.gammas), d.predicted_delta, d.actual_delta) == (0, 1, 0, 0)


def test_delta_of_x_at_a():
    x = x_poset()
    a = x.index("a")
    d = deletion_delta(x, a)
    assert [x.names[v] for v in d.betas] == ["c"] and d.gammas == ()
    assert d.beta_uc == (2,)
    oracle = gap_bruteforce(x) - gap_bruteforce(delete_element(x, a))
    assert d.predicted_delta == d.actual_delta == oracle == 1


def test_delta_preconditions():
    x = x_poset()
    with pytest.raises(NotMinimal):
        deletion_delta(x, x.index("c"))
    with pytest.raises(IsIsolated):
        deletion_delta(antichain_poset(2), 0)


def test_maximal_antichains_small():
    assert enumerate_maximal_antichains(antichain_poset(4)) == [(0, 1, 2, 3)]
    assert enumerate_maximal_antichains(chain_poset(3)) == [(0,), (1,), (2,)]
    x = x_poset()
    assert enumerate_maximal_antichains(x) == maximal_antichains_bruteforce(x) == [(0, 1), (2,), (3, 4)]


def test_antichain_cap():
    p = disjoint_union(chain_poset(2), disjoint_union(chain_poset(2), chain_poset(2)))
    assert len(enumerate_maximal_antichains(p)) == 8
    with pytest.raises(TooManyAntichains):
        enumerate_maximal_antichains(p, cap=7)


def test_sampled_antichains_are_maximal(figures):
    p = figures["with_x"]
    every = set(enumerate_maximal_antichains(p))
    sampled = sample_maximal_antichains(p, 200, random.Random(1))
    assert set(sampled) <= every
    assert set(sampled) == every  # 200 draws cover this small poset


def test_bounds_examples():
    for b in bounds(chain_poset(4)):
        assert (b.lower, b.gap, b.upper, b.holds) == (0, 0, 0, True)
    x = x_poset()
    by_set = {b.antichain: b for b in bounds(x)}
    assert (by_set[(2,)].lower, by_set[(2,)].upper, by_set[(2,)].gap) == (1, 3, 1)
    assert (by_set[(0, 1)].lower, by_set[(0, 1)].upper) == (0, 2)


def test_upper_bound_fails_on_eight_points():
    # v4, v5, v6 < v7 < v0, v1; v5 < v2; v6 < v3
    p = build_poset(
        [f"v{i}" for i in range(8)],
        [("v4", "v7"), ("v5", "v7"), ("v6", "v7"), ("v7", "v0"), ("v7", "v1"), ("v5", "v2"), ("v6", "v3")],
    )
    assert gap(p).gap == gap_bruteforce(p) == 2
    by_set = {b.antichain: b for b in bounds(p)}
    b = by_set[(2, 3, 4)]
    assert (b.lower, b.upper, b.holds) == (0, 1, False)
    # the lower bound is untouched
    assert all(r.lower <= r.gap for r in by_set.values())


def test_gap_matches_bruteforce_and_delta_exhaustive():
    for n in range(1, 6):
        for p in enumerate_posets(n):
            m = compute_metrics(p)
            g = gap(p, m).gap
            assert g == gap_bruteforce(p) >= 0
            for alpha in range(n):
                if p.down[alpha] or not p.up[alpha]:
                    continue
                d = deletion_delta(p, alpha, m)
                assert d.predicted_delta == d.actual_delta
                assert d.predicted_delta == g - gap_bruteforce(delete_element(p, alpha))
                assert d.beta_uc == d.beta_uc_without_alpha
                assert set(d.betas) | set(d.gammas) == {w for w in range(n) if p.cover_up[alpha] >> w & 1}
                assert not set(d.betas) & set(d.gammas)


def test_bounds_exhaustive_small():
    for n in range(1, 6):
        for p in enumerate_posets(n):
            assert all(b.holds and b.lower <= b.upper for b in bounds(p))


@given(posets(max_n=7), posets(max_n=7))
def test_gap_additive_over_disjoint_union(p, q):
    assert gap(disjoint_union(p, q)).gap == gap(p).gap + gap(q).gap


@given(posets())
def test_gap_dual_invariant(p):
    assert gap(dual(p)).gap == gap(p).gap


@given(posets())
def test_isolated_element_leaves_gap(p):
    assert gap(disjoint_union(p, antichain_poset(1, prefix="iso"))).gap == gap(p).gap


@given(posets())
def test_lower_not_above_upper(p):
    for b in bounds(p):
        assert b.lower <= b.upper
