"""Facet counts of the order and chain polytopes, their gap, and its bounds."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import config
from .chains import ChainMetrics, compute_metrics
from .errors import IndexOutOfRange, IsIsolated, NotMinimal, TooManyAntichains
from .poset import Poset, delete_element, edge_count, iter_bits, popcount


@dataclass(frozen=True)
class GapTerms:
    maxx: int
    minn: int
    edges: int
    maxchains: int
    n: int


@dataclass(frozen=True)
class GapReport:
    order_facets: int
    chain_facets: int
    # signed on purpose: a negative value must be observable, not clamped
    gap: int
    terms: GapTerms


@dataclass(frozen=True)
class BoundsReport:
    antichain: tuple[int, ...]
    lower: int
    upper: int
    gap: int
    holds: bool


@dataclass(frozen=True)
class DeletionDelta:
    alpha: int
    betas: tuple[int, ...]
    gammas: tuple[int, ...]
    beta_uc: tuple[int, ...]
    beta_uc_without_alpha: tuple[int, ...]
    predicted_delta: int
    actual_delta: int


def gap_terms(p: Poset, metrics: ChainMetrics | None = None) -> GapTerms:
    if metrics is None:
        metrics = compute_metrics(p)
    return GapTerms(
        maxx=sum(1 for row in p.up if not row),
        minn=sum(1 for row in p.down if not row),
        edges=edge_count(p),
        maxchains=metrics.total_maximal_chains,
        n=p.n,
    )


def order_polytope_facets(p: Poset) -> int:
    t = gap_terms(p)
    return t.maxx + t.minn + t.edges


def chain_polytope_facets(p: Poset) -> int:
    return compute_metrics(p).total_maximal_chains + p.n


def gap(p: Poset, metrics: ChainMetrics | None = None) -> GapReport:
    t = gap_terms(p, metrics)
    order_facets = t.maxx + t.minn + t.edges
    chain_facets = t.maxchains + t.n
    return GapReport(order_facets, chain_facets, chain_facets - order_facets, t)


def deletion_delta(p: Poset, alpha: int, metrics: ChainMetrics | None = None) -> DeletionDelta:
    """Change of the gap when the minimal, non-maximal ``alpha`` is removed.

    The upper covers of ``alpha`` split into those covering nothing else
    (they become minimal once ``alpha`` is gone) and those covering at least
    one more element.  Only the latter change the gap, each by its number of
    maximal chains above minus one.
    """
    if not 0 <= alpha < p.n:
        raise IndexOutOfRange(alpha)
    if p.down[alpha]:
        raise NotMinimal(p.names[alpha])
    if not p.up[alpha]:
        raise IsIsolated(p.names[alpha])
    if metrics is None:
        metrics = compute_metrics(p)
    betas, gammas = [], []
    for w in iter_bits(p.cover_up[alpha]):
        (betas if popcount(p.cover_down[w]) >= 2 else gammas).append(w)
    rest = delete_element(p, alpha)
    rest_metrics = compute_metrics(rest)
    beta_uc = tuple(metrics.uc[b] for b in betas)
    beta_uc_rest = tuple(rest_metrics.uc[b - (b > alpha)] for b in betas)
    predicted = sum(beta_uc) - len(betas)
    actual = gap(p, metrics).gap - gap(rest, rest_metrics).gap
    return DeletionDelta(alpha, tuple(betas), tuple(gammas), beta_uc, beta_uc_rest, predicted, actual)


def enumerate_maximal_antichains(p: Poset, cap: int | None = None) -> list[tuple[int, ...]]:
    """Maximal antichains as maximal cliques of the incomparability graph.

    Bron-Kerbosch with Tomita pivoting over bitmasks; results are returned
    sorted as increasing index tuples.
    """
    if cap is None:
        cap = config.antichain_cap()
    nbr = p.incomparable
    found: list[int] = []

    def expand(clique: int, cand: int, excl: int) -> None:
        if not cand and not excl:
            if len(found) >= cap:
                raise TooManyAntichains(f"more than {cap} maximal antichains")
            found.append(clique)
            return
        pivot_pool = cand | excl
        pivot = max(iter_bits(pivot_pool), key=lambda u: popcount(cand & nbr[u]))
        for v in iter_bits(cand & ~nbr[pivot]):
            bit = 1 << v
            expand(clique | bit, cand & nbr[v], excl & nbr[v])
            cand &= ~bit
            excl |= bit

    if p.n:
        expand(0, (1 << p.n) - 1, 0)
    return sorted(tuple(iter_bits(c)) for c in found)


def sample_maximal_antichains(p: Poset, count: int, rng: random.Random) -> list[tuple[int, ...]]:
    """Greedy random maximal antichains, duplicates removed."""
    seen = set()
    order = list(range(p.n))
    for _ in range(count):
        rng.shuffle(order)
        chosen = 0
        allowed = (1 << p.n) - 1
        for v in order:
            if allowed >> v & 1:
                chosen |= 1 << v
                allowed &= p.incomparable[v]
        seen.add(tuple(iter_bits(chosen)))
    return sorted(seen)


def bound_for(antichain: tuple[int, ...], metrics: ChainMetrics, gap_value: int) -> BoundsReport:
    lower = sum(metrics.crossing[v] for v in antichain)
    upper = sum(metrics.uc[v] * metrics.dc[v] - 1 for v in antichain)
    return BoundsReport(tuple(antichain), lower, upper, gap_value, lower <= gap_value <= upper)


def bounds(p: Poset, cap: int | None = None) -> list[BoundsReport]:
    metrics = compute_metrics(p)
    g = gap(p, metrics).gap
    return [bound_for(a, metrics, g) for a in enumerate_maximal_antichains(p, cap)]
