"""Counting maximal chains above and below each element."""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .errors import TooManyChains
from .poset import Poset, iter_bits


@dataclass(frozen=True)
class ChainMetrics:
    uc: tuple[int, ...]
    dc: tuple[int, ...]
    crossing: tuple[int, ...]
    total_maximal_chains: int


def count_up(p: Poset) -> list[int]:
    """Maximal chains above each element (saturated, ending at a maximal element)."""
    uc = [1] * p.n
    cover_up = p.cover_up
    for v in reversed(p.linear_extension):
        row = cover_up[v]
        if row:
            uc[v] = sum(uc[w] for w in iter_bits(row))
    return uc


def count_down(p: Poset) -> list[int]:
    dc = [1] * p.n
    cover_down = p.cover_down
    for v in p.linear_extension:
        row = cover_down[v]
        if row:
            dc[v] = sum(dc[u] for u in iter_bits(row))
    return dc


def compute_metrics(p: Poset) -> ChainMetrics:
    uc = count_up(p)
    dc = count_down(p)
    crossing = tuple((u - 1) * (d - 1) for u, d in zip(uc, dc))
    total = sum(uc[v] for v, row in enumerate(p.down) if not row)
    return ChainMetrics(tuple(uc), tuple(dc), crossing, total)


def chains_through(metrics: ChainMetrics, v: int) -> int:
    return metrics.uc[v] * metrics.dc[v]


def enumerate_maximal_chains(p: Poset, cap: int | None = None) -> list[list[int]]:
    """All maximal chains, bottom to top, in lexicographic order of index sequence.

    Walks the Hasse diagram depth first, so it shares nothing with the
    counting recursions above and can serve as their oracle.
    """
    if cap is None:
        cap = config.chain_cap()
    chains: list[list[int]] = []
    cover_up = p.cover_up
    path: list[int] = []

    def walk(v: int) -> None:
        path.append(v)
        row = cover_up[v]
        if not row:
            if len(chains) >= cap:
                raise TooManyChains(f"more than {cap} maximal chains")
            chains.append(list(path))
        else:
            for w in iter_bits(row):
                walk(w)
        path.pop()

    for m in range(p.n):
        if not p.down[m]:
            walk(m)
    return chains
