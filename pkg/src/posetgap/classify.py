"""X-shaped subposets, X-orchids and classification by gap.

Every detector exists twice: once structurally, by searching for X-shaped
subposets directly, and once through crossing numbers.  The two routes share
no code beyond the poset itself, so their agreement is a meaningful check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .chains import ChainMetrics, compute_metrics
from .errors import TheoremViolation
from .gap import gap
from .poset import Poset, build_poset, iter_bits, popcount


@dataclass(frozen=True)
class XWitness:
    a: int
    b: int
    c: int
    d: int
    e: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e)


@dataclass(frozen=True)
class OrchidStalk:
    chain: tuple[int, ...]
    up_pair: tuple[int, int]
    down_pair: tuple[int, int]


class GapClass(enum.Enum):
    ZERO = "Zero"
    ONE = "One"
    AT_LEAST_TWO = "AtLeastTwo"


@dataclass(frozen=True)
class Classification:
    gap_class: GapClass
    gap: int
    x_witness: XWitness | None = None
    stalk: OrchidStalk | None = None


def _least_incomparable_pair(p: Poset, mask: int) -> tuple[int, int] | None:
    incomparable = p.incomparable
    for a in iter_bits(mask):
        partners = mask & incomparable[a] & ~((2 << a) - 1)
        if partners:
            return a, (partners & -partners).bit_length() - 1
    return None


def _has_incomparable_pair(p: Poset, mask: int) -> bool:
    incomparable = p.incomparable
    return any(mask & incomparable[a] for a in iter_bits(mask))


def is_x_center(p: Poset, c: int) -> bool:
    return _has_incomparable_pair(p, p.down[c]) and _has_incomparable_pair(p, p.up[c])


def x_centers(p: Poset) -> list[int]:
    """Elements that are the center of at least one X-shaped subposet."""
    return [c for c in range(p.n) if is_x_center(p, c)]


def find_x_witness(p: Poset, center: int | None = None) -> XWitness | None:
    """Least X-shaped subposet, ordered by (c, a, b, d, e) with a < b and d < e."""
    centers = range(p.n) if center is None else (center,)
    for c in centers:
        below = _least_incomparable_pair(p, p.down[c])
        if below is None:
            continue
        above = _least_incomparable_pair(p, p.up[c])
        if above is None:
            continue
        return XWitness(below[0], below[1], c, above[0], above[1])
    return None


def is_x_witness(p: Poset, w: XWitness) -> bool:
    a, b, c, d, e = w.as_tuple()
    if len({a, b, c, d, e}) != 5:
        return False
    return (
        p.lt(a, c) and p.lt(b, c) and p.lt(c, d) and p.lt(c, e)
        and not p.comparable(a, b) and not p.comparable(d, e)
    )


def is_x_avoiding(p: Poset) -> bool:
    return find_x_witness(p) is None


def is_x_avoiding_by_crossing(p: Poset, metrics: ChainMetrics | None = None) -> bool:
    if metrics is None:
        metrics = compute_metrics(p)
    return all(x == 0 for x in metrics.crossing)


def _saturated_chain(p: Poset, elements: list[int]) -> tuple[int, ...] | None:
    """``elements`` sorted bottom to top if they form a saturated chain."""
    ordered = sorted(elements, key=lambda v: popcount(p.down[v]))
    for lo, hi in zip(ordered, ordered[1:]):
        if not p.cover_up[lo] >> hi & 1:
            return None
    return tuple(ordered)


def _incomparable_pairs(p: Poset, mask: int):
    incomparable = p.incomparable
    for a in iter_bits(mask):
        for b in iter_bits(mask & incomparable[a] & ~((2 << a) - 1)):
            yield a, b


def find_orchid_stalk(p: Poset) -> OrchidStalk | None:
    """The stalk of ``p`` if ``p`` is an X-orchid.

    The X-centers must form a saturated chain c_1 < ... < c_k whose top is
    covered by exactly two elements and whose bottom covers exactly two, and
    every X-shaped subposet must survive swapping its center for any other
    c_j.  The last clause amounts to: the outer pairs of every X centered on
    the chain lie below c_1 and above c_k.
    """
    centers = x_centers(p)
    if not centers:
        return None
    chain = _saturated_chain(p, centers)
    if chain is None:
        return None
    bottom, top = chain[0], chain[-1]
    if popcount(p.cover_up[top]) != 2 or popcount(p.cover_down[bottom]) != 2:
        return None
    below_bottom, above_top = p.down[bottom], p.up[top]
    for c in chain:
        if any(not (below_bottom >> a & 1 and below_bottom >> b & 1)
               for a, b in _incomparable_pairs(p, p.down[c])):
            return None
        if any(not (above_top >> d & 1 and above_top >> e & 1)
               for d, e in _incomparable_pairs(p, p.up[c])):
            return None
    up_pair = tuple(iter_bits(p.cover_up[top]))
    down_pair = tuple(iter_bits(p.cover_down[bottom]))
    return OrchidStalk(chain, up_pair, down_pair)


def is_stalk(p: Poset, stalk: OrchidStalk) -> bool:
    """Re-check the stalk clauses of ``stalk`` against ``p`` from scratch."""
    chain = stalk.chain
    if not chain:
        return False
    if any(not p.cover_up[lo] >> hi & 1 for lo, hi in zip(chain, chain[1:])):
        return False
    up = sorted(stalk.up_pair)
    down = sorted(stalk.down_pair)
    covers_above = [w for w in range(p.n) if p.cover_up[chain[-1]] >> w & 1]
    covered_below = [u for u in range(p.n) if p.cover_down[chain[0]] >> u & 1]
    return up == covers_above and down == covered_below and len(up) == 2 and len(down) == 2


def is_x_orchid(p: Poset) -> bool:
    return find_orchid_stalk(p) is not None


def is_x_orchid_by_crossing(p: Poset, metrics: ChainMetrics | None = None) -> bool:
    """Crossing-one elements form a nonempty saturated chain; all others cross zero."""
    if metrics is None:
        metrics = compute_metrics(p)
    ones = [v for v, x in enumerate(metrics.crossing) if x == 1]
    if not ones:
        return False
    if any(x not in (0, 1) for x in metrics.crossing):
        return False
    return _saturated_chain(p, ones) is not None


def classify(p: Poset, metrics: ChainMetrics | None = None) -> Classification:
    if metrics is None:
        metrics = compute_metrics(p)
    g = gap(p, metrics).gap
    if g == 0:
        return Classification(GapClass.ZERO, g)
    witness = find_x_witness(p)
    if witness is None:
        raise TheoremViolation(f"gap {g} but no X-shaped subposet in {p!r}")
    if g == 1:
        stalk = find_orchid_stalk(p)
        if stalk is None:
            raise TheoremViolation(f"gap 1 but no orchid stalk in {p!r}")
        return Classification(GapClass.ONE, g, witness, stalk)
    return Classification(GapClass.AT_LEAST_TWO, g, witness)


def stalk_poset(k: int) -> Poset:
    """Bare stalk: chain c1 < ... < ck, d1, d2 below c1, u1, u2 above ck."""
    if k < 1:
        raise ValueError("a stalk needs at least one chain element")
    chain = [f"c{i}" for i in range(1, k + 1)]
    names = ["d1", "d2", *chain, "u1", "u2"]
    relations = [("d1", chain[0]), ("d2", chain[0]), *zip(chain, chain[1:]),
                 (chain[-1], "u1"), (chain[-1], "u2")]
    return build_poset(names, relations)
