"""Finite posets stored as strict-order bitmasks.

Element ``i`` is identified with bit ``1 << i``.  ``up[i]`` is the set of
elements strictly greater than ``i``; everything else (the down-sets, the
Hasse cover relation, the boolean matrices) is derived from it and cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CycleDetected, DuplicateLabel, IndexOutOfRange, SizeTooLarge, UnknownLabel

MAX_ELEMENTS = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _drop_bit(mask: int, v: int) -> int:
    low = mask & ((1 << v) - 1)
    return low | ((mask >> (v + 1)) << v)


def _close(up: Sequence[int]) -> tuple[list[int], int | None]:
    rows = list(up)
    n = len(rows)
    for k in range(n):
        bit = 1 << k
        row_k = rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= row_k
    for i in range(n):
        if rows[i] >> i & 1:
            return rows, i
    return rows, None


def transitive_closure(up: Sequence[int]) -> list[int]:
    """Warshall closure over bitmask rows; raises CycleDetected on i < i."""
    rows, bad = _close(up)
    if bad is not None:
        raise CycleDetected(f"element {bad} lies on a cycle")
    return rows


def transitive_reduction(up: Sequence[int]) -> list[int]:
    """Cover rows of a transitively closed relation."""
    covers = []
    for row in up:
        above = 0
        for j in iter_bits(row):
            above |= up[j]
        covers.append(row & ~above)
    return covers


@dataclass(frozen=True, eq=False)
class Poset:
    """Immutable finite poset.

    ``names`` are the element labels (index = position) and ``up[i]`` is the
    bitmask of elements strictly above ``i``.  Construct through
    :func:`build_poset` or :meth:`from_up`; the dataclass constructor trusts
    its input.
    """

    names: tuple[str, ...]
    up: tuple[int, ...]

    @classmethod
    def from_up(cls, names: Iterable[str], up: Iterable[int], *, check: bool = True) -> "Poset":
        names = tuple(names)
        up = tuple(up)
        if check:
            _check_names(names)
            if len(up) != len(names):
                raise ValueError("names and rows differ in length")
            full = (1 << len(names)) - 1
            if any(row & ~full for row in up):
                raise IndexOutOfRange("relation row refers to a missing element")
            if list(up) != transitive_closure(up):
                raise ValueError("rows are not transitively closed")
        return cls(names, up)

    def __len__(self) -> int:
        return len(self.up)

    @property
    def n(self) -> int:
        return len(self.up)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.names == other.names and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.names, self.up))

    def __repr__(self) -> str:
        pairs = ", ".join(f"{self.names[i]}<{self.names[j]}" for i, j in self.cover_pairs())
        return f"Poset([{', '.join(self.names)}]; {pairs})"

    @cached_property
    def down(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for i, row in enumerate(self.up):
            for j in iter_bits(row):
                rows[j] |= 1 << i
        return tuple(rows)

    @cached_property
    def cover_up(self) -> tuple[int, ...]:
        """``cover_up[i]``: elements that cover ``i``."""
        return tuple(transitive_reduction(self.up))

    @cached_property
    def cover_down(self) -> tuple[int, ...]:
        """``cover_down[i]``: elements covered by ``i``."""
        rows = [0] * self.n
        for i, row in enumerate(self.cover_up):
            for j in iter_bits(row):
                rows[j] |= 1 << i
        return tuple(rows)

    @cached_property
    def incomparable(self) -> tuple[int, ...]:
        full = (1 << self.n) - 1
        return tuple(full & ~(u | d | (1 << i)) for i, (u, d) in enumerate(zip(self.up, self.down)))

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Elements sorted so that every element precedes those above it."""
        return tuple(sorted(range(self.n), key=lambda i: (popcount(self.down[i]), i)))

    @property
    def less_than(self) -> tuple[tuple[bool, ...], ...]:
        return _matrix(self.up)

    @property
    def covers(self) -> tuple[tuple[bool, ...], ...]:
        return _matrix(self.cover_up)

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise UnknownLabel(label) from None

    def lt(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def comparable(self, i: int, j: int) -> bool:
        return i == j or self.lt(i, j) or self.lt(j, i)

    def relation_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.up) for j in iter_bits(row)]

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.cover_up) for j in iter_bits(row)]


def _matrix(rows: Sequence[int]) -> tuple[tuple[bool, ...], ...]:
    n = len(rows)
    return tuple(tuple(bool(row >> j & 1) for j in range(n)) for row in rows)


def _check_names(names: Sequence[str]) -> None:
    if len(names) > MAX_ELEMENTS:
        raise SizeTooLarge(f"{len(names)} elements exceeds the cap of {MAX_ELEMENTS}")
    seen = set()
    for name in names:
        if name in seen:
            raise DuplicateLabel(name)
        seen.add(name)


def build_poset(names: Sequence[str], relations: Iterable[tuple[str, str]]) -> Poset:
    """Close the given ``u < v`` pairs into a strict order on ``names``."""
    names = tuple(str(x) for x in names)
    _check_names(names)
    where = {name: i for i, name in enumerate(names)}
    rows = [0] * len(names)
    for u, v in relations:
        if u not in where:
            raise UnknownLabel(u)
        if v not in where:
            raise UnknownLabel(v)
        if u == v:
            raise CycleDetected(f"{u} < {u}")
        rows[where[u]] |= 1 << where[v]
    closed, bad = _close(rows)
    if bad is not None:
        raise CycleDetected(f"{names[bad]} lies on a cycle")
    return Poset(names, tuple(closed))


def delete_element(p: Poset, v: int) -> Poset:
    """Induced subposet on every element except ``v``."""
    if not 0 <= v < p.n:
        raise IndexOutOfRange(v)
    names = p.names[:v] + p.names[v + 1 :]
    up = tuple(_drop_bit(row, v) for i, row in enumerate(p.up) if i != v)
    return Poset(names, up)


def maximal_elements(p: Poset) -> set[int]:
    return {i for i, row in enumerate(p.up) if not row}


def minimal_elements(p: Poset) -> set[int]:
    return {i for i, row in enumerate(p.down) if not row}


def edge_count(p: Poset) -> int:
    return sum(popcount(row) for row in p.cover_up)


def dual(p: Poset) -> Poset:
    return Poset(p.names, p.down)


def disjoint_union(p: Poset, q: Poset) -> Poset:
    """Side-by-side union; clashing labels of ``q`` get primes appended."""
    taken = set(p.names)
    right = []
    for name in q.names:
        while name in taken:
            name += "'"
        taken.add(name)
        right.append(name)
    shift = p.n
    up = p.up + tuple(row << shift for row in q.up)
    return Poset.from_up(p.names + tuple(right), up, check=False)


def chain_poset(k: int, prefix: str = "c") -> Poset:
    names = [f"{prefix}{i}" for i in range(1, k + 1)]
    return build_poset(names, zip(names, names[1:]))


def antichain_poset(k: int, prefix: str = "a") -> Poset:
    return build_poset([f"{prefix}{i}" for i in range(1, k + 1)], [])


def x_poset() -> Poset:
    """The five-element X: a, b < c < d, e."""
    return build_poset("abcde", [("a", "c"), ("b", "c"), ("c", "d"), ("c", "e")])


def relabel(p: Poset, order: Sequence[int]) -> Poset:
    """Poset whose element ``k`` is ``p``'s element ``order[k]``."""
    position = {old: new for new, old in enumerate(order)}
    up = []
    for old in order:
        row = 0
        for j in iter_bits(p.up[old]):
            row |= 1 << position[j]
        up.append(row)
    return Poset(tuple(p.names[i] for i in order), tuple(up))
