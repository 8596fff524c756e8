"""Exhaustive and random poset generation plus the theorem-checking harness."""

from __future__ import annotations

import enum
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .chains import compute_metrics, enumerate_maximal_chains
from .classify import (
    find_orchid_stalk,
    find_x_witness,
    is_stalk,
    is_x_center,
    is_x_orchid_by_crossing,
    is_x_witness,
)
from .errors import SizeTooLarge, TooManyAntichains, TooManyChains
from .gap import (
    bound_for,
    deletion_delta,
    enumerate_maximal_antichains,
    gap,
    sample_maximal_antichains,
)
from .formats import serialize_poset_text
from .poset import Poset, iter_bits, popcount, transitive_closure

LABELED_MAX_N = 7
CANONICAL_MAX_N = 6
CANONICAL_FORM_MAX_N = 8

# OEIS A001035: labeled posets on n points.
LABELED_POSET_COUNTS = (1, 1, 3, 19, 219, 4231, 130023, 6129859)
# OEIS A000112: unlabeled posets on n points.
UNLABELED_POSET_COUNTS = (1, 1, 2, 5, 16, 63, 318, 2045)

# Tallied like any other check but never reported as a violation: the
# identity fails whenever some maximal chain misses the antichain (the
# four-element N is the smallest case).  "antichain_chain_count" holds its
# correct form.
INFORMATIONAL_CHECKS = frozenset({"antichain_chain_identity"})

CHECKS = (
    "deletion_delta",
    "deletion_uc_agreement",
    "antichain_lower_bound",
    "antichain_upper_bound",
    "antichain_chain_count",
    "antichain_chain_identity",
    "metrics_oracle",
    "gap_nonnegative",
    "gap_zero_equivalence",
    "gap_one_equivalence",
    "witness_soundness",
    "center_crossing",
)


class Dedupe(enum.Enum):
    LABELED = "labeled"
    CANONICAL = "canonical"


@dataclass(frozen=True)
class EnumerationConfig:
    max_n: int
    dedupe: Dedupe = Dedupe.LABELED
    seed: int = 0
    count: int = 0
    edge_probability: float = 0.3
    workers: int = 1

    def __post_init__(self):
        if self.max_n < 1:
            raise ValueError("max_n must be at least 1")
        if not 0.0 <= self.edge_probability <= 1.0:
            raise ValueError("edge_probability must lie in [0, 1]")


@dataclass
class VerificationReport:
    posets_checked: dict[int, int] = field(default_factory=dict)
    checks_run: dict[str, dict[str, int]] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    counterexamples: dict[str, list[dict]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "VerificationReport") -> None:
        for n, k in other.posets_checked.items():
            self.posets_checked[n] = self.posets_checked.get(n, 0) + k
        for name, tally in other.checks_run.items():
            mine = self.checks_run.setdefault(name, {"pass": 0, "fail": 0})
            mine["pass"] += tally["pass"]
            mine["fail"] += tally["fail"]
        self.violations.extend(other.violations)
        for name, found in other.counterexamples.items():
            mine = self.counterexamples.setdefault(name, [])
            mine.extend(found[: _KEEP_COUNTEREXAMPLES - len(mine)])

    def finalize(self) -> "VerificationReport":
        self.posets_checked = dict(sorted(self.posets_checked.items()))
        self.checks_run = {name: self.checks_run[name] for name in sorted(self.checks_run)}
        self.violations.sort(key=lambda v: (v["check"], v["poset"], v["details"]))
        return self

    def to_dict(self) -> dict:
        return {
            "posets_checked": {str(n): k for n, k in self.posets_checked.items()},
            "checks_run": self.checks_run,
            "violations": self.violations,
            "informational": {
                name: {"tally": self.checks_run.get(name, {"pass": 0, "fail": 0}),
                       "counterexamples": self.counterexamples.get(name, [])}
                for name in sorted(INFORMATIONAL_CHECKS)
            },
        }

    def to_text(self) -> str:
        lines = ["posets checked:"]
        for n, k in self.posets_checked.items():
            lines.append(f"  n={n}: {k}")
        lines.append(f"  total: {sum(self.posets_checked.values())}")
        lines.append("checks:")
        for name, tally in self.checks_run.items():
            note = " (informational)" if name in INFORMATIONAL_CHECKS else ""
            lines.append(f"  {name}: {tally['pass']} passed, {tally['fail']} failed{note}")
        lines.append(f"violations: {len(self.violations)}")
        for v in self.violations[:20]:
            lines.append(f"  [{v['check']}] {v['details']}")
            lines.append("    " + v["poset"].replace("\n", "\n    ").rstrip())
        return "\n".join(lines)


# --- enumeration -------------------------------------------------------------


def _closed_sets(rows: tuple[int, ...]) -> list[int]:
    """Subsets S with rows[s] inside S for every s in S."""
    n = len(rows)
    out = []
    for mask in range(1 << n):
        if all(rows[s] & ~mask == 0 for s in iter_bits(mask)):
            out.append(mask)
    return out


def _extensions(up: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Every poset on n+1 labeled points whose first n points induce ``up``.

    The new point gets a down-set D (an order ideal) and an up-set U (an
    order filter) such that everything in D lies below everything in U.
    """
    n = len(up)
    down = [0] * n
    for i, row in enumerate(up):
        for j in iter_bits(row):
            down[j] |= 1 << i
    ideals = _closed_sets(tuple(down))
    filters = _closed_sets(up)
    full = (1 << n) - 1
    new_bit = 1 << n
    for ideal in ideals:
        common = full
        for d in iter_bits(ideal):
            common &= up[d]
        for flt in filters:
            if flt & ~common:
                continue
            rows = list(up)
            for d in iter_bits(ideal):
                rows[d] |= new_bit | flt
            rows.append(flt)
            yield tuple(rows)


def _labeled_rows(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for parent in _labeled_rows(n - 1):
        yield from _extensions(parent)


def _default_names(n: int) -> tuple[str, ...]:
    return tuple(f"v{i}" for i in range(n))


def enumerate_posets(n: int, dedupe: Dedupe = Dedupe.LABELED) -> Iterator[Poset]:
    """Every poset on ``n`` points, labeled or one per isomorphism class."""
    dedupe = Dedupe(dedupe)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if dedupe is Dedupe.LABELED:
        if n > LABELED_MAX_N:
            raise SizeTooLarge(f"labeled enumeration is capped at n={LABELED_MAX_N}")
        names = _default_names(n)
        for rows in _labeled_rows(n):
            yield Poset(names, rows)
        return
    if n > CANONICAL_MAX_N:
        raise SizeTooLarge(f"canonical enumeration is capped at n={CANONICAL_MAX_N}")
    names = _default_names(n)
    for rows in _canonical_rows(n):
        yield Poset(names, rows)


def _canonical_rows(n: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    seen = set()
    out = []
    names = _default_names(n)
    for parent in _canonical_rows(n - 1):
        for rows in _extensions(parent):
            key = canonical_form(Poset(names, rows))
            if key not in seen:
                seen.add(key)
                out.append(rows)
    return out


def canonical_form(p: Poset) -> bytes:
    """Byte string shared exactly by the posets isomorphic to ``p``.

    Lexicographic minimum of the row-major strict-order matrix over all
    relabelings that list elements in increasing order of an isomorphism
    invariant (sizes of down-set, up-set and cover neighbourhoods).
    Restricting to those relabelings keeps the minimum a complete invariant
    while pruning most permutations.
    """
    n = p.n
    if n > CANONICAL_FORM_MAX_N:
        raise SizeTooLarge(f"canonical form is capped at n={CANONICAL_FORM_MAX_N}")
    key = [
        (popcount(p.down[i]), popcount(p.up[i]), popcount(p.cover_down[i]), popcount(p.cover_up[i]))
        for i in range(n)
    ]
    cells = [list(g) for _, g in itertools.groupby(sorted(range(n), key=key.__getitem__), key=key.__getitem__)]
    best = None
    for parts in itertools.product(*(itertools.permutations(cell) for cell in cells)):
        order = [i for part in parts for i in part]
        position = [0] * n
        for new, old in enumerate(order):
            position[old] = new
        value = 0
        for old in order:
            row = p.up[old]
            bits = 0
            for j in iter_bits(row):
                bits |= 1 << (n - 1 - position[j])
            value = (value << n) | bits
        if best is None or value < best:
            best = value
    width = (n * n + 7) // 8
    return bytes([n]) + best.to_bytes(width, "big") if n else bytes([0])


def random_poset(n: int, edge_probability: float, seed: int) -> Poset:
    """Random poset from an upper-triangular relation under a random relabeling.

    Each pair of positions i < j in a uniformly shuffled order is related with
    probability ``edge_probability``; the result is transitively closed.
    """
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge_probability must lie in [0, 1]")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                rows[perm[i]] |= 1 << perm[j]
    return Poset.from_up(_default_names(n), transitive_closure(rows), check=False)


# --- checks ------------------------------------------------------------------


_KEEP_COUNTEREXAMPLES = 5


class _Tally:
    def __init__(self, p: Poset, report: VerificationReport):
        self.p = p
        self.report = report

    def record(self, name: str, ok: bool, details: str = "") -> None:
        tally = self.report.checks_run.setdefault(name, {"pass": 0, "fail": 0})
        if ok:
            tally["pass"] += 1
        else:
            tally["fail"] += 1
            entry = {"check": name, "poset": serialize_poset_text(self.p), "details": details}
            if name in INFORMATIONAL_CHECKS:
                found = self.report.counterexamples.setdefault(name, [])
                if len(found) < _KEEP_COUNTEREXAMPLES:
                    found.append(entry)
            else:
                self.report.violations.append(entry)


def check_poset(
    p: Poset,
    report: VerificationReport | None = None,
    *,
    oracle: bool = True,
    antichain_cap: int | None = None,
    chain_cap: int | None = None,
    sample_seed: int = 0,
    samples: int = 64,
) -> VerificationReport:
    """Run every identity and equivalence on ``p``, tallying into ``report``.

    With ``oracle`` set, maximal chains are enumerated explicitly to confirm
    the counted ones.  When the antichain enumeration exceeds its cap, a
    sample of random maximal antichains is checked instead.
    """
    if report is None:
        report = VerificationReport()
    report.posets_checked[p.n] = report.posets_checked.get(p.n, 0) + 1
    t = _Tally(p, report)
    metrics = compute_metrics(p)
    g = gap(p, metrics).gap
    t.record("gap_nonnegative", g >= 0, f"gap={g}")

    for alpha in range(p.n):
        if p.down[alpha] or not p.up[alpha]:
            continue
        delta = deletion_delta(p, alpha, metrics)
        t.record(
            "deletion_delta",
            delta.predicted_delta == delta.actual_delta,
            f"alpha={p.names[alpha]} predicted={delta.predicted_delta} actual={delta.actual_delta}",
        )
        t.record(
            "deletion_uc_agreement",
            delta.beta_uc == delta.beta_uc_without_alpha,
            f"alpha={p.names[alpha]} uc={delta.beta_uc} without={delta.beta_uc_without_alpha}",
        )

    chains = None
    if oracle:
        try:
            chains = enumerate_maximal_chains(p, chain_cap)
        except TooManyChains:
            pass
        if chains is not None:
            t.record("metrics_oracle", _oracle_agrees(p, metrics, chains), "uc/dc/total differ from enumeration")

    try:
        antichains = enumerate_maximal_antichains(p, antichain_cap)
    except TooManyAntichains:
        antichains = sample_maximal_antichains(p, samples, random.Random(sample_seed))
    chain_masks = None if chains is None else [sum(1 << v for v in c) for c in chains]
    total = metrics.total_maximal_chains
    for a in antichains:
        b = bound_for(a, metrics, g)
        label = "{" + ",".join(p.names[v] for v in a) + "}"
        span = f"A={label} lower={b.lower} gap={g} upper={b.upper}"
        t.record("antichain_lower_bound", b.lower <= g, span)
        t.record("antichain_upper_bound", g <= b.upper, span)
        through = sum(metrics.uc[v] * metrics.dc[v] for v in a)
        counted_ok = through <= total
        detail = f"A={label} sum={through} maxchains={total}"
        if chain_masks is not None:
            a_mask = sum(1 << v for v in a)
            meeting = sum(1 for m in chain_masks if m & a_mask)
            counted_ok = counted_ok and through == meeting
            detail += f" chains_meeting_A={meeting}"
        t.record("antichain_chain_count", counted_ok, detail)
        t.record("antichain_chain_identity", through == total, detail)

    witness = find_x_witness(p)
    crossing_zero = all(x == 0 for x in metrics.crossing)
    zero_ok = (g == 0) == (witness is None) == crossing_zero
    t.record(
        "gap_zero_equivalence",
        zero_ok,
        f"gap={g} witness={witness is not None} all_crossing_zero={crossing_zero}",
    )

    stalk = find_orchid_stalk(p)
    by_crossing = is_x_orchid_by_crossing(p, metrics)
    one_ok = (g == 1) == (stalk is not None) == by_crossing
    t.record("gap_one_equivalence", one_ok, f"gap={g} stalk={stalk is not None} crossing_chain={by_crossing}")

    sound = (witness is None or is_x_witness(p, witness)) and (stalk is None or is_stalk(p, stalk))
    t.record("witness_soundness", sound, f"witness={witness} stalk={stalk}")

    mismatched = [
        p.names[v] for v in range(p.n)
        if is_x_center(p, v) != (metrics.uc[v] >= 2 and metrics.dc[v] >= 2)
    ]
    t.record("center_crossing", not mismatched, f"elements={mismatched}")
    return report


def _oracle_agrees(p: Poset, metrics, chains: list[list[int]]) -> bool:
    if len(chains) != metrics.total_maximal_chains:
        return False
    ups: list[set] = [set() for _ in range(p.n)]
    downs: list[set] = [set() for _ in range(p.n)]
    for chain in chains:
        for k, v in enumerate(chain):
            ups[v].add(tuple(chain[k:]))
            downs[v].add(tuple(chain[: k + 1]))
    uc = tuple(len(s) for s in ups)
    dc = tuple(len(s) for s in downs)
    return uc == metrics.uc and dc == metrics.dc


# --- verification driver -------------------------------------------------------

_CHUNK = 2000


def _check_chunk(job: tuple[int, list[tuple[int, ...]]]) -> VerificationReport:
    n, rows_list = job
    names = _default_names(n)
    report = VerificationReport()
    for rows in rows_list:
        check_poset(Poset(names, rows), report)
    return report


def _jobs(cfg: EnumerationConfig) -> Iterator[tuple[int, list[tuple[int, ...]]]]:
    for n in range(1, cfg.max_n + 1):
        batch: list[tuple[int, ...]] = []
        for p in enumerate_posets(n, cfg.dedupe):
            batch.append(p.up)
            if len(batch) >= _CHUNK:
                yield n, batch
                batch = []
        if batch:
            yield n, batch


def verify_all(cfg: EnumerationConfig) -> VerificationReport:
    """Check every poset with 1..max_n points; the merged report is order independent."""
    report = VerificationReport()
    for name in CHECKS:
        report.checks_run[name] = {"pass": 0, "fail": 0}
    if cfg.workers <= 1:
        for job in _jobs(cfg):
            report.merge(_check_chunk(job))
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            for part in pool.map(_check_chunk, _jobs(cfg)):
                report.merge(part)
    return report.finalize()


def random_sweep(
    count: int,
    seed: int,
    *,
    max_n: int = 15,
    edge_probability: float | None = None,
    oracle: bool = True,
) -> VerificationReport:
    """Check ``count`` seeded random posets of 1..max_n points.

    Without a fixed ``edge_probability`` each poset draws its own from
    [0.05, 0.6], which covers sparse forests through near-chains.
    """
    rng = random.Random(seed)
    report = VerificationReport()
    for _ in range(count):
        n = rng.randint(1, max_n)
        prob = edge_probability if edge_probability is not None else rng.uniform(0.05, 0.6)
        p = random_poset(n, prob, rng.getrandbits(63))
        check_poset(p, report, oracle=oracle, sample_seed=rng.getrandbits(32))
    return report.finalize()


def count_posets(n: int, dedupe: Dedupe = Dedupe.LABELED) -> int:
    return sum(1 for _ in enumerate_posets(n, dedupe))
