"""Facet-count gap between the chain polytope and the order polytope of a poset.

Both facet counts have closed combinatorial forms, so everything here works
on the poset's Hasse diagram; no polytope is ever built.
"""

from .chains import ChainMetrics, chains_through, compute_metrics, enumerate_maximal_chains
from .classify import (
    Classification,
    GapClass,
    OrchidStalk,
    XWitness,
    classify,
    find_orchid_stalk,
    find_x_witness,
    is_x_avoiding,
    is_x_avoiding_by_crossing,
    is_x_orchid,
    is_x_orchid_by_crossing,
    stalk_poset,
)
from .errors import (
    CycleDetected,
    DuplicateLabel,
    IndexOutOfRange,
    IsIsolated,
    NotMinimal,
    PosetError,
    PosetSyntaxError,
    SizeTooLarge,
    TheoremViolation,
    TooManyAntichains,
    TooManyChains,
    UnknownLabel,
)
from .formats import export_dot, parse_poset, parse_poset_json, parse_poset_text, serialize_poset_json, serialize_poset_text
from .gap import (
    BoundsReport,
    DeletionDelta,
    GapReport,
    bounds,
    chain_polytope_facets,
    deletion_delta,
    enumerate_maximal_antichains,
    gap,
    order_polytope_facets,
)
from .harness import Dedupe, EnumerationConfig, VerificationReport, canonical_form, enumerate_posets, random_poset, verify_all
from .poset import (
    Poset,
    antichain_poset,
    build_poset,
    chain_poset,
    delete_element,
    disjoint_union,
    dual,
    edge_count,
    maximal_elements,
    minimal_elements,
    x_poset,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "ChainMetrics",
    "Classification",
    "CycleDetected",
    "Dedupe",
    "DeletionDelta",
    "DuplicateLabel",
    "EnumerationConfig",
    "GapClass",
    "GapReport",
    "IndexOutOfRange",
    "IsIsolated",
    "NotMinimal",
    "OrchidStalk",
    "Poset",
    "PosetError",
    "PosetSyntaxError",
    "SizeTooLarge",
    "TheoremViolation",
    "TooManyAntichains",
    "TooManyChains",
    "UnknownLabel",
    "VerificationReport",
    "XWitness",
    "antichain_poset",
    "bounds",
    "build_poset",
    "canonical_form",
    "chain_polytope_facets",
    "chain_poset",
    "chains_through",
    "classify",
    "compute_metrics",
    "delete_element",
    "deletion_delta",
    "disjoint_union",
    "dual",
    "edge_count",
    "enumerate_maximal_antichains",
    "enumerate_maximal_chains",
    "enumerate_posets",
    "export_dot",
    "find_orchid_stalk",
    "find_x_witness",
    "gap",
    "is_x_avoiding",
    "is_x_avoiding_by_crossing",
    "is_x_orchid",
    "is_x_orchid_by_crossing",
    "maximal_elements",
    "minimal_elements",
    "order_polytope_facets",
    "parse_poset",
    "parse_poset_json",
    "parse_poset_text",
    "random_poset",
    "serialize_poset_json",
    "serialize_poset_text",
    "stalk_poset",
    "verify_all",
    "x_poset",
]
