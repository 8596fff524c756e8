"""Poset text and JSON documents, DOT export, and JSON views of results."""

from __future__ import annotations

import json
import re

from .chains import ChainMetrics
from .classify import Classification, OrchidStalk, XWitness
from .gap import BoundsReport, DeletionDelta, GapReport
from .errors import PosetSyntaxError
from .poset import Poset, build_poset

_BAD_LABEL = re.compile(r"[\s<#]")
_RELATION = re.compile(r"^([^\s<]+)\s*<\s*([^\s<]+)$")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_poset_text(text: str) -> Poset:
    """Parse ``elements: a b c`` followed by ``u < v`` lines.

    ``#`` starts a comment; blank lines are skipped.  Relations may be any
    strict-order pairs; the result is closed and reduced.
    """
    names = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if names is None:
            head, sep, rest = line.partition(":")
            if not sep or head.strip() != "elements":
                raise PosetSyntaxError(lineno, "expected 'elements: <labels>'")
            names = rest.split()
            continue
        match = _RELATION.match(line)
        if match is None:
            raise PosetSyntaxError(lineno, f"expected '<u> < <v>', got {line!r}")
        relations.append((match.group(1), match.group(2)))
    if names is None:
        raise PosetSyntaxError(max(1, len(text.splitlines())), "missing 'elements:' line")
    return build_poset(names, relations)


def _check_labels(p: Poset) -> None:
    for name in p.names:
        if not name or _BAD_LABEL.search(name):
            raise ValueError(f"label {name!r} cannot be written in the text format")


def serialize_poset_text(p: Poset) -> str:
    _check_labels(p)
    head = "elements:" + "".join(" " + name for name in p.names)
    lines = [head]
    lines.extend(f"{p.names[i]} < {p.names[j]}" for i, j in p.cover_pairs())
    return "\n".join(lines) + "\n"


def poset_document(p: Poset) -> dict:
    return {
        "elements": list(p.names),
        "relations": [[p.names[i], p.names[j]] for i, j in p.cover_pairs()],
    }


def serialize_poset_json(p: Poset) -> str:
    return json.dumps(poset_document(p), indent=2) + "\n"


def parse_poset_json(text: str) -> Poset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PosetSyntaxError(exc.lineno, exc.msg) from None
    if not isinstance(doc, dict) or "elements" not in doc:
        raise PosetSyntaxError(1, "expected an object with 'elements' and 'relations'")
    elements = doc["elements"]
    relations = doc.get("relations", [])
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise PosetSyntaxError(1, "'elements' must be a list of strings")
    pairs = []
    for pair in relations:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
            raise PosetSyntaxError(1, f"bad relation {pair!r}")
        pairs.append((pair[0], pair[1]))
    return build_poset(elements, pairs)


def parse_poset(text: str) -> Poset:
    """Dispatch on content: JSON objects start with ``{``."""
    if text.lstrip().startswith("{"):
        return parse_poset_json(text)
    return parse_poset_text(text)


def _escape(name: str) -> str:
    return name.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(p: Poset, annotations: ChainMetrics | None = None) -> str:
    """Hasse diagram as a DOT digraph, edges pointing from lower to upper."""
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=circle];"]
    for i, name in enumerate(p.names):
        label = _escape(name)
        if annotations is not None:
            label += (
                f"\\nuc={annotations.uc[i]} dc={annotations.dc[i]}"
                f" crossing={annotations.crossing[i]}"
            )
        lines.append(f'  "{_escape(name)}" [label="{label}"];')
    for i, j in p.cover_pairs():
        lines.append(f'  "{_escape(p.names[i])}" -> "{_escape(p.names[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# JSON views of results; elements are reported by label.


def gap_report_dict(report: GapReport) -> dict:
    t = report.terms
    return {
        "order_facets": report.order_facets,
        "chain_facets": report.chain_facets,
        "gap": report.gap,
        "terms": {"maxx": t.maxx, "minn": t.minn, "edges": t.edges, "maxchains": t.maxchains, "n": t.n},
    }


def metrics_dict(p: Poset, metrics: ChainMetrics) -> dict:
    return {
        "elements": [
            {"name": name, "uc": metrics.uc[i], "dc": metrics.dc[i], "crossing": metrics.crossing[i]}
            for i, name in enumerate(p.names)
        ],
        "total_maximal_chains": metrics.total_maximal_chains,
    }


def x_witness_dict(p: Poset, w: XWitness) -> dict:
    return {k: p.names[v] for k, v in zip("abcde", w.as_tuple())}


def stalk_dict(p: Poset, s: OrchidStalk) -> dict:
    return {
        "chain": [p.names[v] for v in s.chain],
        "up_pair": [p.names[v] for v in s.up_pair],
        "down_pair": [p.names[v] for v in s.down_pair],
    }


def classification_dict(p: Poset, c: Classification) -> dict:
    return {
        "gap_class": c.gap_class.value,
        "gap": c.gap,
        "x_witness": None if c.x_witness is None else x_witness_dict(p, c.x_witness),
        "stalk": None if c.stalk is None else stalk_dict(p, c.stalk),
    }


def bounds_dict(p: Poset, b: BoundsReport) -> dict:
    return {
        "antichain": [p.names[v] for v in b.antichain],
        "lower": b.lower,
        "upper": b.upper,
        "gap": b.gap,
        "holds": b.holds,
    }


def delta_dict(p: Poset, d: DeletionDelta) -> dict:
    return {
        "alpha": p.names[d.alpha],
        "betas": [p.names[v] for v in d.betas],
        "gammas": [p.names[v] for v in d.gammas],
        "beta_uc": list(d.beta_uc),
        "predicted_delta": d.predicted_delta,
        "actual_delta": d.actual_delta,
    }
