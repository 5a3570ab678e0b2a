"""Parsers and writers for hypergraph, reaction, and weighted-document files.

Three input formats:

* hyperedge lines (``.uhg``): one hyperedge per line, whitespace-separated
  vertex tokens; blank lines and ``#`` comments are skipped
* reaction lines (``.rxn``): ``[coef] species (+ [coef] species)* (->|<->)
  ...``; ``<->`` expands to a forward arc followed by a backward arc
* weighted documents: JSON with a vertex list (label, weight) and a
  hyperedge list (member labels, weight); omitted weights default to 1

Stoichiometric coefficients are accepted and kept on the parsed reaction
lines but never affect topology.  Vertex tokens may not contain commas so
the CSV writers stay quote-free.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass

from .core import (
    DirectedHypergraph,
    UndirectedHypergraph,
    WeightOverlay,
    build_directed,
    build_undirected,
)
from .curvature import CurvatureRecord

__all__ = [
    "ParseError",
    "ReactionLine",
    "parse_undirected",
    "parse_reaction_lines",
    "parse_reactions",
    "parse_weighted",
    "write_records",
    "write_undirected_lines",
    "write_reaction_lines",
    "write_weighted_document",
    "UNDIRECTED_HEADER",
    "DIRECTED_HEADER",
]

FORWARD = "->"
REVERSIBLE = "<->"

UNDIRECTED_HEADER = "edge_index,size,degree_sum,F"
DIRECTED_HEADER = (
    "edge_index,tail_size,head_size,"
    "sum_in_tail,sum_out_tail,sum_in_head,sum_out_head,"
    "F_in,F_out,F_through,F_loss_tail,F_loss_head,F_loss,F_total"
)


class ParseError(ValueError):
    """Input rejected; carries the 1-based source line when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True)
class ReactionLine:
    """One parsed reaction; coefficients kept but topology-irrelevant."""

    raw: str
    line_number: int
    educts: tuple[tuple[float | None, str], ...]
    arrow: str
    products: tuple[tuple[float | None, str], ...]

    @property
    def reversible(self) -> bool:
        return self.arrow == REVERSIBLE


def _usable_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def _check_token(token: str, line: int) -> str:
    if "," in token:
        raise ParseError(f"vertex token {token!r} contains a comma", line)
    return token


def parse_undirected(text: str) -> UndirectedHypergraph:
    """One hyperedge per usable line; line order fixes the edge indices."""
    edge_lists = []
    for number, line in _usable_lines(text):
        edge_lists.append([_check_token(t, number) for t in line.split()])
    if not edge_lists:
        raise ParseError("no usable hyperedge lines in input")
    return build_undirected(edge_lists)


def _parse_species(tokens: list[str], side: str, line: int) -> tuple[float | None, str]:
    if len(tokens) == 1:
        return None, _check_token(tokens[0], line)
    if len(tokens) == 2:
        try:
            coef = float(tokens[0])
        except ValueError:
            raise ParseError(
                f"non-numeric coefficient {tokens[0]!r} on {side} side", line
            ) from None
        if not coef > 0:
            raise ParseError(f"coefficient {tokens[0]!r} is not positive", line)
        return coef, _check_token(tokens[1], line)
    raise ParseError(
        f"species slot {' '.join(tokens)!r} on {side} side has too many tokens", line
    )


def _parse_side(tokens: list[str], side: str, line: int):
    if not tokens:
        raise ParseError(f"empty {side} side", line)
    slots: list[list[str]] = [[]]
    for tok in tokens:
        if tok == "+":
            slots.append([])
            continue
        if "+" in tok:
            raise ParseError(f"species token {tok!r} contains '+'", line)
        slots[-1].append(tok)
    if any(not slot for slot in slots):
        raise ParseError(f"empty species slot on {side} side", line)
    return tuple(_parse_species(slot, side, line) for slot in slots)


def parse_reaction_lines(text: str) -> list[ReactionLine]:
    """Parse reaction lines, keeping coefficients and reversibility flags."""
    reactions = []
    for number, line in _usable_lines(text):
        tokens = line.split()
        arrow_positions = [i for i, t in enumerate(tokens) if t in (FORWARD, REVERSIBLE)]
        if not arrow_positions:
            raise ParseError("missing reaction arrow '->' or '<->'", number)
        if len(arrow_positions) > 1:
            raise ParseError("more than one reaction arrow", number)
        split = arrow_positions[0]
        reactions.append(
            ReactionLine(
                raw=line,
                line_number=number,
                educts=_parse_side(tokens[:split], "educt", number),
                arrow=tokens[split],
                products=_parse_side(tokens[split + 1 :], "product", number),
            )
        )
    if not reactions:
        raise ParseError("no usable reaction lines in input")
    return reactions


def parse_reactions(text: str) -> DirectedHypergraph:
    """Build the directed hypergraph: educts become the tail, products the
    head, and every reversible line expands to a forward arc immediately
    followed by its backward arc."""
    arcs = []
    for reaction in parse_reaction_lines(text):
        educts = [label for _, label in reaction.educts]
        products = [label for _, label in reaction.products]
        arcs.append((educts, products))
        if reaction.reversible:
            arcs.append((products, educts))
    return build_directed(arcs)


def _weight_of(entry: Mapping, what: str, position: int) -> float:
    w = entry.get("weight", 1)
    if not isinstance(w, (int, float)) or isinstance(w, bool):
        raise ParseError(f"{what} {position} has a non-numeric weight")
    if not w > 0:
        raise ParseError(f"{what} {position} has a non-positive weight")
    return float(w)


def parse_weighted(
    document: str | Mapping,
) -> tuple[UndirectedHypergraph, WeightOverlay]:
    """Parse a weighted hypergraph document (JSON text or parsed mapping)."""
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(document, Mapping):
        raise ParseError("weighted document must be a JSON object")
    for key in ("vertices", "edges"):
        if not isinstance(document.get(key), list):
            raise ParseError(f"weighted document needs a {key!r} list")

    labels: list[str] = []
    vertex_weights: list[float] = []
    ids: dict[str, int] = {}
    for pos, entry in enumerate(document["vertices"]):
        if not isinstance(entry, Mapping) or "label" not in entry:
            raise ParseError(f"vertex {pos} needs a 'label' field")
        label = str(entry["label"])
        if "," in label:
            raise ParseError(f"vertex label {label!r} contains a comma")
        if label in ids:
            raise ParseError(f"duplicate vertex label {label!r}")
        ids[label] = len(labels)
        labels.append(label)
        vertex_weights.append(_weight_of(entry, "vertex", pos))

    rows: list[list[int]] = []
    edge_weights: list[float] = []
    for pos, entry in enumerate(document["edges"]):
        if not isinstance(entry, Mapping) or not entry.get("members"):
            raise ParseError(f"edge {pos} needs a non-empty 'members' list")
        row = []
        for label in entry["members"]:
            label = str(label)
            if label not in ids:
                raise ParseError(f"edge {pos} references undeclared vertex {label!r}")
            row.append(ids[label])
        rows.append(row)
        edge_weights.append(_weight_of(entry, "edge", pos))

    graph = UndirectedHypergraph(labels, rows)
    return graph, WeightOverlay(vertex_weights, edge_weights)


def _format_number(value) -> str:
    return repr(value) if isinstance(value, float) else str(value)


def _uniform_kind(records: list[CurvatureRecord], directed: bool | None) -> bool:
    kinds = {r.directed for r in records}
    if len(kinds) > 1:
        raise ValueError("cannot serialize mixed undirected and directed records")
    if kinds:
        if directed is not None and directed != next(iter(kinds)):
            raise ValueError("records do not match the requested record kind")
        return next(iter(kinds))
    return bool(directed)


def write_records(
    records: list[CurvatureRecord],
    format: str = "csv",
    directed: bool | None = None,
) -> str:
    """Serialize curvature records to CSV or JSON text.

    Row order follows the list (edge-index order when produced by
    ``compute_all``).  ``directed`` picks the header for an empty list and
    is otherwise checked against the records.
    """
    is_directed = _uniform_kind(records, directed)
    if format == "json":
        return json.dumps([r.to_dict() for r in records], indent=2) + "\n"
    if format != "csv":
        raise ValueError(f"unknown record format {format!r}")
    lines = [DIRECTED_HEADER if is_directed else UNDIRECTED_HEADER]
    for r in records:
        row = r.to_dict()
        keys = (DIRECTED_HEADER if is_directed else UNDIRECTED_HEADER).split(",")
        lines.append(",".join(_format_number(row[k]) for k in keys))
    return "\n".join(lines) + "\n"


def write_undirected_lines(h: UndirectedHypergraph) -> str:
    """Canonical hyperedge-line serialization (members in id order)."""
    return "".join(" ".join(h.member_labels(e)) + "\n" for e in range(h.edge_count))


def write_reaction_lines(h: DirectedHypergraph) -> str:
    """Canonical reaction-line serialization, one forward arc per line."""
    lines = []
    for e in range(h.arc_count):
        lines.append(
            " + ".join(h.tail_labels(e)) + " -> " + " + ".join(h.head_labels(e))
        )
    return "".join(line + "\n" for line in lines)


def write_weighted_document(
    h: UndirectedHypergraph, overlay: WeightOverlay | None = None
) -> str:
    """Canonical weighted-document serialization (unit weights if absent)."""
    if overlay is None:
        overlay = WeightOverlay.ones(h)
    document = {
        "vertices": [
            {"label": h.label(v), "weight": float(overlay.vertex_weights[v])}
            for v in range(h.vertex_count)
        ],
        "edges": [
            {
                "members": list(h.member_labels(e)),
                "weight": float(overlay.edge_weights[e]),
            }
            for e in range(h.edge_count)
        ],
    }
    return json.dumps(document, indent=2) + "\n"
