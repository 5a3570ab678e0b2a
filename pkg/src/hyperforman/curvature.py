"""Forman-Ricci curvature variants and their bounds.

Undirected hyperedges carry a single curvature F; hyperarcs carry six
directional variants plus their total:

* ``F_in`` = |tail| - sum of in-degrees over the tail
* ``F_out`` = |head| - sum of out-degrees over the head
* ``F_through`` = ``F_in`` + ``F_out`` (flow through the arc)
* ``F_loss_tail`` = |tail| - sum of out-degrees over the tail
* ``F_loss_head`` = |head| - sum of in-degrees over the head
* ``F_loss`` = ``F_loss_tail`` + ``F_loss_head`` (redundancy / replaceability)
* ``F_total`` = ``F_through`` + ``F_loss``

Degree sums use raw multiset degrees with no self-exclusion, so the loss
variants are always <= 0 (the arc counts in its own tail-out and head-in
sums).  Unweighted curvatures are exact integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import DirectedHypergraph, UndirectedHypergraph, WeightOverlay

__all__ = [
    "DIRECTED_VARIANTS",
    "UNDIRECTED_VARIANTS",
    "CurvatureRecord",
    "BoundPair",
    "forman_unweighted_undirected",
    "forman_weighted_undirected",
    "forman_in",
    "forman_out",
    "forman_through",
    "forman_loss_tail",
    "forman_loss_head",
    "forman_loss",
    "forman_total",
    "bounds_undirected",
    "bounds_directed",
    "compute_all",
]

UNDIRECTED_VARIANTS = ("F",)
DIRECTED_VARIANTS = (
    "F_in",
    "F_out",
    "F_through",
    "F_loss_tail",
    "F_loss_head",
    "F_loss",
    "F_total",
)

REGIMES = ("multiset", "simple")


@dataclass(frozen=True)
class CurvatureRecord:
    """Per-edge result row.

    ``size`` is ``|e|`` for undirected edges and ``(|tail|, |head|)`` for
    hyperarcs; ``degree_sum`` is D for undirected edges and the four sums
    ``(sum_in_tail, sum_out_tail, sum_in_head, sum_out_head)`` for arcs.
    ``values`` maps variant name to value; unweighted values are ints.
    """

    edge_index: int
    size: int | tuple[int, int]
    degree_sum: int | tuple[int, int, int, int]
    values: dict[str, int | float]

    @property
    def directed(self) -> bool:
        return isinstance(self.size, tuple)

    def to_dict(self) -> dict:
        """Flat field mirror, same column set as the CSV writers."""
        if not self.directed:
            return {
                "edge_index": self.edge_index,
                "size": self.size,
                "degree_sum": self.degree_sum,
                "F": self.values["F"],
            }
        sit, sot, sih, soh = self.degree_sum
        row = {
            "edge_index": self.edge_index,
            "tail_size": self.size[0],
            "head_size": self.size[1],
            "sum_in_tail": sit,
            "sum_out_tail": sot,
            "sum_in_head": sih,
            "sum_out_head": soh,
        }
        row.update(self.values)
        return row


@dataclass(frozen=True)
class BoundPair:
    """Inclusive lower/upper bounds for one curvature variant."""

    lower: int | float
    upper: int | float
    regime: str

    def __post_init__(self) -> None:
        if self.regime not in REGIMES:
            raise ValueError(f"unknown regime {self.regime!r}")
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")

    def contains(self, value) -> bool:
        return self.lower <= value <= self.upper


def forman_unweighted_undirected(h: UndirectedHypergraph, e: int) -> int:
    """2|e| - D, where D sums the degrees of the members of edge ``e``.

    Degrees count the edge itself, so an isolated hyperedge attains |e|
    and every edge of a cycle graph gets 0.
    """
    members = h.members(e)
    return int(2 * len(members) - int(h.degrees[list(members)].sum()))


def forman_weighted_undirected(
    h: UndirectedHypergraph, overlay: WeightOverlay, e: int
) -> float:
    """Weighted curvature of edge ``e``.

    F(e) = w_e * sum_{k in e} ( w_k/w_e - sum_{l ~ k} w_k/sqrt(w_e w_l) )
    where l runs over the incident edge-multiset entries of k excluding
    the entry ``e`` itself; parallel duplicates of ``e`` do count.  With
    all weights 1 this reduces to the unweighted value exactly.
    """
    _check_overlay(h, overlay)
    members = h.members(e)
    w_e = float(overlay.edge_weights[e])
    total = 0.0
    for k in members:
        w_k = float(overlay.vertex_weights[k])
        term = w_k / w_e
        for other in h.incident_edges(k):
            if other == e:
                continue
            term -= w_k / math.sqrt(w_e * float(overlay.edge_weights[other]))
        total += term
    return w_e * total


def forman_in(h: DirectedHypergraph, e: int) -> int:
    """|tail| minus the in-degree sum over the tail of arc ``e``."""
    tail = h.tail(e)
    return int(len(tail) - int(h.in_degrees[list(tail)].sum()))


def forman_out(h: DirectedHypergraph, e: int) -> int:
    """|head| minus the out-degree sum over the head of arc ``e``."""
    head = h.head(e)
    return int(len(head) - int(h.out_degrees[list(head)].sum()))


def forman_through(h: DirectedHypergraph, e: int) -> int:
    """Flow-through curvature: ``forman_in + forman_out``."""
    return forman_in(h, e) + forman_out(h, e)


def forman_loss_tail(h: DirectedHypergraph, e: int) -> int:
    """|tail| minus the out-degree sum over the tail; always <= 0."""
    tail = h.tail(e)
    return int(len(tail) - int(h.out_degrees[list(tail)].sum()))


def forman_loss_head(h: DirectedHypergraph, e: int) -> int:
    """|head| minus the in-degree sum over the head; always <= 0."""
    head = h.head(e)
    return int(len(head) - int(h.in_degrees[list(head)].sum()))


def forman_loss(h: DirectedHypergraph, e: int) -> int:
    """Flow-loss curvature: ``forman_loss_tail + forman_loss_head``."""
    return forman_loss_tail(h, e) + forman_loss_head(h, e)


def forman_total(h: DirectedHypergraph, e: int) -> int:
    """Total flow over the arc: ``forman_through + forman_loss``."""
    return forman_through(h, e) + forman_loss(h, e)


def bounds_undirected(
    size: int,
    edge_count: int,
    vertex_count: int | None = None,
    regime: str = "multiset",
) -> BoundPair:
    """Bounds for the unweighted curvature of a hyperedge of given size.

    Multiset regime: [|e|(2 - |E|), |e|].  Simple regime:
    [2|e|(1 - 2^(|V|-2)), |V|], requiring |e| <= |V|.
    """
    if size < 1:
        raise ValueError("hyperedge size must be at least 1")
    if edge_count < 1:
        raise ValueError("edge count must be at least 1")
    if regime == "multiset":
        return BoundPair(size * (2 - edge_count), size, "multiset")
    if regime == "simple":
        if vertex_count is None:
            raise ValueError("vertex_count is required for the simple regime")
        if size > vertex_count:
            raise ValueError("hyperedge size exceeds vertex count in simple regime")
        return BoundPair(2 * size * (1 - 2 ** (vertex_count - 2)), vertex_count, "simple")
    raise ValueError(f"unknown regime {regime!r}")


def bounds_directed(
    tail_size: int,
    head_size: int,
    edge_count: int,
    variant: str,
    vertex_count: int | None = None,
    regime: str = "multiset",
) -> BoundPair:
    """Bounds for one directional variant of a hyperarc of given sizes.

    Multiset-regime lower bounds scale with (1 - |E|); the simple regime
    replaces |E| by a power of two whose exponent differs per variant
    (|V|-1 for F_in/F_out/F_loss, |V| for F_through/F_loss_tail/
    F_loss_head).  ``F_total`` has no published bound and is rejected.
    """
    if tail_size < 1 or head_size < 1:
        raise ValueError("tail and head sizes must be at least 1")
    if edge_count < 1:
        raise ValueError("edge count must be at least 1")
    if regime == "multiset":
        unit = {v: 1 - edge_count for v in DIRECTED_VARIANTS[:-1]}
    elif regime == "simple":
        if vertex_count is None:
            raise ValueError("vertex_count is required for the simple regime")
        if tail_size > vertex_count or head_size > vertex_count:
            raise ValueError("side size exceeds vertex count in simple regime")
        unit = {
            "F_in": 1 - 2 ** (vertex_count - 1),
            "F_out": 1 - 2 ** (vertex_count - 1),
            "F_through": 1 - 2**vertex_count,
            "F_loss_tail": 1 - 2**vertex_count,
            "F_loss_head": 1 - 2**vertex_count,
            "F_loss": 1 - 2 ** (vertex_count - 1),
        }
    else:
        raise ValueError(f"unknown regime {regime!r}")
    both = tail_size + head_size
    table = {
        "F_in": (tail_size * unit.get("F_in", 0), tail_size),
        "F_out": (head_size * unit.get("F_out", 0), head_size),
        "F_through": (both * unit.get("F_through", 0), both),
        "F_loss_tail": (tail_size * unit.get("F_loss_tail", 0), 0),
        "F_loss_head": (head_size * unit.get("F_loss_head", 0), 0),
        "F_loss": (both * unit.get("F_loss", 0), 0),
    }
    if variant not in table:
        raise ValueError(f"unknown variant {variant!r}")
    lower, upper = table[variant]
    return BoundPair(lower, upper, regime)


def _check_overlay(h: UndirectedHypergraph, overlay: WeightOverlay) -> None:
    if overlay.vertex_weights.shape[0] != h.vertex_count:
        raise ValueError("overlay vertex weights do not match the hypergraph")
    if overlay.edge_weights.shape[0] != h.edge_count:
        raise ValueError("overlay edge weights do not match the hypergraph")


def compute_all(
    h: UndirectedHypergraph | DirectedHypergraph,
    overlay: WeightOverlay | None = None,
) -> list[CurvatureRecord]:
    """One record per edge-multiset entry, in input order.

    Undirected hypergraphs yield F (weighted when an overlay is given);
    directed ones yield all six directional variants plus F_total.
    Overlays on directed hypergraphs are rejected: weighted curvature is
    defined for the undirected case only.
    """
    if isinstance(h, DirectedHypergraph):
        if overlay is not None:
            raise ValueError(
                "weight overlays are not supported on directed hypergraphs"
            )
        return _compute_directed(h)
    if isinstance(h, UndirectedHypergraph):
        return _compute_undirected(h, overlay)
    raise TypeError(f"unsupported hypergraph type {type(h).__name__}")


def _compute_undirected(
    h: UndirectedHypergraph, overlay: WeightOverlay | None
) -> list[CurvatureRecord]:
    sizes = h.sizes
    dsums = kernels.edge_degree_sums(h.edge_offsets, h.edge_members, h.degrees)
    if overlay is None:
        return [
            CurvatureRecord(
                e, int(sizes[e]), int(dsums[e]), {"F": int(2 * sizes[e] - dsums[e])}
            )
            for e in range(h.edge_count)
        ]
    _check_overlay(h, overlay)
    values = kernels.weighted_curvatures(
        h.edge_offsets,
        h.edge_members,
        h.vert_offsets,
        h.vert_edges,
        overlay.vertex_weights,
        overlay.edge_weights,
    )
    return [
        CurvatureRecord(e, int(sizes[e]), int(dsums[e]), {"F": float(values[e])})
        for e in range(h.edge_count)
    ]


def _compute_directed(h: DirectedHypergraph) -> list[CurvatureRecord]:
    sum_in_tail = kernels.edge_degree_sums(
        h.tail_offsets, h.tail_members, h.in_degrees
    )
    sum_out_tail = kernels.edge_degree_sums(
        h.tail_offsets, h.tail_members, h.out_degrees
    )
    sum_in_head = kernels.edge_degree_sums(
        h.head_offsets, h.head_members, h.in_degrees
    )
    sum_out_head = kernels.edge_degree_sums(
        h.head_offsets, h.head_members, h.out_degrees
    )
    f_in = h.tail_sizes - sum_in_tail
    f_out = h.head_sizes - sum_out_head
    f_loss_tail = h.tail_sizes - sum_out_tail
    f_loss_head = h.head_sizes - sum_in_head
    records = []
    for e in range(h.arc_count):
        through = int(f_in[e] + f_out[e])
        loss = int(f_loss_tail[e] + f_loss_head[e])
        records.append(
            CurvatureRecord(
                e,
                (int(h.tail_sizes[e]), int(h.head_sizes[e])),
                (
                    int(sum_in_tail[e]),
                    int(sum_out_tail[e]),
                    int(sum_in_head[e]),
                    int(sum_out_head[e]),
                ),
                {
                    "F_in": int(f_in[e]),
                    "F_out": int(f_out[e]),
                    "F_through": through,
                    "F_loss_tail": int(f_loss_tail[e]),
                    "F_loss_head": int(f_loss_head[e]),
                    "F_loss": loss,
                    "F_total": through + loss,
                },
            )
        )
    return records
