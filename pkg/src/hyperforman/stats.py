"""Distributional summaries over hypergraphs and curvature records.

Covers the reporting side of a curvature analysis: size and degree
distributions, fixed-width curvature histograms, per-bin five-number
summaries of auxiliary edge quantities, (tail, head) size frequency
tables, and extremal-record reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import DirectedHypergraph, UndirectedHypergraph
from .curvature import CurvatureRecord

__all__ = [
    "Histogram",
    "BinSummary",
    "SizeFrequencyTable",
    "ExtremeEntry",
    "ExtremesReport",
    "size_distribution",
    "degree_distribution",
    "curvature_histogram",
    "hyperedge_degrees",
    "per_bin_summary",
    "tail_head_frequencies",
    "extremes",
    "SUMMARY_QUANTITIES",
]

SUMMARY_QUANTITIES = (
    "normalized_size",
    "hyperedge_degree_median",
    "hyperedge_degree_mean",
)


@dataclass(frozen=True)
class Histogram:
    """Fixed-width histogram with half-open bins [lo, hi).

    Bin edges sit at ``origin + k * bin_width``; bins run contiguously from
    the smallest to the largest populated bin, so interior empty bins are
    listed with count 0.
    """

    bin_width: float
    origin: float
    bins: tuple[tuple[float, float, int], ...]

    @property
    def total(self) -> int:
        return sum(count for _, _, count in self.bins)

    def locate(self, value) -> int:
        """Index of the bin containing ``value``; error when outside."""
        if not self.bins:
            raise ValueError("histogram has no bins")
        k = math.floor((value - self.origin) / self.bin_width)
        first = math.floor((self.bins[0][0] - self.origin) / self.bin_width)
        index = k - first
        if not 0 <= index < len(self.bins):
            raise ValueError(f"value {value} outside histogram range")
        return index

    def to_dict(self) -> dict:
        return {
            "bin_width": self.bin_width,
            "origin": self.origin,
            "bins": [[lo, hi, count] for lo, hi, count in self.bins],
        }


@dataclass(frozen=True)
class BinSummary:
    """Five-number summary plus mean of an auxiliary quantity in one bin.

    Empty bins keep their edges and count 0 with the statistics omitted.
    """

    lower: float
    upper: float
    count: int
    minimum: float | None = None
    q1: float | None = None
    median: float | None = None
    q3: float | None = None
    maximum: float | None = None
    mean: float | None = None

    def to_dict(self) -> dict:
        row = {"lower": self.lower, "upper": self.upper, "count": self.count}
        if self.count:
            row.update(
                min=self.minimum,
                q1=self.q1,
                median=self.median,
                q3=self.q3,
                max=self.maximum,
                mean=self.mean,
            )
        return row


@dataclass(frozen=True)
class SizeFrequencyTable:
    """Frequency of each (tail size, head size) couple over the arcs."""

    counts: dict[tuple[int, int], int]

    def radius(self, pair: tuple[int, int]) -> float:
        """Display radius log f / log 100 for the couple's frequency."""
        return math.log(self.counts[pair]) / math.log(100.0)

    def to_dict(self) -> dict:
        entries = [
            {
                "tail_size": t,
                "head_size": h,
                "count": c,
                "radius": math.log(c) / math.log(100.0),
            }
            for (t, h), c in sorted(self.counts.items())
        ]
        return {"entries": entries}


def size_distribution(h: UndirectedHypergraph) -> dict[int, int]:
    """Exact hyperedge-size counts over the edge multiset."""
    if not isinstance(h, UndirectedHypergraph):
        raise ValueError("size_distribution expects an undirected hypergraph")
    values, counts = np.unique(h.sizes, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def degree_distribution(
    h: UndirectedHypergraph | DirectedHypergraph, kind: str = "undirected"
) -> dict[int, int]:
    """Exact vertex-degree counts; ``kind`` picks undirected, in, or out."""
    if kind == "undirected":
        if not isinstance(h, UndirectedHypergraph):
            raise ValueError("undirected degree distribution needs an undirected hypergraph")
        degrees = h.degrees
    elif kind in ("in", "out"):
        if not isinstance(h, DirectedHypergraph):
            raise ValueError(f"{kind}-degree distribution needs a directed hypergraph")
        degrees = h.in_degrees if kind == "in" else h.out_degrees
    else:
        raise ValueError(f"unknown degree kind {kind!r}")
    values, counts = np.unique(degrees, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, counts)}


def curvature_histogram(values, bin_width: float, origin: float = 0.0) -> Histogram:
    """Histogram of values into half-open bins of the given width.

    Bins span the populated range contiguously; an empty value list yields
    an empty histogram.
    """
    if not bin_width > 0:
        raise ValueError("bin width must be positive")
    bin_width = float(bin_width)
    origin = float(origin)
    counts: dict[int, int] = {}
    for v in values:
        k = math.floor((v - origin) / bin_width)
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        return Histogram(bin_width, origin, ())
    lo, hi = min(counts), max(counts)
    bins = tuple(
        (origin + k * bin_width, origin + (k + 1) * bin_width, counts.get(k, 0))
        for k in range(lo, hi + 1)
    )
    return Histogram(bin_width, origin, bins)


def hyperedge_degrees(h: UndirectedHypergraph) -> np.ndarray:
    """Per-edge count of other multiset entries sharing at least one vertex.

    Parallel duplicates count; the edge itself does not.
    """
    if not isinstance(h, UndirectedHypergraph):
        raise ValueError("hyperedge_degrees expects an undirected hypergraph")
    return kernels.incident_edge_counts(
        h.edge_offsets, h.edge_members, h.vert_offsets, h.vert_edges
    )


def _summarize(lower: float, upper: float, values: list[float]) -> BinSummary:
    if not values:
        return BinSummary(lower, upper, 0)
    arr = np.asarray(values, dtype=np.float64)
    # linear interpolation between closest ranks, numpy's default
    q1, median, q3 = np.percentile(arr, [25.0, 50.0, 75.0])
    return BinSummary(
        lower,
        upper,
        len(values),
        float(arr.min()),
        float(q1),
        float(median),
        float(q3),
        float(arr.max()),
        float(arr.mean()),
    )


def per_bin_summary(
    records: list[CurvatureRecord],
    histogram: Histogram,
    quantity: str,
    hypergraph: UndirectedHypergraph | None = None,
) -> list[BinSummary]:
    """Summarize an auxiliary quantity within each curvature bin.

    ``normalized_size`` is |e| over the largest |e| among the records; the
    ``hyperedge_degree_*`` quantities both summarize the incident-entry
    count per edge (each summary already carries its median and mean) and
    need the hypergraph for incidence.  Every record's F value must fall
    inside the histogram.
    """
    if quantity not in SUMMARY_QUANTITIES:
        raise ValueError(f"unknown summary quantity {quantity!r}")
    if any(r.directed for r in records):
        raise ValueError("per-bin summaries are defined for undirected records")
    if quantity == "normalized_size":
        max_size = max((r.size for r in records), default=1)
        aux = [r.size / max_size for r in records]
    else:
        if hypergraph is None:
            raise ValueError("hyperedge degree summaries need the hypergraph")
        counts = hyperedge_degrees(hypergraph)
        aux = [float(counts[r.edge_index]) for r in records]
    groups: list[list[float]] = [[] for _ in histogram.bins]
    for record, value in zip(records, aux):
        groups[histogram.locate(record.values["F"])].append(value)
    return [
        _summarize(lo, hi, group)
        for (lo, hi, _), group in zip(histogram.bins, groups)
    ]


def tail_head_frequencies(h: DirectedHypergraph) -> SizeFrequencyTable:
    """Frequency of each (|tail|, |head|) couple over the arc multiset."""
    if not isinstance(h, DirectedHypergraph):
        raise ValueError("tail_head_frequencies expects a directed hypergraph")
    counts: dict[tuple[int, int], int] = {}
    for t, hd in zip(h.tail_sizes, h.head_sizes):
        key = (int(t), int(hd))
        counts[key] = counts.get(key, 0) + 1
    return SizeFrequencyTable(counts)


@dataclass(frozen=True)
class ExtremeEntry:
    """A record plus its value under the reported variant and its labels."""

    record: CurvatureRecord
    value: int | float
    labels: tuple | None = None

    def to_dict(self) -> dict:
        row = self.record.to_dict()
        row["value"] = self.value
        if self.labels is not None:
            if self.record.directed:
                row["tail"] = list(self.labels[0])
                row["head"] = list(self.labels[1])
            else:
                row["members"] = list(self.labels)
        return row


@dataclass(frozen=True)
class ExtremesReport:
    variant: str
    minima: list[ExtremeEntry]
    maxima: list[ExtremeEntry]

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "minima": [entry.to_dict() for entry in self.minima],
            "maxima": [entry.to_dict() for entry in self.maxima],
        }


def extremes(
    records: list[CurvatureRecord],
    variant: str,
    k: int,
    hypergraph: UndirectedHypergraph | DirectedHypergraph | None = None,
) -> ExtremesReport:
    """Top-k most negative and most positive records under one variant.

    Ties break by ascending edge index.  When the hypergraph is supplied,
    entries carry resolved vertex labels for reporting.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    for record in records:
        if variant not in record.values:
            raise ValueError(f"unknown variant {variant!r}")

    def entry(record: CurvatureRecord) -> ExtremeEntry:
        labels = None
        if isinstance(hypergraph, DirectedHypergraph):
            labels = (
                hypergraph.tail_labels(record.edge_index),
                hypergraph.head_labels(record.edge_index),
            )
        elif isinstance(hypergraph, UndirectedHypergraph):
            labels = hypergraph.member_labels(record.edge_index)
        return ExtremeEntry(record, record.values[variant], labels)

    ascending = sorted(records, key=lambda r: (r.values[variant], r.edge_index))
    descending = sorted(records, key=lambda r: (-r.values[variant], r.edge_index))
    return ExtremesReport(
        variant,
        [entry(r) for r in ascending[:k]],
        [entry(r) for r in descending[:k]],
    )
