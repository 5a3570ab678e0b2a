"""Incidence data model for (multi)graphs and (directed) hypergraphs.

Vertex labels are interned to dense integer ids in order of first
appearance, so every structure carries a label <-> id bijection.  Edge
collections are multisets: repeated member sets stay distinct entries and
each entry counts separately in every degree.  A hyperarc is a
(tail, head) pair of vertex sets; the two sides may overlap, and an
overlapping vertex picks up one unit of in-degree and one unit of
out-degree from that arc.

Incidence is stored in CSR-style arrays (offsets plus a flat id list) so
batch kernels can run over them without touching Python objects.  Once
built, a hypergraph is immutable and safe to share across threads; all
queries are pure.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "UndirectedHypergraph",
    "DirectedHypergraph",
    "WeightOverlay",
    "build_undirected",
    "build_directed",
]


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _csr(rows: Sequence[tuple[int, ...]]) -> tuple[np.ndarray, np.ndarray]:
    sizes = np.fromiter((len(r) for r in rows), dtype=np.int64, count=len(rows))
    offsets = np.zeros(len(rows) + 1, dtype=np.int64)
    offsets[1:] = np.cumsum(sizes)
    flat = np.fromiter(
        (v for r in rows for v in r), dtype=np.int64, count=int(offsets[-1])
    )
    return _freeze(offsets), _freeze(flat)


def _invert_csr(
    offsets: np.ndarray, flat: np.ndarray, n_vertices: int
) -> tuple[np.ndarray, np.ndarray]:
    """Vertex -> owning-row index, rows listed in ascending order per vertex."""
    n_rows = offsets.shape[0] - 1
    row_of = np.repeat(np.arange(n_rows, dtype=np.int64), np.diff(offsets))
    order = np.argsort(flat, kind="stable")
    v_flat = row_of[order]
    counts = np.bincount(flat, minlength=n_vertices) if flat.size else np.zeros(
        n_vertices, dtype=np.int64
    )
    v_offsets = np.zeros(n_vertices + 1, dtype=np.int64)
    v_offsets[1:] = np.cumsum(counts)
    return _freeze(v_offsets), _freeze(np.ascontiguousarray(v_flat, dtype=np.int64))


class _VertexTable:
    """Label <-> dense-id bijection shared by both hypergraph kinds."""

    def __init__(self, labels: Sequence[str]):
        self._labels = tuple(str(x) for x in labels)
        self._ids = {lab: i for i, lab in enumerate(self._labels)}
        if len(self._ids) != len(self._labels):
            raise ValueError("vertex labels must be unique")

    @property
    def vertex_count(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self._labels[v]

    def vertex_id(self, label: str) -> int:
        try:
            return self._ids[label]
        except KeyError:
            raise ValueError(f"unknown vertex label {label!r}") from None

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._labels):
            raise IndexError(f"vertex id {v} out of range")


def _normalize_rows(
    entries: Iterable[Sequence[int]], n_vertices: int, what: str
) -> list[tuple[int, ...]]:
    rows = []
    for pos, members in enumerate(entries):
        row = tuple(sorted({int(v) for v in members}))
        if not row:
            raise ValueError(f"{what} at position {pos} is empty")
        if row[0] < 0 or row[-1] >= n_vertices:
            raise ValueError(f"{what} at position {pos} has a vertex id out of range")
        rows.append(row)
    return rows


class UndirectedHypergraph(_VertexTable):
    """A vertex set plus a multiset of hyperedges (vertex subsets).

    ``labels`` fixes the id order; ``edges`` lists member-id collections,
    one entry per multiset element, kept in input order.  Duplicate ids
    inside one entry collapse; duplicate entries stay distinct edges.

    Exposed CSR arrays (all read-only):

    * ``edge_offsets`` / ``edge_members``: edge index -> member vertex ids
    * ``vert_offsets`` / ``vert_edges``: vertex id -> incident edge indices
    * ``degrees``: per-vertex incident-entry count, ``sizes``: per-edge ``|e|``
    """

    def __init__(self, labels: Sequence[str], edges: Iterable[Sequence[int]]):
        super().__init__(labels)
        rows = _normalize_rows(edges, self.vertex_count, "hyperedge")
        self.edge_offsets, self.edge_members = _csr(rows)
        self.vert_offsets, self.vert_edges = _invert_csr(
            self.edge_offsets, self.edge_members, self.vertex_count
        )
        self.degrees = _freeze(np.diff(self.vert_offsets))
        self.sizes = _freeze(np.diff(self.edge_offsets))

    @property
    def edge_count(self) -> int:
        return int(self.edge_offsets.shape[0] - 1)

    def members(self, e: int) -> tuple[int, ...]:
        self._check_edge(e)
        return tuple(
            int(v) for v in self.edge_members[self.edge_offsets[e] : self.edge_offsets[e + 1]]
        )

    def member_labels(self, e: int) -> tuple[str, ...]:
        return tuple(self._labels[v] for v in self.members(e))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.degrees[v])

    def incident_edges(self, v: int) -> np.ndarray:
        """Indices of all edge-multiset entries containing ``v`` (ascending)."""
        self._check_vertex(v)
        return self.vert_edges[self.vert_offsets[v] : self.vert_offsets[v + 1]]

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < self.edge_count:
            raise IndexError(f"edge index {e} out of range")

    def __repr__(self) -> str:
        return (
            f"UndirectedHypergraph(vertices={self.vertex_count}, edges={self.edge_count})"
        )


class DirectedHypergraph(_VertexTable):
    """A vertex set plus a multiset of hyperarcs (tail set, head set).

    Tails and heads may overlap; a vertex on both sides of one arc counts
    once toward its out-degree and once toward its in-degree.

    Exposed CSR arrays (all read-only):

    * ``tail_offsets`` / ``tail_members`` and ``head_offsets`` / ``head_members``
    * ``out_offsets`` / ``out_arcs``: vertex -> arcs with the vertex in the tail
    * ``in_offsets`` / ``in_arcs``: vertex -> arcs with the vertex in the head
    * ``out_degrees`` / ``in_degrees``, ``tail_sizes`` / ``head_sizes``
    """

    def __init__(
        self,
        labels: Sequence[str],
        arcs: Iterable[tuple[Sequence[int], Sequence[int]]],
    ):
        super().__init__(labels)
        tails, heads = [], []
        for pos, (tail, head) in enumerate(arcs):
            tails.append(tail)
            heads.append(head)
            if not len(tail):
                raise ValueError(f"hyperarc at position {pos} has an empty tail")
            if not len(head):
                raise ValueError(f"hyperarc at position {pos} has an empty head")
        n = self.vertex_count
        self.tail_offsets, self.tail_members = _csr(_normalize_rows(tails, n, "tail"))
        self.head_offsets, self.head_members = _csr(_normalize_rows(heads, n, "head"))
        self.out_offsets, self.out_arcs = _invert_csr(
            self.tail_offsets, self.tail_members, n
        )
        self.in_offsets, self.in_arcs = _invert_csr(
            self.head_offsets, self.head_members, n
        )
        self.out_degrees = _freeze(np.diff(self.out_offsets))
        self.in_degrees = _freeze(np.diff(self.in_offsets))
        self.tail_sizes = _freeze(np.diff(self.tail_offsets))
        self.head_sizes = _freeze(np.diff(self.head_offsets))

    @property
    def arc_count(self) -> int:
        return int(self.tail_offsets.shape[0] - 1)

    def tail(self, e: int) -> tuple[int, ...]:
        self._check_arc(e)
        return tuple(
            int(v) for v in self.tail_members[self.tail_offsets[e] : self.tail_offsets[e + 1]]
        )

    def head(self, e: int) -> tuple[int, ...]:
        self._check_arc(e)
        return tuple(
            int(v) for v in self.head_members[self.head_offsets[e] : self.head_offsets[e + 1]]
        )

    def tail_labels(self, e: int) -> tuple[str, ...]:
        return tuple(self._labels[v] for v in self.tail(e))

    def head_labels(self, e: int) -> tuple[str, ...]:
        return tuple(self._labels[v] for v in self.head(e))

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.in_degrees[v])

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.out_degrees[v])

    def _check_arc(self, e: int) -> None:
        if not 0 <= e < self.arc_count:
            raise IndexError(f"arc index {e} out of range")

    def __repr__(self) -> str:
        return f"DirectedHypergraph(vertices={self.vertex_count}, arcs={self.arc_count})"


class WeightOverlay:
    """Strictly positive vertex and edge weights aligned to one hypergraph.

    Weights default to 1 wherever a mapping omits them; zero, negative, and
    non-finite weights are rejected at construction.
    """

    def __init__(self, vertex_weights, edge_weights):
        vw = np.array(vertex_weights, dtype=np.float64)
        ew = np.array(edge_weights, dtype=np.float64)
        for name, arr in (("vertex", vw), ("edge", ew)):
            if arr.ndim != 1:
                raise ValueError(f"{name} weights must be one-dimensional")
            if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr <= 0.0)):
                raise ValueError(f"{name} weights must be strictly positive")
        self.vertex_weights = _freeze(vw)
        self.edge_weights = _freeze(ew)

    @classmethod
    def ones(cls, hypergraph: UndirectedHypergraph) -> "WeightOverlay":
        return cls(
            np.ones(hypergraph.vertex_count), np.ones(hypergraph.edge_count)
        )

    @classmethod
    def from_mappings(
        cls,
        hypergraph: UndirectedHypergraph,
        vertex_weights: Mapping[str, float] | None = None,
        edge_weights: Mapping[int, float] | None = None,
    ) -> "WeightOverlay":
        vw = np.ones(hypergraph.vertex_count)
        for label, w in (vertex_weights or {}).items():
            vw[hypergraph.vertex_id(label)] = w
        ew = np.ones(hypergraph.edge_count)
        for idx, w in (edge_weights or {}).items():
            if not 0 <= idx < hypergraph.edge_count:
                raise IndexError(f"edge index {idx} out of range")
            ew[idx] = w
        return cls(vw, ew)


class _Interner:
    def __init__(self) -> None:
        self.labels: list[str] = []
        self._ids: dict[str, int] = {}

    def intern(self, token: str) -> int:
        token = str(token)
        i = self._ids.get(token)
        if i is None:
            i = len(self.labels)
            self._ids[token] = i
            self.labels.append(token)
        return i


def build_undirected(edge_lists: Iterable[Sequence[str]]) -> UndirectedHypergraph:
    """Intern tokens and build a hypergraph, one multiset entry per list.

    Duplicate tokens inside one list collapse to a single member; duplicate
    lists become distinct multiset entries.
    """
    interner = _Interner()
    rows: list[list[int]] = []
    for pos, tokens in enumerate(edge_lists):
        toks = list(tokens)
        if not toks:
            raise ValueError(f"hyperedge at position {pos} is empty")
        rows.append([interner.intern(t) for t in toks])
    return UndirectedHypergraph(interner.labels, rows)


def build_directed(
    arc_lists: Iterable[tuple[Sequence[str], Sequence[str]]]
) -> DirectedHypergraph:
    """Intern tokens and build a directed hypergraph from (tail, head) lists."""
    interner = _Interner()
    arcs: list[tuple[list[int], list[int]]] = []
    for pos, (tail, head) in enumerate(arc_lists):
        tail_toks, head_toks = list(tail), list(head)
        if not tail_toks:
            raise ValueError(f"hyperarc at position {pos} has an empty tail")
        if not head_toks:
            raise ValueError(f"hyperarc at position {pos} has an empty head")
        arcs.append(
            (
                [interner.intern(t) for t in tail_toks],
                [interner.intern(t) for t in head_toks],
            )
        )
    return DirectedHypergraph(interner.labels, arcs)
