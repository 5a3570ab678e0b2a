"""Numpy fallback implementations of the batch kernels.

Semantics must match ``_ckernels`` exactly for integer kernels and to
floating-point roundoff for the weighted one; the differential test suite
holds the two backends together.
"""

from __future__ import annotations

import numpy as np


def edge_degree_sums(
    offsets: np.ndarray, members: np.ndarray, degrees: np.ndarray
) -> np.ndarray:
    """Per-row sum of ``degrees`` over the CSR row members.

    Rows are guaranteed non-empty by the data model, which makes the
    ``reduceat`` segments well defined.
    """
    n_rows = offsets.shape[0] - 1
    if n_rows == 0:
        return np.zeros(0, dtype=np.int64)
    return np.add.reduceat(degrees[members], offsets[:-1])


def incident_edge_counts(
    edge_offsets: np.ndarray,
    edge_members: np.ndarray,
    vert_offsets: np.ndarray,
    vert_edges: np.ndarray,
) -> np.ndarray:
    """Number of OTHER rows sharing at least one member with each row.

    Parallel duplicates are distinct rows and count; the row itself never
    does.
    """
    n_rows = edge_offsets.shape[0] - 1
    out = np.zeros(n_rows, dtype=np.int64)
    for e in range(n_rows):
        vs = edge_members[edge_offsets[e] : edge_offsets[e + 1]]
        incident = np.concatenate(
            [vert_edges[vert_offsets[v] : vert_offsets[v + 1]] for v in vs]
        )
        out[e] = np.unique(incident).size - 1
    return out


def weighted_curvatures(
    edge_offsets: np.ndarray,
    edge_members: np.ndarray,
    vert_offsets: np.ndarray,
    vert_edges: np.ndarray,
    vertex_weights: np.ndarray,
    edge_weights: np.ndarray,
) -> np.ndarray:
    """Weighted curvature of every row.

    Uses the regrouped form F(e) = sum_{k in e} w_k (2 - sqrt(w_e) S_k)
    with S_k = sum over rows incident on k of 1/sqrt(w_row); the S_k sum
    includes the row itself, which is what folds the excluded self term
    into the constant 2.
    """
    n_rows = edge_offsets.shape[0] - 1
    n_verts = vert_offsets.shape[0] - 1
    if n_rows == 0:
        return np.zeros(0, dtype=np.float64)
    inv_sqrt = 1.0 / np.sqrt(edge_weights)
    vert_of = np.repeat(np.arange(n_verts, dtype=np.int64), np.diff(vert_offsets))
    s = np.bincount(vert_of, weights=inv_sqrt[vert_edges], minlength=n_verts)
    edge_of = np.repeat(np.arange(n_rows, dtype=np.int64), np.diff(edge_offsets))
    per_member = vertex_weights[edge_members] * (
        2.0 - np.sqrt(edge_weights)[edge_of] * s[edge_members]
    )
    return np.bincount(edge_of, weights=per_member, minlength=n_rows)
