"""Batch kernels over CSR incidence arrays.

Two interchangeable backends: ``_ckernels`` (compiled) and ``_pykernels``
(numpy).  The compiled one is preferred when present; set
``HYPERFORMAN_PURE_PYTHON=1`` to force the fallback.
"""

import os

_impl = None
if os.environ.get("HYPERFORMAN_PURE_PYTHON", "") not in ("", "0"):
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        BACKEND = "python"
    else:
        BACKEND = "compiled"

if _impl is None:
    from . import _pykernels as _impl

edge_degree_sums = _impl.edge_degree_sums
incident_edge_counts = _impl.incident_edge_counts
weighted_curvatures = _impl.weighted_curvatures

__all__ = [
    "BACKEND",
    "edge_degree_sums",
    "incident_edge_counts",
    "weighted_curvatures",
]
