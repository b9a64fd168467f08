"""Bipartition modularity and single-vertex flip gains.

A partition is a vector of spins ``s_i in {-1, +1}``. With the modularity
matrix ``B_ij = A_ij - k_i k_j / 2m`` the score is
``(1 / 4m) * sum_ij B_ij s_i s_j``. Everything here runs in O(n + m) from the
edge list and degrees; ``B`` is never materialized.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, InvalidSpins
from .graph_io import Graph


def as_partition(g: Graph, spins) -> np.ndarray:
    """Validate ``spins`` against ``g`` and return them as an int8 array."""
    s = np.asarray(spins)
    if s.ndim != 1 or len(s) != g.node_count:
        raise DimensionMismatch(
            f"partition has shape {s.shape}, graph has {g.node_count} vertices"
        )
    if not np.all((s == 1) | (s == -1)):
        raise InvalidSpins("partition entries must be -1 or +1")
    return s.astype(np.int8)


def modularity_entry(g: Graph, i: int, j: int) -> float:
    """``B_ij`` computed on demand."""
    a = 1.0 if i != j and g.has_edge(i, j) else 0.0
    return a - g.degrees[i] * g.degrees[j] / (2.0 * g.edge_count)


def modularity(g: Graph, spins) -> float:
    s = as_partition(g, spins).astype(np.float64)
    m = g.edge_count
    u, v = g.edges[:, 0], g.edges[:, 1]
    internal = 2.0 * np.dot(s[u], s[v])
    d = np.dot(g.degrees, s)
    return float((internal - d * d / (2.0 * m)) / (4.0 * m))


def _neighbor_spin_sums(g: Graph, s: np.ndarray) -> np.ndarray:
    u, v = g.edges[:, 0], g.edges[:, 1]
    out = np.zeros(g.node_count)
    np.add.at(out, u, s[v])
    np.add.at(out, v, s[u])
    return out


def all_gains(g: Graph, spins) -> np.ndarray:
    """Modularity change from flipping each vertex on its own.

    Uses the cached total ``D = sum_j k_j s_j`` so the batch costs O(n + m).
    """
    s = as_partition(g, spins).astype(np.float64)
    m = g.edge_count
    k = g.degrees.astype(np.float64)
    d = np.dot(k, s)
    field = _neighbor_spin_sums(g, s) - k / (2.0 * m) * (d - k * s)
    return -s * field / m


def vertex_gain(g: Graph, spins, i: int) -> float:
    s = as_partition(g, spins).astype(np.float64)
    if not 0 <= i < g.node_count:
        raise IndexOutOfRange(f"vertex {i} not in [0, {g.node_count})")
    m = g.edge_count
    k = g.degrees
    d = np.dot(k, s)
    field = s[g.neighbors(i)].sum() - k[i] / (2.0 * m) * (d - k[i] * s[i])
    return float(-s[i] * field / m)
