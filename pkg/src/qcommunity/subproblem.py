"""Restricting the global problem to a small vertex subset.

Vertices outside the chosen subset keep their current spins and act as
boundary conditions. They enter the reduced Ising problem only through the
linear fields, so the reduced objective

    Q(sigma) = sum_{a<b} J_ab sigma_a sigma_b + sum_a h_a sigma_a

differs from ``4m`` times the modularity of the combined partition by a
constant ``offset``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch, EmptySubset, IndexOutOfRange, InvalidSpins
from .graph_io import Graph
from .modularity import all_gains, as_partition

DEFAULT_SUBPROBLEM_SIZE = 25


@dataclass(frozen=True, eq=False)
class IsingSubproblem:
    """Reduced maximization problem over the spins of ``subset``.

    ``couplings`` maps position pairs ``(a, b)`` with ``a < b`` (positions in
    ``subset``, not vertex ids) to ``J_ab``; zero couplings are omitted.
    """

    subset: Tuple[int, ...]
    couplings: Dict[Tuple[int, int], float]
    fields: np.ndarray
    offset: float
    edge_count_m: int

    @property
    def size(self) -> int:
        return len(self.subset)

    def coupling_matrix(self) -> np.ndarray:
        """Dense symmetric ``J`` with zero diagonal, for the solver kernels."""
        k = self.size
        J = np.zeros((k, k))
        for (a, b), val in self.couplings.items():
            J[a, b] = J[b, a] = val
        return J

    def to_modularity(self, objective: float) -> float:
        return (objective + self.offset) / (4.0 * self.edge_count_m)


def select_subset(g: Graph, spins, k: int) -> Tuple[int, ...]:
    """The ``min(k, n)`` vertices with the largest flip gain.

    Sorted by descending gain, ties going to the smaller index. Vertices with
    negative gain still fill the subset when there are not enough positive ones.
    """
    if k < 1:
        raise ValueError("subset size must be at least 1")
    gains = all_gains(g, spins)
    order = np.lexsort((np.arange(g.node_count), -gains))
    return tuple(int(i) for i in order[: min(k, g.node_count)])


def _check_subset(g: Graph, subset: Sequence[int]) -> np.ndarray:
    X = np.asarray(subset, dtype=np.int64).reshape(-1)
    if len(X) == 0:
        raise EmptySubset("subset is empty")
    if X.min() < 0 or X.max() >= g.node_count:
        raise IndexOutOfRange("subset vertex outside the graph")
    if len(np.unique(X)) != len(X):
        raise ValueError("subset contains duplicates")
    return X


def build_subproblem(g: Graph, spins, subset: Sequence[int]) -> IsingSubproblem:
    s = as_partition(g, spins).astype(np.float64)
    X = _check_subset(g, subset)
    m = g.edge_count
    two_m = 2.0 * m
    deg = g.degrees.astype(np.float64)

    inside = np.zeros(g.node_count, dtype=bool)
    inside[X] = True
    pos = np.full(g.node_count, -1, dtype=np.int64)
    pos[X] = np.arange(len(X))

    s_out = np.where(inside, 0.0, s)
    d_out = np.dot(deg, s_out)

    u, v = g.edges[:, 0], g.edges[:, 1]
    # Neighbour sums over boundary vertices only.
    boundary_sum = np.zeros(g.node_count)
    np.add.at(boundary_sum, u, s_out[v])
    np.add.at(boundary_sum, v, s_out[u])
    fields = 2.0 * (boundary_sum[X] - deg[X] * d_out / two_m)

    both_out = ~inside[u] & ~inside[v]
    offset = (
        -np.dot(deg[X], deg[X]) / two_m
        + 2.0 * np.dot(s[u[both_out]], s[v[both_out]])
        - d_out * d_out / two_m
    )

    k = len(X)
    dense = -2.0 * np.outer(deg[X], deg[X]) / two_m
    both_in = inside[u] & inside[v]
    for a, b in zip(pos[u[both_in]], pos[v[both_in]]):
        dense[a, b] += 2.0
        dense[b, a] += 2.0
    ia, ib = np.triu_indices(k, 1)
    vals = dense[ia, ib]
    nz = vals != 0.0
    couplings = {
        (int(a), int(b)): float(val) for a, b, val in zip(ia[nz], ib[nz], vals[nz])
    }

    fields.setflags(write=False)
    return IsingSubproblem(
        subset=tuple(int(x) for x in X),
        couplings=couplings,
        fields=fields,
        offset=float(offset),
        edge_count_m=m,
    )


def _check_sigma(sp: IsingSubproblem, sigma) -> np.ndarray:
    sig = np.asarray(sigma)
    if sig.shape != (sp.size,):
        raise DimensionMismatch(f"expected {sp.size} spins, got shape {sig.shape}")
    if not np.all((sig == 1) | (sig == -1)):
        raise InvalidSpins("spins must be -1 or +1")
    return sig.astype(np.float64)


def subproblem_objective(sp: IsingSubproblem, sigma) -> float:
    sig = _check_sigma(sp, sigma)
    total = float(np.dot(sp.fields, sig))
    for (a, b), val in sp.couplings.items():
        total += val * sig[a] * sig[b]
    return total


def apply_solution(spins, subset: Sequence[int], sigma) -> np.ndarray:
    """Copy of ``spins`` with the subset positions overwritten by ``sigma``."""
    out = np.array(spins, dtype=np.int8)
    X = np.asarray(subset, dtype=np.int64).reshape(-1)
    sig = np.asarray(sigma)
    if sig.shape != X.shape:
        raise DimensionMismatch(f"{len(X)} subset vertices but {sig.size} spins")
    out[X] = sig
    return out
