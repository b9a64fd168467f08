"""Independent oracles and generators shared by the tests.

The oracles deliberately avoid the package's fast paths: modularity is the
plain dense double sum over ``B``, and optima come from itertools enumeration.
"""

import itertools

import numpy as np

from qcommunity import Graph, IsingSubproblem, subproblem_objective


def random_graph(rng, n, p=None):
    """G(n, p) with at least one edge."""
    if p is None:
        p = rng.uniform(0.05, 0.6)
    while True:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        if pairs:
            return Graph(n, np.array(pairs))


def random_spins(rng, n):
    return rng.choice(np.array([-1, 1]), size=n)


def dense_B(g):
    n = g.node_count
    A = np.zeros((n, n))
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1.0
    k = A.sum(axis=1)
    return A - np.outer(k, k) / (2.0 * g.edge_count)


def dense_modularity(g, s):
    B = dense_B(g)
    total = 0.0
    n = g.node_count
    for i in range(n):
        for j in range(n):
            total += B[i, j] * s[i] * s[j]
    return total / (4.0 * g.edge_count)


def brute_force_optimum(g):
    """Best bipartition modularity, vertex 0 pinned to +1 (global flip symmetry)."""
    B = dense_B(g)
    n = g.node_count
    best = -np.inf
    for rest in itertools.product([1.0, -1.0], repeat=n - 1):
        s = np.array((1.0,) + rest)
        best = max(best, s @ B @ s)
    return best / (4.0 * g.edge_count)


def naive_ising_max(sp):
    """Maximum objective over all 2**k spin vectors, by plain enumeration."""
    return max(
        subproblem_objective(sp, np.array(s)) for s in itertools.product([1, -1], repeat=sp.size)
    )


def random_ising(rng, k, offset=0.0):
    """IsingSubproblem with Gaussian couplings and fields (not tied to a graph)."""
    couplings = {(a, b): float(rng.normal()) for a in range(k) for b in range(a + 1, k)}
    return IsingSubproblem(
        subset=tuple(range(k)),
        couplings=couplings,
        fields=rng.normal(size=k),
        offset=offset,
        edge_count_m=1,
    )


def barbell():
    """Two triangles joined by the bridge 2-3."""
    return Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
