import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcommunity import DimensionMismatch, Graph, IndexOutOfRange, InvalidSpins, all_gains, modularity, vertex_gain
from qcommunity.modularity import modularity_entry

from .helpers import barbell, dense_B, dense_modularity, random_graph, random_spins


def test_constant_partition_on_triangle_is_zero(triangle):
    assert modularity(triangle, [1, 1, 1]) == pytest.approx(0.0, abs=1e-15)


def test_barbell_split():
    g = barbell()
    s = [1, 1, 1, -1, -1, -1]
    assert dense_modularity(g, s) == pytest.approx(5 / 14, abs=1e-15)
    assert modularity(g, s) == pytest.approx(5 / 14, abs=1e-12)


def test_single_edge_split(single_edge):
    assert np.allclose(dense_B(single_edge), [[-0.5, 0.5], [0.5, -0.5]])
    assert modularity(single_edge, [1, -1]) == pytest.approx(-0.5, abs=1e-15)


def test_dimension_and_value_checks(triangle):
    with pytest.raises(DimensionMismatch):
        modularity(triangle, [1, 1])
    with pytest.raises(InvalidSpins):
        modularity(triangle, [1, 0, 1])
    with pytest.raises(DimensionMismatch):
        all_gains(triangle, [1, 1, 1, 1])
    with pytest.raises(IndexOutOfRange):
        vertex_gain(triangle, [1, 1, 1], 3)


def test_modularity_entry_matches_dense(rng):
    g = random_graph(rng, 12)
    B = dense_B(g)
    for i in range(12):
        for j in range(12):
            assert modularity_entry(g, i, j) == pytest.approx(B[i, j], abs=1e-15)


def test_isolated_vertex_gain_zero():
    g = Graph(4, np.array([[0, 1], [1, 2]]))
    s = [1, -1, 1, -1]
    assert vertex_gain(g, s, 3) == 0.0
    assert all_gains(g, s)[3] == 0.0


def test_single_edge_gain(single_edge):
    assert vertex_gain(single_edge, [1, 1], 0) == pytest.approx(-0.5, abs=1e-15)


def test_triangle_gains_symmetric(triangle):
    gains = all_gains(triangle, [1, 1, 1])
    assert np.ptp(gains) == 0.0


def test_gain_equals_flip_difference(rng):
    for _ in range(10):
        n = int(rng.integers(2, 60))
        g = random_graph(rng, n)
        s = random_spins(rng, n)
        base = modularity(g, s)
        gains = all_gains(g, s)
        for i in range(n):
            flipped = s.copy()
            flipped[i] = -flipped[i]
            expected = modularity(g, flipped) - base
            assert vertex_gain(g, s, i) == pytest.approx(expected, abs=1e-12)
            assert gains[i] == pytest.approx(expected, abs=1e-12)


def test_fast_path_matches_dense_sum(rng):
    for _ in range(10):
        n = int(rng.integers(2, 40))
        g = random_graph(rng, n)
        s = random_spins(rng, n)
        assert modularity(g, s) == pytest.approx(dense_modularity(g, s), abs=1e-10)


graphs_and_spins = st.integers(2, 25).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.integers(0, 2**32 - 1),
        st.lists(st.sampled_from([-1, 1]), min_size=n, max_size=n),
    )
)


@settings(max_examples=60, deadline=None)
@given(graphs_and_spins)
def test_flip_invariance_and_range(args):
    n, seed, spins = args
    g = random_graph(np.random.default_rng(seed), n)
    s = np.array(spins)
    q = modularity(g, s)
    assert modularity(g, -s) == q
    assert -1.0 <= q <= 1.0
    assert modularity(g, np.ones(n)) == pytest.approx(0.0, abs=1e-12)
    assert modularity(g, -np.ones(n)) == pytest.approx(0.0, abs=1e-12)
