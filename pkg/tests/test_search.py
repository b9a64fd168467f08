import numpy as np
import pytest

from qcommunity import (
    AnnealConfig,
    Graph,
    QaoaConfig,
    SearchConfig,
    SolverKind,
    TooManyQubits,
    build_subproblem,
    initial_guess,
    modularity,
    run_local_search,
    select_subset,
    solve_exact,
    apply_solution,
)

from .helpers import barbell, brute_force_optimum, random_graph


def test_initial_guess_deterministic(rng):
    g = random_graph(rng, 20)
    assert np.array_equal(initial_guess(g, 7), initial_guess(g, 7))
    assert set(initial_guess(g, 7).tolist()) <= {-1, 1}


def test_initial_guess_two_vertices(single_edge):
    seen = {tuple(initial_guess(single_edge, seed)) for seed in range(200)}
    assert seen == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


def test_initial_guess_balanced():
    g = Graph.from_edges([(i, i + 1) for i in range(9)])
    draws = np.array([initial_guess(g, seed) for seed in range(10_000)])
    freq = (draws == 1).mean(axis=0)
    assert np.all(np.abs(freq - 0.5) <= 0.02)


def test_single_edge_optimum_is_zero(single_edge):
    for seed in range(6):
        rep = run_local_search(single_edge, SearchConfig(seed=seed))
        assert rep.best_modularity == 0.0


def test_full_subset_exact_is_global(rng):
    for _ in range(4):
        n = int(rng.integers(4, 11))
        g = random_graph(rng, n)
        target = brute_force_optimum(g)
        for seed in range(3):
            rep = run_local_search(g, SearchConfig(backend="exact", subproblem_size=n, seed=seed))
            assert rep.best_modularity == pytest.approx(target, abs=1e-10)
            assert rep.accepted_moves <= 1
            assert rep.solver_calls == rep.iterations == rep.accepted_moves + 1


def test_report_contract(rng):
    g = random_graph(rng, 40, p=0.15)
    cfg = SearchConfig(backend="exact", subproblem_size=6, max_iters=50, seed=3)
    rep = run_local_search(g, cfg)
    assert rep.solver_calls <= cfg.max_iters
    values = [v for _, v in rep.modularity_trace]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert rep.accepted_moves == len(rep.modularity_trace)
    assert rep.best_modularity == pytest.approx(modularity(g, rep.best_partition), abs=1e-12)
    if values:
        assert values[-1] == rep.best_modularity
    assert rep.wall_time_seconds >= 0.0


def test_exact_result_is_fixed_point(rng):
    g = random_graph(rng, 40, p=0.15)
    rep = run_local_search(g, SearchConfig(backend="exact", subproblem_size=8, seed=1))
    s = rep.best_partition
    X = select_subset(g, s, 8)
    cand = apply_solution(s, X, solve_exact(build_subproblem(g, s, X)).spins)
    assert modularity(g, cand) <= rep.best_modularity + 1e-12


def test_max_iters_bounds_calls(rng):
    g = random_graph(rng, 40, p=0.2)
    rep = run_local_search(g, SearchConfig(backend="exact", subproblem_size=3, max_iters=2, seed=0))
    assert rep.iterations <= 2 and rep.solver_calls <= 2


def test_patience_defaults():
    assert SearchConfig(backend="exact").effective_patience == 1
    assert SearchConfig(backend="anneal").effective_patience == 5
    assert SearchConfig(backend="qaoa", patience=2).effective_patience == 2
    assert isinstance(SearchConfig(backend="anneal").effective_backend_config, AnnealConfig)


@pytest.mark.parametrize("kwargs", [dict(subproblem_size=0), dict(max_iters=0), dict(patience=0)])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        SearchConfig(**kwargs)


def test_anneal_and_qaoa_backends_run():
    g = barbell()
    rep = run_local_search(g, SearchConfig(backend="anneal", subproblem_size=6, seed=2,
                                           backend_config=AnnealConfig(sweeps=100, restarts=3)))
    assert rep.best_modularity == pytest.approx(5 / 14, abs=1e-10)
    assert rep.solver_calls >= 5
    rep = run_local_search(g, SearchConfig(backend="qaoa", subproblem_size=4, seed=2,
                                           backend_config=QaoaConfig(depth=1, samples=128)))
    assert rep.best_modularity == pytest.approx(modularity(g, rep.best_partition), abs=1e-12)


def test_qaoa_cap_propagates():
    g = random_graph(np.random.default_rng(0), 30, p=0.2)
    with pytest.raises(TooManyQubits):
        run_local_search(g, SearchConfig(backend=SolverKind.QAOA, subproblem_size=25))


def test_search_deterministic(rng):
    g = random_graph(rng, 30, p=0.2)
    cfg = SearchConfig(backend="anneal", subproblem_size=7, seed=9,
                       backend_config=AnnealConfig(sweeps=60, restarts=2))
    a, b = run_local_search(g, cfg), run_local_search(g, cfg)
    assert np.array_equal(a.best_partition, b.best_partition)
    assert (a.best_modularity, a.iterations, a.solver_calls, a.modularity_trace) == (
        b.best_modularity, b.iterations, b.solver_calls, b.modularity_trace)
