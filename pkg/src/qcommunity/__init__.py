"""Modularity bipartitioning by hybrid local search over small Ising subproblems."""

from .errors import (
    DimensionMismatch,
    EmptySubset,
    IndexOutOfRange,
    InvalidSpins,
    MalformedLine,
    NoEdges,
    QCommunityError,
    TooManyQubits,
    TooManyVariables,
)
from .graph_io import Graph, format_edge_list, parse_edge_list, read_edge_list
from .modularity import all_gains, as_partition, modularity, vertex_gain
from .search import SearchConfig, SearchReport, initial_guess, run_local_search
from .solvers import (
    AnnealConfig,
    QaoaConfig,
    SolverKind,
    SolverResult,
    register_solver,
    solve_anneal,
    solve_exact,
    solve_qaoa,
)
from .subproblem import (
    IsingSubproblem,
    apply_solution,
    build_subproblem,
    select_subset,
    subproblem_objective,
)

__version__ = "0.1.0"
