"""Interchangeable subproblem backends.

All backends share the call signature ``solve(sp, config, rng_seed)`` and
return a :class:`SolverResult`. New backends plug in via
:func:`register_solver`.
"""

from .anneal import AnnealConfig, solve_anneal
from .base import (
    SolverKind,
    SolverResult,
    available_solvers,
    code_to_spins,
    get_solver,
    register_solver,
    spins_to_code,
)
from .exact import MAX_EXACT_VARIABLES, solve_exact
from .qaoa import QaoaConfig, QaoaOptimizer, solve_qaoa

register_solver(SolverKind.EXACT, solve_exact)
register_solver(SolverKind.ANNEAL, solve_anneal)
register_solver(SolverKind.QAOA, solve_qaoa)

__all__ = [
    "AnnealConfig",
    "MAX_EXACT_VARIABLES",
    "QaoaConfig",
    "QaoaOptimizer",
    "SolverKind",
    "SolverResult",
    "available_solvers",
    "code_to_spins",
    "get_solver",
    "register_solver",
    "solve_anneal",
    "solve_exact",
    "solve_qaoa",
    "spins_to_code",
]
