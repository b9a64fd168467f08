from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

import numpy as np

from ..subproblem import IsingSubproblem, subproblem_objective


class SolverKind(str, enum.Enum):
    EXACT = "exact"
    ANNEAL = "anneal"
    QAOA = "qaoa"


@dataclass(frozen=True, eq=False)
class SolverResult:
    """Spins over the subset plus the objective they score.

    Use :meth:`from_spins`; it re-evaluates the objective so backends cannot
    report a value their spins do not attain.
    """

    spins: np.ndarray
    objective: float
    solver_kind: SolverKind
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_spins(cls, sp: IsingSubproblem, spins, kind, diagnostics=None) -> "SolverResult":
        sig = np.asarray(spins, dtype=np.int8).copy()
        sig.setflags(write=False)
        return cls(
            spins=sig,
            objective=subproblem_objective(sp, sig),
            solver_kind=SolverKind(kind),
            diagnostics=dict(diagnostics or {}),
        )


# Every backend is called as solve(sp, config, rng_seed) -> SolverResult.
Solver = Callable[[IsingSubproblem, Optional[Any], int], SolverResult]

_REGISTRY: Dict[str, Solver] = {}


def register_solver(name: str, solver: Solver) -> None:
    """Make a backend available to :func:`get_solver` (and so to the search)."""
    _REGISTRY[str(getattr(name, "value", name))] = solver


def get_solver(name) -> Solver:
    key = str(getattr(name, "value", name))
    try:
        return _REGISTRY[key]
    except KeyError:
        raise KeyError(f"unknown solver backend {key!r}; known: {sorted(_REGISTRY)}") from None


def available_solvers():
    return sorted(_REGISTRY)


def code_to_spins(code: int, k: int) -> np.ndarray:
    """Spins for a bit encoding where position 0 is the most significant bit
    and bit value 1 means spin -1."""
    bits = (code >> np.arange(k - 1, -1, -1)) & 1
    return (1 - 2 * bits).astype(np.int8)


def spins_to_code(spins) -> int:
    code = 0
    for s in spins:
        code = (code << 1) | (1 if s < 0 else 0)
    return code
