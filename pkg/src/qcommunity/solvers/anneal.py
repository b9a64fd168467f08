"""Classical simulated annealing backend.

Single-spin-flip Metropolis chains with a geometric temperature schedule,
used where a quantum annealer would otherwise sit behind the same interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numba as nb
import numpy as np

from ..subproblem import IsingSubproblem, subproblem_objective
from .base import SolverKind, SolverResult


@dataclass(frozen=True)
class AnnealConfig:
    """Annealing schedule. Unset temperatures are derived from the instance:
    ``t_initial`` is the largest absolute local field bound
    ``max_a(|h_a| + sum_b |J_ab|)`` and ``t_final`` is ``1e-3 * t_initial``."""

    sweeps: int = 1000
    restarts: int = 10
    t_initial: Optional[float] = None
    t_final: Optional[float] = None

    def __post_init__(self):
        if self.sweeps < 1:
            raise ValueError("sweeps must be >= 1")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        for name in ("t_initial", "t_final"):
            val = getattr(self, name)
            if val is not None and not val > 0:
                raise ValueError(f"{name} must be positive")
        if self.t_initial is not None and self.t_final is not None:
            if not self.t_final < self.t_initial:
                raise ValueError("t_final must be below t_initial")

    def temperatures(self, J: np.ndarray, h: np.ndarray) -> np.ndarray:
        t_hi = self.t_initial
        if t_hi is None:
            t_hi = float(np.max(np.abs(h) + np.abs(J).sum(axis=1))) if len(h) else 0.0
            if t_hi <= 0.0:
                t_hi = 1.0
        t_lo = self.t_final if self.t_final is not None else 1e-3 * t_hi
        if not t_lo < t_hi:
            raise ValueError("t_final must be below t_initial")
        if self.sweeps == 1:
            return np.array([t_hi])
        return t_hi * (t_lo / t_hi) ** (np.arange(self.sweeps) / (self.sweeps - 1))


@nb.njit(cache=True)
def _metropolis_chain(J, h, spins, uniforms, temps):
    k = h.shape[0]
    s = spins.copy()
    local = h.copy()
    value = 0.0
    for a in range(k):
        for b in range(k):
            local[a] += J[a, b] * s[b]
    for a in range(k):
        value += s[a] * (h[a] + 0.5 * (local[a] - h[a]))
    best = value
    best_s = s.copy()
    for sweep in range(temps.shape[0]):
        T = temps[sweep]
        for a in range(k):
            delta = -2.0 * s[a] * local[a]
            if delta >= 0.0 or uniforms[sweep, a] < np.exp(delta / T):
                s[a] = -s[a]
                value += delta
                s2 = 2.0 * s[a]
                for b in range(k):
                    local[b] += s2 * J[a, b]
                if value > best:
                    best = value
                    best_s[:] = s
    return best_s


def solve_anneal(sp: IsingSubproblem, cfg: AnnealConfig = None, rng_seed: int = 0) -> SolverResult:
    """Best configuration seen over ``cfg.restarts`` independent chains.

    Restart ``r`` draws its start state and acceptance uniforms from its own
    generator seeded with ``rng_seed + r``, so results do not depend on the
    order in which restarts run.
    """
    cfg = cfg or AnnealConfig()
    k = sp.size
    J = sp.coupling_matrix()
    h = np.asarray(sp.fields, dtype=np.float64)
    temps = cfg.temperatures(J, h)

    best_spins, best_val = None, -np.inf
    for r in range(cfg.restarts):
        rng = np.random.default_rng(rng_seed + r)
        start = rng.choice(np.array([-1.0, 1.0]), size=k)
        uniforms = rng.random((cfg.sweeps, k))
        cand = _metropolis_chain(J, h, start, uniforms, temps).astype(np.int8)
        val = subproblem_objective(sp, cand)
        if val > best_val:
            best_spins, best_val = cand, val

    return SolverResult.from_spins(
        sp,
        best_spins,
        SolverKind.ANNEAL,
        {"sweeps": float(cfg.sweeps), "restarts": float(cfg.restarts),
         "t_initial": float(temps[0]), "t_final": float(temps[-1])},
    )
