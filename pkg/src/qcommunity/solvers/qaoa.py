"""QAOA on a dense statevector simulator.

The register starts in the uniform superposition. Each layer applies the cost
phase ``exp(-i gamma C(z))`` to every basis amplitude and then the mixer
``exp(-i beta X)`` to every qubit. The expectation of ``C`` is maximized over
the angles classically; bitstrings sampled from the final state are scored
exactly and the best one is returned.

Basis index ``z`` uses the same encoding as the exact solver: qubit 0 is the
most significant bit and bit value 1 stands for spin -1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numba as nb
import numpy as np
from scipy.optimize import minimize

from ..errors import TooManyQubits
from ..subproblem import IsingSubproblem
from .base import SolverKind, SolverResult, code_to_spins

NM_XATOL = 1e-4
NM_MAX_EVALS = 200


class QaoaOptimizer(str, enum.Enum):
    GRID_THEN_NELDER_MEAD = "grid_then_nelder_mead"
    GRID_ONLY = "grid_only"


@dataclass(frozen=True)
class QaoaConfig:
    depth: int = 2
    samples: int = 1024
    optimizer: QaoaOptimizer = QaoaOptimizer.GRID_THEN_NELDER_MEAD
    grid_points_per_angle: int = 8
    max_qubits: int = 20

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.grid_points_per_angle < 1:
            raise ValueError("grid_points_per_angle must be >= 1")
        if self.max_qubits < 1:
            raise ValueError("max_qubits must be >= 1")
        object.__setattr__(self, "optimizer", QaoaOptimizer(self.optimizer))


@nb.njit(cache=True)
def _gray_energies(J, h):
    k = h.shape[0]
    out = np.empty(1 << k)
    s = np.ones(k)
    local = h.copy()
    value = 0.0
    for a in range(k):
        value += h[a]
        for b in range(k):
            local[a] += J[a, b]
            if b > a:
                value += J[a, b]
    out[0] = value
    code = 0
    for step in range(1, 1 << k):
        tz = 0
        x = step
        while (x & 1) == 0:
            x >>= 1
            tz += 1
        a = k - 1 - tz
        value -= 2.0 * s[a] * local[a]
        s[a] = -s[a]
        s2 = 2.0 * s[a]
        for b in range(k):
            local[b] += s2 * J[a, b]
        code ^= 1 << tz
        out[code] = value
    return out


def cost_vector(sp: IsingSubproblem) -> np.ndarray:
    """Objective value of every basis state, indexed by encoding."""
    return _gray_energies(sp.coupling_matrix(), np.asarray(sp.fields, dtype=np.float64))


def apply_mixer(psi: np.ndarray, beta: float, k: int) -> None:
    """In place: ``cos(beta) I - i sin(beta) X`` on each of the ``k`` qubits."""
    c, s = np.cos(beta), np.sin(beta)
    for q in range(k):
        v = psi.reshape(1 << q, 2, 1 << (k - 1 - q))
        lo = v[:, 0, :].copy()
        hi = v[:, 1, :]
        v[:, 0, :] = c * lo - 1j * s * hi
        v[:, 1, :] = c * hi - 1j * s * lo


def evolve(cost: np.ndarray, gammas: Sequence[float], betas: Sequence[float],
           norms: List[float] = None) -> np.ndarray:
    """Final statevector for the given angles.

    If ``norms`` is a list, the squared norm after each layer is appended to it.
    """
    dim = cost.shape[0]
    k = dim.bit_length() - 1
    psi = np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128)
    for gamma, beta in zip(gammas, betas):
        psi *= np.exp(-1j * gamma * cost)
        apply_mixer(psi, beta, k)
        if norms is not None:
            norms.append(float(np.vdot(psi, psi).real))
    return psi


def expectation(cost: np.ndarray, gammas, betas) -> float:
    psi = evolve(cost, gammas, betas)
    return float(np.dot(np.abs(psi) ** 2, cost))


@dataclass
class AngleSearch:
    gammas: np.ndarray
    betas: np.ndarray
    expectation: float
    evaluations: int = 0
    # Best full-depth expectation seen after each full-depth evaluation.
    best_trace: List[float] = field(default_factory=list)


def optimize_angles(cost: np.ndarray, cfg: QaoaConfig) -> AngleSearch:
    """Grid-seed the angles one layer at a time, then refine all of them jointly.

    The returned angles are the best full-depth point ever evaluated, so the
    refinement can never make the result worse than its seed.
    """
    p = cfg.depth
    g = cfg.grid_points_per_angle
    gamma_grid = np.pi * np.arange(g) / g
    beta_grid = 0.5 * np.pi * np.arange(g) / g

    gammas: List[float] = []
    betas: List[float] = []
    evaluations = 0
    seed_value = -np.inf
    for _ in range(p):
        best = (-np.inf, 0.0, 0.0)
        for gm in gamma_grid:
            for bt in beta_grid:
                val = expectation(cost, gammas + [gm], betas + [bt])
                evaluations += 1
                if val > best[0]:
                    best = (val, gm, bt)
        gammas.append(best[1])
        betas.append(best[2])
        seed_value = best[0]

    result = AngleSearch(np.array(gammas), np.array(betas), seed_value, evaluations,
                         [seed_value])
    if cfg.optimizer is QaoaOptimizer.GRID_ONLY:
        return result

    def negative(x):
        val = expectation(cost, x[:p], x[p:])
        result.evaluations += 1
        if val > result.expectation:
            result.expectation = val
            result.gammas = x[:p].copy()
            result.betas = x[p:].copy()
        result.best_trace.append(result.expectation)
        return -val

    x0 = np.concatenate([result.gammas, result.betas])
    minimize(negative, x0, method="Nelder-Mead",
             options={"xatol": NM_XATOL, "fatol": np.inf, "maxfev": NM_MAX_EVALS})
    return result


def _best_sample(sp: IsingSubproblem, codes: np.ndarray) -> Tuple[int, float]:
    k = sp.size
    uniq = np.unique(codes)
    bits = (uniq[:, None] >> np.arange(k - 1, -1, -1)) & 1
    S = 1.0 - 2.0 * bits
    J = sp.coupling_matrix()
    vals = S @ sp.fields + 0.5 * np.einsum("ia,ia->i", S @ J, S)
    # np.unique sorts, so argmax picks the smallest code among ties.
    i = int(np.argmax(vals))
    return int(uniq[i]), float(vals[i])


def solve_qaoa(sp: IsingSubproblem, cfg: QaoaConfig = None, rng_seed: int = 0) -> SolverResult:
    cfg = cfg or QaoaConfig()
    k = sp.size
    if k > cfg.max_qubits:
        raise TooManyQubits(
            f"subproblem needs {k} qubits but max_qubits is {cfg.max_qubits}; raise the cap to allow it"
        )
    cost = cost_vector(sp)
    search = optimize_angles(cost, cfg)

    norms: List[float] = []
    psi = evolve(cost, search.gammas, search.betas, norms)
    probs = np.abs(psi) ** 2
    probs /= probs.sum()
    rng = np.random.default_rng(rng_seed)
    codes = rng.choice(len(probs), size=cfg.samples, p=probs)
    code, _ = _best_sample(sp, codes)

    diagnostics = {
        "expectation": search.expectation,
        "evaluations": float(search.evaluations),
        "best_sample_probability": float(probs[code]),
        "max_norm_error": float(max(abs(nrm - 1.0) for nrm in norms)),
    }
    for layer, (gm, bt) in enumerate(zip(search.gammas, search.betas)):
        diagnostics[f"gamma_{layer}"] = float(gm)
        diagnostics[f"beta_{layer}"] = float(bt)
    return SolverResult.from_spins(sp, code_to_spins(code, k), SolverKind.QAOA, diagnostics)
