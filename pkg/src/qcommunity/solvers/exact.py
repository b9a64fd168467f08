"""Exhaustive maximization by Gray-code enumeration.

The last ``INNER_BITS`` positions form an inner block whose ``2**t``
assignments are scored from cached local fields at every step of the outer
Gray code, so each outer step costs O(k + 2**t) instead of ``2**t`` separate
O(k) flips.
"""

from __future__ import annotations

import numba as nb
import numpy as np

from ..errors import TooManyVariables
from ..subproblem import IsingSubproblem
from .base import SolverKind, SolverResult, code_to_spins

MAX_EXACT_VARIABLES = 30
INNER_BITS = 6


@nb.njit(cache=True)
def _gray_maximize(J, h, t, tol):
    k = h.shape[0]
    o = k - t
    n_inner = 1 << t

    # Inner block: pair energies and spins for every inner code.
    inner_spin = np.empty((n_inner, t))
    inner_pair = np.zeros(n_inner)
    for c in range(n_inner):
        for j in range(t):
            inner_spin[c, j] = 1.0 - 2.0 * ((c >> (t - 1 - j)) & 1)
        acc = 0.0
        for j in range(t):
            for l in range(j + 1, t):
                acc += J[o + j, o + l] * inner_spin[c, j] * inner_spin[c, l]
        inner_pair[c] = acc

    sigma = np.ones(o)
    energy = 0.0
    local = np.empty(o)
    for a in range(o):
        energy += h[a]
        acc = h[a]
        for b in range(o):
            if b != a:
                acc += J[a, b]
                if b > a:
                    energy += J[a, b]
        local[a] = acc
    inner_field = np.empty(t)
    for j in range(t):
        acc = h[o + j]
        for b in range(o):
            acc += J[o + j, b]
        inner_field[j] = acc

    lin = np.empty(n_inner)
    best = -np.inf
    best_code = -1
    outer_code = 0
    for step in range(1 << o):
        if step > 0:
            tz = 0
            x = step
            while (x & 1) == 0:
                x >>= 1
                tz += 1
            a = o - 1 - tz
            energy -= 2.0 * sigma[a] * local[a]
            sigma[a] = -sigma[a]
            s2 = 2.0 * sigma[a]
            for b in range(o):
                local[b] += s2 * J[a, b]
            for j in range(t):
                inner_field[j] += s2 * J[o + j, a]
            outer_code ^= 1 << tz

        acc = 0.0
        for j in range(t):
            acc += inner_field[j]
        lin[0] = acc
        for c in range(1, n_inner):
            r = 0
            x = c
            while (x & 1) == 0:
                x >>= 1
                r += 1
            lin[c] = lin[c ^ (1 << r)] - 2.0 * inner_field[t - 1 - r]

        base = outer_code << t
        for c in range(n_inner):
            val = energy + inner_pair[c] + lin[c]
            code = base | c
            if val > best + tol:
                best = val
                best_code = code
            elif val >= best - tol and code < best_code:
                if val > best:
                    best = val
                best_code = code
    return best_code, best


def solve_exact(sp: IsingSubproblem, cfg=None, rng_seed: int = 0) -> SolverResult:
    """Global maximizer of the subproblem objective.

    Among equal maximizers the one with the smallest encoding wins, where
    position 0 is the most significant bit and bit 1 stands for spin -1.
    ``cfg`` and ``rng_seed`` are accepted for interface uniformity and ignored.
    """
    k = sp.size
    if k > MAX_EXACT_VARIABLES:
        raise TooManyVariables(f"exact solver is capped at {MAX_EXACT_VARIABLES} variables, got {k}")
    J = sp.coupling_matrix()
    h = np.asarray(sp.fields, dtype=np.float64)
    scale = np.abs(h).sum() + 0.5 * np.abs(J).sum()
    tol = 1e-10 * max(scale, 1.0)
    code, _ = _gray_maximize(J, h, min(INNER_BITS, k), tol)
    return SolverResult.from_spins(
        sp, code_to_spins(int(code), k), SolverKind.EXACT, {"assignments": float(2**k)}
    )
