"""Minimax-overlap packing search for n lines in C^m.

Annealed smoothed-maximum descent: the hard max of the pairwise squared
overlaps is replaced by a softmax at temperature T; first-order steps on the
product of unit spheres (projection retraction) are taken while T is halved
whenever the true objective plateaus.  Restarts run as one batched tensor
and are reduced deterministically (best value, then lowest restart index).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import packing_bounds
from .states import StateSet, max_pairwise_overlap

__all__ = ["GrassmannConfig", "GrassmannResult", "grassmann_search"]


@dataclass(frozen=True)
class GrassmannConfig:
    restarts: int = 96
    iterations: int = 9000
    seed: int = 0
    step_size: float = 0.2
    temperature: float = 0.05
    plateau_window: int = 100
    min_temperature: float = 1e-10


@dataclass(frozen=True)
class GrassmannResult:
    states: StateSet
    overlap: float
    argmax: tuple[int, int]
    simplex_gap: float
    restart: int
    iterations: int


def _random_states(rng, restarts: int, n: int, m: int) -> np.ndarray:
    v = rng.normal(size=(restarts, n, m)) + 1j * rng.normal(size=(restarts, n, m))
    return v / np.linalg.norm(v, axis=2, keepdims=True)


def grassmann_search(n: int, m: int,
                     config: GrassmannConfig = GrassmannConfig()) -> GrassmannResult:
    """Minimize the maximal pairwise squared overlap of n unit vectors in C^m."""
    if m < 2 or n < m:
        raise ValueError("need n >= m >= 2")
    if n == m:
        eye = np.eye(m, dtype=np.complex128)
        return GrassmannResult(StateSet(eye), 0.0, (1, 2) if m > 1 else (1, 1),
                               0.0, 0, 0)
    rng = np.random.default_rng(config.seed)
    v = _random_states(rng, config.restarts, n, m)
    eye_mask = np.eye(n, dtype=bool)

    temp = np.full(config.restarts, config.temperature)
    lr = np.full(config.restarts, config.step_size)
    best_val = np.full(config.restarts, np.inf)
    best_v = v.copy()
    last_improve = np.zeros(config.restarts, dtype=int)

    for it in range(config.iterations):
        g = np.einsum("rna,rka->rnk", v, np.conj(v))
        s = np.abs(g) ** 2
        s[:, eye_mask] = -np.inf
        cur = s.reshape(config.restarts, -1).max(axis=1)

        improved = cur < best_val - 1e-12
        if np.any(improved):
            best_val = np.where(improved, cur, best_val)
            best_v[improved] = v[improved]
            last_improve[improved] = it
        stalled = (it - last_improve) >= config.plateau_window
        if np.any(stalled):
            temp[stalled] = np.maximum(temp[stalled] * 0.5,
                                       config.min_temperature)
            lr[stalled] = np.maximum(lr[stalled] * 0.7, 1e-4)
            last_improve[stalled] = it

        w = np.exp((s - cur[:, None, None]) / temp[:, None, None])
        w[:, eye_mask] = 0.0
        w /= w.reshape(config.restarts, -1).sum(axis=1)[:, None, None]

        a = 2.0 * w * np.conj(g)
        grad = np.einsum("rij,ria->rja", a, v)
        inner = np.einsum("rna,rna->rn", np.conj(v), grad)
        grad = grad - inner[:, :, None] * v
        v = v - lr[:, None, None] * grad
        v = v / np.linalg.norm(v, axis=2, keepdims=True)

    # deterministic reduction: best value, ties to the lowest restart index
    ri = int(np.argmin(best_val))
    states = StateSet(best_v[ri])
    rep = max_pairwise_overlap(states)
    simp = packing_bounds(n, m).simplex
    return GrassmannResult(states, rep.max_overlap, rep.argmax,
                           rep.max_overlap - simp, ri, config.iterations)
