"""State sets, overlap reports, and projector bases.

Vectors are rows of an (n, dim) complex128 array, unit-normalized.  Gram
matrices in the evaluation paths use compensated (exact-sum) accumulation
for dims up to 16, keeping reported overlaps at the 1e-12 noise floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "StateSet",
    "OverlapReport",
    "ProjectorBasis",
    "gram_matrix",
    "max_pairwise_overlap",
    "one_way_wce",
]

TOL_NORM = 1e-12


@dataclass(frozen=True)
class StateSet:
    vectors: np.ndarray  # (count, dim) complex

    def __post_init__(self):
        v = np.asarray(self.vectors, dtype=np.complex128)
        if v.ndim != 2:
            raise ValueError("vectors must be a 2-D array (count x dim)")
        norms = np.linalg.norm(v, axis=1)
        if np.any(np.abs(norms - 1.0) > 1e-8):
            raise ValueError("state vectors must be unit norm")
        # snap to exact unit norm so downstream tolerances start clean
        v = v / norms[:, None]
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def count(self) -> int:
        return self.vectors.shape[0]

    def conj(self) -> "StateSet":
        return StateSet(np.conj(self.vectors))

    def to_payload(self) -> dict:
        return {
            "dim": self.dim,
            "count": self.count,
            "vectors": [[[float(z.real), float(z.imag)] for z in row]
                        for row in self.vectors],
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "StateSet":
        vecs = np.array(
            [[complex(re, im) for re, im in row] for row in payload["vectors"]],
            dtype=np.complex128)
        if vecs.shape != (payload["count"], payload["dim"]):
            raise ValueError("vector array does not match declared dim/count")
        return cls(vecs)


@dataclass(frozen=True)
class OverlapReport:
    max_overlap: float
    argmax: tuple[int, int]  # 1-based, lexicographically smallest maximizer
    mean_offdiag: float
    min_offdiag: float
    vacuous: bool = False


def _dot_compensated(u: np.ndarray, v: np.ndarray) -> complex:
    re = math.fsum((u.real * v.real + u.imag * v.imag).tolist())
    im = math.fsum((u.real * v.imag - u.imag * v.real).tolist())
    return complex(re, im)


def gram_matrix(states: StateSet) -> np.ndarray:
    """Inner products <psi_i|psi_j>; compensated summation for dim <= 16."""
    v = states.vectors
    n = states.count
    if states.dim > 16:
        return np.conj(v) @ v.T
    g = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        g[i, i] = 1.0
        for j in range(i + 1, n):
            val = _dot_compensated(v[i], v[j])
            g[i, j] = val
            g[j, i] = val.conjugate()
    return g


def max_pairwise_overlap(states: StateSet) -> OverlapReport:
    """Largest squared modulus |<psi_x|psi_y>|^2 over distinct pairs."""
    n = states.count
    if n < 2:
        return OverlapReport(0.0, (1, 1), 0.0, 0.0, vacuous=True)
    g = gram_matrix(states)
    s = np.abs(g) ** 2
    np.fill_diagonal(s, -1.0)
    flat = int(np.argmax(s))
    x, y = divmod(flat, n)
    best = float(s[x, y])
    off = s[s >= 0]
    return OverlapReport(best, (x + 1, y + 1), float(off.mean()), float(off.min()))


def one_way_wce(states: StateSet) -> float:
    """Worst-case error of the one-way strategy built on pure fingerprints.

    Equal to the maximal pairwise overlap; kept as a named operation because
    it is the strategy-level quantity.
    """
    return max_pairwise_overlap(states).max_overlap


@dataclass(frozen=True)
class ProjectorBasis:
    """Orthonormal columns spanning a projector's range."""

    basis: np.ndarray  # (ambient_dim, rank)

    def __post_init__(self):
        b = np.asarray(self.basis, dtype=np.complex128)
        if b.ndim != 2:
            raise ValueError("basis must be 2-D (ambient x rank)")
        gram = np.conj(b.T) @ b
        if not np.allclose(gram, np.eye(b.shape[1]), atol=1e-10):
            raise ValueError("basis columns are not orthonormal within 1e-10")
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def rank(self) -> int:
        return self.basis.shape[1]

    def matrix(self) -> np.ndarray:
        return self.basis @ np.conj(self.basis.T)

    def project_norm_sq(self, v: np.ndarray) -> float:
        amp = np.conj(self.basis.T) @ v
        return float(np.real(np.vdot(amp, amp)))

    def residual(self, v: np.ndarray) -> float:
        """Norm of the component of v outside the range."""
        inside = self.basis @ (np.conj(self.basis.T) @ v)
        return float(np.linalg.norm(v - inside))
