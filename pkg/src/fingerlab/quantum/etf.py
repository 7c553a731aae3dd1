"""Equiangular tight frame verification, completion, and constructions."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .states import StateSet, gram_matrix

__all__ = [
    "EtfReport",
    "check_etf",
    "etf_complement",
    "simplex_etf",
    "trine_etf",
    "sic_dim2",
    "icosahedron_etf",
    "difference_set_etf",
    "sic_dim3",
    "conference_etf_dim4",
    "states_from_gram",
]


@dataclass(frozen=True)
class EtfReport:
    ok: bool
    equiangular_ok: bool
    tight_ok: bool
    target_overlap: float
    max_angle_deviation: float
    max_frame_deviation: float

    def __bool__(self) -> bool:
        return self.ok


def check_etf(states: StateSet, tol: float = 1e-10) -> EtfReport:
    """Equiangularity at (n-m)/(m(n-1)) and the tight-frame condition.

    Both conditions are checked; the report records which one failed.
    """
    n, m = states.count, states.dim
    target = (n - m) / (m * (n - 1)) if n > 1 else 0.0
    g = gram_matrix(states)
    s = np.abs(g) ** 2
    off = s[~np.eye(n, dtype=bool)]
    dev_angle = float(np.max(np.abs(off - target))) if n > 1 else 0.0
    v = states.vectors
    frame = v.T @ np.conj(v)  # sum of the outer products |psi><psi|
    dev_frame = float(np.max(np.abs(frame - (n / m) * np.eye(m))))
    eq_ok = dev_angle <= tol
    tight_ok = dev_frame <= tol * n
    return EtfReport(eq_ok and tight_ok, eq_ok, tight_ok, target,
                     dev_angle, dev_frame)


def states_from_gram(gram: np.ndarray, m: int) -> StateSet:
    """Synthesize unit vectors in C^m realizing a PSD rank-m Gram matrix."""
    w, u = np.linalg.eigh(gram)
    idx = np.argsort(w)[::-1][:m]
    w_top = w[idx]
    if np.any(w_top < -1e-9):
        raise ValueError("gram matrix is not PSD")
    fac = u[:, idx] * np.sqrt(np.maximum(w_top, 0.0))
    vecs = np.conj(fac)
    vecs = vecs / np.linalg.norm(vecs, axis=1)[:, None]
    return StateSet(_canonical_phases(vecs))


def _canonical_phases(vecs: np.ndarray) -> np.ndarray:
    """Rotate each row's global phase so its largest entry is real positive."""
    out = vecs.copy()
    for i, row in enumerate(out):
        kmax = int(np.argmax(np.abs(row)))
        z = row[kmax]
        if abs(z) > 0:
            out[i] = row * (np.conj(z) / abs(z))
    return out


def etf_complement(states: StateSet, tol: float = 1e-10) -> StateSet:
    """The size-n ETF in dimension n-m carried by any unitary completion.

    The synthesis matrix X (m x n, orthonormal rows) is completed to a
    unitary by deterministic Gram-Schmidt over standard basis vectors; the
    appended rows Y give states with <j|chi_k> = sqrt(n/(n-m)) Y_jk.  Inner
    products satisfy <chi_j|chi_k> = -(m/(n-m)) <xi_j|xi_k> for j != k, the
    exact sign flip in the n = 2m case.
    """
    rep = check_etf(states, tol=max(tol, 1e-9))
    if not rep:
        raise ValueError("input is not an equiangular tight frame")
    n, m = states.count, states.dim
    if n <= m:
        raise ValueError("complement needs n > m")
    x = math.sqrt(m / n) * states.vectors.T  # m x n, orthonormal rows
    rows = [x[i] for i in range(m)]
    for e in range(n):
        if len(rows) == n:
            break
        cand = np.zeros(n, dtype=np.complex128)
        cand[e] = 1.0
        for r in rows:
            cand = cand - r * np.vdot(r, cand)
        nrm = np.linalg.norm(cand)
        if nrm > 1e-7:
            rows.append(cand / nrm)
    if len(rows) != n:
        raise AssertionError("unitary completion failed")
    y = np.array(rows[m:])
    # states are the scaled columns of Y; per-state phase twiddling would
    # break the sign-flip relation below, so none is applied
    chi = math.sqrt(n / (n - m)) * y.T
    out = StateSet(chi)
    rep2 = check_etf(out, tol=max(tol, 1e-9))
    if not rep2:
        raise AssertionError("completion is not an ETF")
    g_in = gram_matrix(states)
    g_out = gram_matrix(out)
    scale = m / (n - m)
    dev = np.abs(g_out + scale * g_in)
    np.fill_diagonal(dev, 0.0)
    if float(dev.max()) > 1e-10:
        raise AssertionError("completion violates the sign-flip relation")
    return out


# ---------------------------------------------------------------------------
# analytic constructions (bundled state files are generated from these)
# ---------------------------------------------------------------------------


def trine_etf() -> StateSet:
    """Three equiangular unit vectors in dimension 2 (overlap 1/4)."""
    r3 = math.sqrt(3.0) / 2
    return StateSet(np.array([[1, 0], [-0.5, r3], [-0.5, -r3]],
                             dtype=np.complex128))


def sic_dim2() -> StateSet:
    """Four dimension-2 states at constant overlap 1/3 (tetrahedron)."""
    w = np.exp(2j * np.pi / 3)
    a, b = 1 / math.sqrt(3), math.sqrt(2 / 3)
    vecs = [[1, 0]] + [[a, b * w**k] for k in range(3)]
    return StateSet(np.array(vecs, dtype=np.complex128))


def simplex_etf(m: int) -> StateSet:
    """m+1 unit vectors in C^m with constant overlap 1/m^2 (regular simplex)."""
    n = m + 1
    g = np.full((n, n), -1.0 / m)
    np.fill_diagonal(g, 1.0)
    return states_from_gram(g, m)


def icosahedron_etf() -> StateSet:
    """Six diagonals of the icosahedron: a real ETF in dimension 3."""
    phi = (1 + math.sqrt(5)) / 2
    raw = [(0, 1, phi), (0, 1, -phi), (1, phi, 0),
           (1, -phi, 0), (phi, 0, 1), (-phi, 0, 1)]
    v = np.array(raw, dtype=np.complex128)
    v /= np.linalg.norm(v, axis=1)[:, None]
    return StateSet(v)


def difference_set_etf(n: int, ds: tuple[int, ...]) -> StateSet:
    """Harmonic ETF from a difference set in Z_n: n states in dim |ds|."""
    m = len(ds)
    w = np.exp(2j * np.pi / n)
    vecs = np.array([[w ** (jj * k) for k in ds] for jj in range(n)],
                    dtype=np.complex128) / math.sqrt(m)
    return StateSet(vecs)


def sic_dim3() -> StateSet:
    """Nine dimension-3 states at constant overlap 1/4 (Weyl-Heisenberg
    orbit of the fiducial (0, 1, -1)/sqrt(2))."""
    w = np.exp(2j * np.pi / 3)
    f = np.array([0, 1, -1], dtype=np.complex128) / math.sqrt(2)
    vecs = []
    for a in range(3):
        for b in range(3):
            v = np.array([w ** (b * i) * f[(i - a) % 3] for i in range(3)])
            vecs.append(v)
    return StateSet(np.array(vecs))


def conference_etf_dim4() -> StateSet:
    """Eight states in dimension 4 at overlap 1/7, from the skew conference
    matrix of order 8 (quadratic residues mod 7 plus a border)."""
    qr = {pow(i, 2, 7) for i in range(1, 7)}

    def chi(x):
        x %= 7
        if x == 0:
            return 0
        return 1 if x in qr else -1

    c = np.zeros((8, 8))
    for jj in range(1, 8):
        c[0, jj] = 1
        c[jj, 0] = -1
    for jj in range(1, 8):
        for k in range(1, 8):
            c[jj, k] = chi(jj - k)
    g = np.eye(8, dtype=np.complex128) + 1j * c / math.sqrt(7)
    return states_from_gram(g, 4)
