"""Simultaneous-message quantum strategies and their closed-form error rates.

The referee's optimal one-sided measurement projects onto the support of
sum_z rho(z) (x) tau(z); strategies here differ in how the two fingerprint
state sets are chosen (conjugated frames, frame/complement pairs, or the
symmetric-subspace projector shortcut).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .etf import check_etf, etf_complement
from .states import ProjectorBasis, StateSet, max_pairwise_overlap

__all__ = [
    "smp_support_projector",
    "smp_wce",
    "SmpReport",
    "etf_conjugate_strategy",
    "etf_2m_strategy",
    "conjugate_xi_states",
    "complement_xi_states",
    "sym_projector",
    "sym_strategy",
    "smp_numeric_search",
    "DegenerateFormulaError",
    "EIGENVALUE_CUTOFF",
]

EIGENVALUE_CUTOFF = 1e-10  # relative to the largest eigenvalue


class DegenerateFormulaError(ValueError):
    pass


def _product_columns(a: StateSet, b: StateSet) -> np.ndarray:
    cols = [np.kron(a.vectors[z], b.vectors[z]) for z in range(a.count)]
    return np.array(cols).T  # (dim_a*dim_b, n)


def smp_support_projector(a: StateSet, b: StateSet,
                          cutoff: float = EIGENVALUE_CUTOFF) -> ProjectorBasis:
    """Orthonormal basis of the support of sum_z |psi_z phi_z><psi_z phi_z|.

    Hermitian eigendecomposition with a relative eigenvalue cutoff; the rank
    never exceeds the number of messages.
    """
    if a.count != b.count:
        raise ValueError("state sets must have equal counts")
    mmat = _product_columns(a, b)
    p_tilde = mmat @ np.conj(mmat.T)
    w, u = np.linalg.eigh(p_tilde)
    top = float(w[-1])
    keep = w > cutoff * top
    return ProjectorBasis(u[:, keep])


@dataclass(frozen=True)
class SmpReport:
    value: float
    witness: tuple[int, int]  # 1-based (x, y), lexicographically smallest
    rank: int


def smp_wce(a: StateSet, b: StateSet,
            projector: ProjectorBasis | None = None) -> SmpReport:
    """Worst accept probability over distinct message pairs.

    max over x != y of || P_1 |psi_x phi_y> ||^2 with P_1 the support
    projector of the diagonal product states (or an explicit projector).
    """
    if a.count != b.count:
        raise ValueError("state sets must have equal counts")
    proj = projector if projector is not None else smp_support_projector(a, b)
    n = a.count
    best = 0.0
    witness = (1, 1) if n < 2 else (1, 2)
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            v = np.kron(a.vectors[x], b.vectors[y])
            val = proj.project_norm_sq(v)
            if val > best + 1e-15:
                best = val
                witness = (x + 1, y + 1)
    return SmpReport(best, witness, proj.rank)


def conjugate_xi_states(etf: StateSet) -> np.ndarray:
    """The n orthonormal support-spanning vectors of the conjugated-frame
    strategy, as columns (k = 1..n)."""
    n, m = etf.count, etf.dim
    if m < 2:
        raise ValueError("need dimension >= 2")
    prods = _product_columns(etf, etf.conj())  # column j = xi_j (x) xi_j*
    cols = []
    for k in range(1, n):
        phase = np.exp(2j * np.pi * np.arange(1, n + 1) * k / n)
        v = prods @ phase
        cols.append(math.sqrt(m * (n - 1) / (n * n * (m - 1))) * v)
    cols.append(math.sqrt(m / (n * n)) * prods.sum(axis=1))
    return np.array(cols).T


def complement_xi_states(etf: StateSet, chi: StateSet) -> np.ndarray:
    """The n-1 orthonormal support-spanning vectors of the frame/complement
    strategy (n = 2m), as columns."""
    n = etf.count
    prods = _product_columns(etf, chi.conj())
    cols = []
    for k in range(1, n):
        phase = np.exp(2j * np.pi * np.arange(1, n + 1) * k / n)
        cols.append(math.sqrt(n - 1) / n * (prods @ phase))
    return np.array(cols).T


def etf_conjugate_strategy(etf: StateSet, tol: float = 1e-9):
    """Both parties use the frame, one entrywise conjugated.

    Predicted worst-case error (n^2 - m^2) / (m^2 (n - 1)); verified against
    the support-projector evaluation before returning.
    """
    n, m = etf.count, etf.dim
    if not check_etf(etf, tol=1e-9):
        raise ValueError("input is not an equiangular tight frame")
    if n == m * m:
        raise DegenerateFormulaError(
            "closed form degenerates to 1 at n = m^2; use sym_strategy")
    predicted = (n * n - m * m) / (m * m * (n - 1))
    b = etf.conj()
    rep = smp_wce(etf, b)
    if abs(rep.value - predicted) > tol:
        raise AssertionError(
            f"conjugate strategy value {rep.value} != predicted {predicted}")
    return etf, b, predicted


def etf_2m_strategy(etf: StateSet, tol: float = 1e-9):
    """Frame for one party, conjugated complement frame for the other (n=2m).

    Predicted worst-case error (3m - 2) / (m (2m - 1)); the support projector
    has rank n - 1 because the diagonal product states sum to zero.
    """
    n, m = etf.count, etf.dim
    if n != 2 * m:
        raise ValueError("needs n = 2m exactly")
    if not check_etf(etf, tol=1e-9):
        raise ValueError("input is not an equiangular tight frame")
    chi = etf_complement(etf)
    b = chi.conj()
    predicted = (3 * m - 2) / (m * (2 * m - 1))
    rep = smp_wce(etf, b)
    if rep.rank != n - 1:
        raise AssertionError(f"support rank {rep.rank}, expected {n - 1}")
    if abs(rep.value - predicted) > tol:
        raise AssertionError(
            f"2m strategy value {rep.value} != predicted {predicted}")
    return etf, b, predicted


def sym_projector(m: int) -> ProjectorBasis:
    """Projector onto the symmetric subspace of C^m (x) C^m."""
    cols = []
    for a in range(m):
        for b in range(a, m):
            v = np.zeros(m * m, dtype=np.complex128)
            if a == b:
                v[a * m + b] = 1.0
            else:
                v[a * m + b] = v[b * m + a] = 1 / math.sqrt(2)
            cols.append(v)
    return ProjectorBasis(np.array(cols).T)


def sym_strategy(states: StateSet) -> float:
    """Worst-case error when the referee projects onto the symmetric
    subspace and both parties use the same fingerprint states."""
    return 0.5 * (1.0 + max_pairwise_overlap(states).max_overlap)


def _pair_values(av: np.ndarray, bv: np.ndarray,
                 cutoff: float = EIGENVALUE_CUTOFF) -> np.ndarray:
    """Accept probabilities of all ordered distinct pairs, flattened."""
    n = av.shape[0]
    cols = np.array([np.kron(av[z], bv[z]) for z in range(n)]).T
    w, u = np.linalg.eigh(cols @ np.conj(cols.T))
    basis = u[:, w > cutoff * w[-1]]
    vals = []
    for x in range(n):
        for y in range(n):
            if x != y:
                amp = np.conj(basis.T) @ np.kron(av[x], bv[y])
                vals.append(float(np.real(np.vdot(amp, amp))))
    return np.array(vals)


def smp_numeric_search(n: int, m: int, restarts: int = 8,
                       iterations: int = 8000, seed: int = 0):
    """Derivative-free stochastic search over fingerprint state pairs.

    Single-vector perturbations judged on an annealed smoothed maximum of
    the pairwise accept probabilities (the hard max plateaus early); the
    returned value is the exact worst case of the best pair found, with no
    optimality claim.  Deterministic for a fixed seed.
    """
    if n < 2:
        eye = StateSet(np.eye(max(n, 1), m, dtype=np.complex128))
        return eye, eye, 0.0
    best_val = None
    best_pair = None

    def smooth_max(vals, t):
        mx = vals.max()
        return mx + t * math.log(np.exp((vals - mx) / t).sum())

    def record(av, bv):
        nonlocal best_val, best_pair
        hard = float(_pair_values(av, bv).max())
        if best_val is None or hard < best_val:
            best_val = hard
            best_pair = (StateSet(av.copy()), StateSet(bv.copy()))

    for r in range(restarts):
        rng = np.random.default_rng(seed * 99991 + r)
        if r == 0 and n <= m:
            # the injective encoding is already perfect; record and move on
            av = np.eye(n, m, dtype=np.complex128)
            record(av, av)
            continue
        av = rng.normal(size=(n, m)) + 1j * rng.normal(size=(n, m))
        av /= np.linalg.norm(av, axis=1)[:, None]
        bv = rng.normal(size=(n, m)) + 1j * rng.normal(size=(n, m))
        bv /= np.linalg.norm(bv, axis=1)[:, None]
        t_smooth, t_accept, step = 0.3, 0.05, 0.4
        cool_s = (0.002 / t_smooth) ** (1.0 / iterations)
        cool_a = (1e-7 / t_accept) ** (1.0 / iterations)
        shrink = (0.005 / step) ** (1.0 / iterations)
        cur = smooth_max(_pair_values(av, bv), t_smooth)
        for it in range(iterations):
            side = rng.integers(2)
            idx = int(rng.integers(n))
            tgt = av if side == 0 else bv
            old = tgt[idx].copy()
            tgt[idx] = tgt[idx] + step * (
                rng.normal(size=m) + 1j * rng.normal(size=m))
            tgt[idx] /= np.linalg.norm(tgt[idx])
            val = smooth_max(_pair_values(av, bv), t_smooth)
            if val < cur or rng.random() < math.exp(-(val - cur) / t_accept):
                cur = val
            else:
                tgt[idx] = old
            t_smooth = max(t_smooth * cool_s, 0.002)
            t_accept *= cool_a
            step = max(step * shrink, 0.005)
            if it % 1000 == 999:
                cur = smooth_max(_pair_values(av, bv), t_smooth)
        record(av, bv)
    return best_pair[0], best_pair[1], best_val
