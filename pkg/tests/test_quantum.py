import math

import numpy as np
import pytest

from fingerlab.quantum.bounds import fejes_toth_bound, packing_bounds
from fingerlab.quantum.etf import (
    check_etf,
    etf_complement,
    icosahedron_etf,
    sic_dim2,
    sic_dim3,
    simplex_etf,
    trine_etf,
)
from fingerlab.quantum.mub import mub_states
from fingerlab.quantum.smp import (
    DegenerateFormulaError,
    complement_xi_states,
    conjugate_xi_states,
    etf_2m_strategy,
    etf_conjugate_strategy,
    smp_numeric_search,
    smp_support_projector,
    smp_wce,
    sym_projector,
    sym_strategy,
)
from fingerlab.quantum.states import (
    ProjectorBasis,
    StateSet,
    gram_matrix,
    max_pairwise_overlap,
    one_way_wce,
)

from conftest import BUNDLED_FRAMES


class TestOverlap:
    def test_orthonormal_basis(self):
        rep = max_pairwise_overlap(StateSet(np.eye(3, dtype=complex)))
        assert rep.max_overlap == 0

    def test_tetrahedron(self):
        rep = max_pairwise_overlap(sic_dim2())
        assert abs(rep.max_overlap - 1 / 3) < 1e-12

    def test_trine(self):
        assert abs(one_way_wce(trine_etf()) - 0.25) < 1e-12

    def test_vacuous_single_state(self):
        rep = max_pairwise_overlap(StateSet(np.array([[1.0, 0.0]])))
        assert rep.vacuous and rep.max_overlap == 0


class TestBounds:
    def test_tetrahedron_cell(self):
        b = packing_bounds(4, 2)
        assert abs(b.simplex - 1 / 3) < 1e-15
        assert abs(b.fejes_toth - 1 / 3) < 1e-12

    def test_octahedron_cell(self):
        assert abs(fejes_toth_bound(6) - 0.5) < 1e-12

    def test_orthoplex_applicability(self):
        b = packing_bounds(5, 2)
        assert b.orthoplex == 0.5 and b.delta2_lower == 0.5
        assert b.orthoplex_tight_possible
        b = packing_bounds(4, 2)
        assert b.orthoplex is None

    def test_equal_counts(self):
        assert packing_bounds(4, 4).simplex == 0

    def test_rejects_n_below_m(self):
        with pytest.raises(ValueError):
            packing_bounds(2, 3)


class TestEtfCheck:
    @pytest.mark.parametrize("name,n,m", BUNDLED_FRAMES)
    def test_bundled_frames_verify(self, bundled_frames, name, n, m):
        states = bundled_frames[name]
        assert states.count == n and states.dim == m
        rep = check_etf(states, tol=1e-10)
        assert rep.ok, (name, rep)

    def test_orthonormal_basis_is_trivial_etf(self):
        assert check_etf(StateSet(np.eye(4, dtype=complex)))

    def test_perturbation_breaks_both_conditions(self):
        # rotate one vector by 1e-3 toward a neighbor so overlaps move
        base = simplex_etf(3).vectors.copy()
        u = base[1] - base[0] * np.vdot(base[0], base[1])
        u /= np.linalg.norm(u)
        base[0] = math.cos(1e-3) * base[0] + math.sin(1e-3) * u
        rep = check_etf(StateSet(base), tol=1e-10)
        assert not rep.ok and not rep.equiangular_ok and not rep.tight_ok


class TestComplement:
    def test_sic2_complement_overlap(self):
        comp = etf_complement(sic_dim2())
        assert comp.dim == 2
        want = 2 / (2 * 3)  # m / ((n-m)(n-1))
        assert abs(max_pairwise_overlap(comp).max_overlap - want) < 1e-10

    def test_simplex_complement_is_dim_one(self):
        comp = etf_complement(simplex_etf(3))
        assert comp.dim == 1 and comp.count == 4

    def test_conference_complement_overlap(self):
        comp = etf_complement(icosahedron_etf())
        assert comp.dim == 3
        assert abs(max_pairwise_overlap(comp).max_overlap - 0.2) < 1e-10

    def test_involution_up_to_overlaps(self, bundled_frames):
        base = bundled_frames["etf_m4_n8"]
        twice = etf_complement(etf_complement(base))
        g1 = np.abs(gram_matrix(base))
        g2 = np.abs(gram_matrix(twice))
        assert np.max(np.abs(g1 - g2)) < 1e-9

    def test_rejects_non_etf(self):
        rng = np.random.default_rng(0)
        v = rng.normal(size=(4, 2)) + 1j * rng.normal(size=(4, 2))
        v /= np.linalg.norm(v, axis=1)[:, None]
        with pytest.raises(ValueError):
            etf_complement(StateSet(v))


class TestMub:
    @pytest.mark.parametrize("m,count,overlap", [(2, 6, 0.5), (3, 12, 1 / 3),
                                                 (5, 30, 0.2)])
    def test_prime_dimensions(self, m, count, overlap):
        s = mub_states(m)
        assert s.count == count
        rep = max_pairwise_overlap(s)
        assert abs(rep.max_overlap - overlap) < 1e-10

    def test_intra_basis_orthogonal(self):
        s = mub_states(3)
        g = np.abs(gram_matrix(s))
        for b in range(4):
            block = g[3 * b:3 * b + 3, 3 * b:3 * b + 3]
            assert np.max(np.abs(block - np.eye(3))) < 1e-12

    @pytest.mark.parametrize("m", [4, 6, 9])
    def test_rejects_non_primes(self, m):
        with pytest.raises(ValueError):
            mub_states(m)


class TestProjector:
    def test_idempotent(self, bundled_frames):
        etf = bundled_frames["etf_m3_n6"]
        proj = smp_support_projector(etf, etf.conj())
        p = proj.matrix()
        assert np.max(np.abs(p @ p - p)) < 1e-10

    def test_orthonormal_basis_rank(self):
        eye = StateSet(np.eye(3, dtype=complex))
        proj = smp_support_projector(eye, eye)
        assert proj.rank == 3

    def test_one_sided_diagonals(self, bundled_frames):
        a = bundled_frames["etf_m3_n7"]
        b = a.conj()
        proj = smp_support_projector(a, b)
        for z in range(a.count):
            v = np.kron(a.vectors[z], b.vectors[z])
            assert abs(proj.project_norm_sq(v) - 1) < 1e-9

    def test_rejects_mismatched_counts(self):
        with pytest.raises(ValueError):
            smp_support_projector(StateSet(np.eye(2, dtype=complex)),
                                  StateSet(np.eye(3, dtype=complex)))

    def test_basis_validation(self):
        with pytest.raises(ValueError):
            ProjectorBasis(np.array([[1.0, 1.0], [0.0, 0.0]]))


CONJUGATE_CASES = [("etf_m2_n3", 5 / 8), ("etf_m3_n4", 7 / 27),
                   ("etf_m4_n5", 9 / 64)]
TWO_M_CASES = [("etf_m2_n4", 2 / 3), ("etf_m3_n6", 7 / 15),
               ("etf_m4_n8", 5 / 14)]


class TestSmpStrategies:
    @pytest.mark.parametrize("name,want", CONJUGATE_CASES)
    def test_conjugate_closed_form(self, bundled_frames, name, want):
        etf = bundled_frames[name]
        a, b, predicted = etf_conjugate_strategy(etf)
        assert abs(predicted - want) < 1e-15
        rep = smp_wce(a, b)
        assert abs(rep.value - want) < 1e-9
        assert rep.rank == etf.count

    @pytest.mark.parametrize("name,want", TWO_M_CASES)
    def test_complement_closed_form(self, bundled_frames, name, want):
        etf = bundled_frames[name]
        a, b, predicted = etf_2m_strategy(etf)
        assert abs(predicted - want) < 1e-15
        rep = smp_wce(a, b)
        assert abs(rep.value - want) < 1e-9
        assert rep.rank == etf.count - 1

    def test_conjugate_refuses_square_counts(self):
        with pytest.raises(DegenerateFormulaError):
            etf_conjugate_strategy(sic_dim3())

    def test_closed_forms_on_every_bundled_frame(self, bundled_frames):
        # the conjugate construction self-verifies its prediction at 1e-9;
        # n = m^2 frames must refuse instead
        for name, n, m in BUNDLED_FRAMES:
            etf = bundled_frames[name]
            if n == m * m:
                with pytest.raises(DegenerateFormulaError):
                    etf_conjugate_strategy(etf)
            else:
                _, _, predicted = etf_conjugate_strategy(etf)
                assert predicted == (n * n - m * m) / (m * m * (n - 1))
            if n == 2 * m:
                etf_2m_strategy(etf)

    def test_one_sided_diagonals_every_bundled_frame(self, bundled_frames):
        for name, n, m in BUNDLED_FRAMES:
            etf = bundled_frames[name]
            b = etf.conj()
            proj = smp_support_projector(etf, b)
            for z in range(n):
                v = np.kron(etf.vectors[z], b.vectors[z])
                assert abs(proj.project_norm_sq(v) - 1) < 1e-9, name

    def test_orthonormal_pair_is_perfect(self):
        eye = StateSet(np.eye(4, dtype=complex))
        assert smp_wce(eye, eye).value < 1e-12

    def test_xi_states_span_support(self, bundled_frames):
        for name, _, _ in BUNDLED_FRAMES:
            etf = bundled_frames[name]
            n = etf.count
            xi = conjugate_xi_states(etf)
            g = np.conj(xi.T) @ xi
            assert np.max(np.abs(g - np.eye(n))) < 1e-10, name
            proj = smp_support_projector(etf, etf.conj())
            assert proj.rank == n
            for k in range(n):
                assert proj.residual(xi[:, k]) < 1e-9

    def test_complement_xi_states(self, bundled_frames):
        for name in ("etf_m2_n4", "etf_m3_n6", "etf_m4_n8"):
            etf = bundled_frames[name]
            chi = etf_complement(etf)
            xi = complement_xi_states(etf, chi)
            n = etf.count
            g = np.conj(xi.T) @ xi
            assert np.max(np.abs(g - np.eye(n - 1))) < 1e-10
            proj = smp_support_projector(etf, chi.conj())
            assert proj.rank == n - 1
            for k in range(n - 1):
                assert proj.residual(xi[:, k]) < 1e-9


class TestSymStrategy:
    def test_mub_values(self):
        assert abs(sym_strategy(mub_states(2)) - 0.75) < 1e-12
        assert abs(sym_strategy(mub_states(3)) - 2 / 3) < 1e-12

    def test_sic_value(self, bundled_frames):
        assert abs(sym_strategy(bundled_frames["etf_m3_n9"]) - 5 / 8) < 1e-9

    def test_projector_cross_validation(self):
        s = trine_etf()
        rep = smp_wce(s, s, projector=sym_projector(2))
        assert abs(rep.value - sym_strategy(s)) < 1e-10

    def test_sym_projector_dimension(self):
        proj = sym_projector(4)
        assert proj.rank == 10 and proj.ambient_dim == 16


class TestNumericSearch:
    def test_trivial_cases(self):
        _, _, val = smp_numeric_search(3, 3, restarts=1, iterations=5, seed=0)
        assert val < 1e-9
        _, _, val = smp_numeric_search(2, 4, restarts=1, iterations=5, seed=0)
        assert val < 1e-9

    @pytest.mark.slow
    def test_5_3_reaches_published_level(self):
        _, _, val = smp_numeric_search(5, 3, restarts=6, iterations=8000, seed=0)
        assert val <= 0.44
