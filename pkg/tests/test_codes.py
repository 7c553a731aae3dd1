import itertools
from fractions import Fraction as F

import pytest

from fingerlab.bits import popcount
from fingerlab.codes import (
    CwcParams,
    complement_pair_strategy,
    cwc_capacity,
    cwc_search,
    halving_construction,
    pair_capacity_example_8_5,
    search_pair_capacity,
    smp_strategy_from_pair,
    strategy_from_cwc,
)
from fingerlab.families import SubsetFamily
from fingerlab.strategies import (
    binary_completion,
    error_report,
    identity_strategy,
    optimize_supports_one_way,
)


class TestCapacity:
    @pytest.mark.parametrize("m,k,j,val", [
        (9, 3, 1, 12),     # prime-power square
        (16, 4, 1, 20),
        (7, 3, 1, 7),
        (11, 3, 1, 17),    # the m = 5 mod 6 correction
        (4, 2, 1, 6),      # j = k-1: all k-subsets
        (10, 3, 2, 120),
    ])
    def test_closed_forms(self, m, k, j, val):
        cap = cwc_capacity(m, k, j)
        assert cap.value == val, cap

    def test_unknown_reported(self):
        cap = cwc_capacity(9, 4, 2)
        assert not cap.known and cap.provenance == "unknown"

    def test_search_cross_checks_closed_form(self):
        size, fam, exact = cwc_search(7, 3, 1)
        assert exact and size == cwc_capacity(7, 3, 1).value
        size, fam, exact = cwc_search(6, 3, 1)
        assert exact and size == cwc_capacity(6, 3, 1).value

    def test_params_validation(self):
        with pytest.raises(ValueError):
            CwcParams(4, 2, 2)


class TestWeightDistance:
    def test_distance_intersection_correspondence_m6(self):
        # Hamming distance of equal-weight incidence vectors vs intersection
        for m in range(2, 7):
            for w in range(1, m + 1):
                masks = [s for s in range(1 << m) if popcount(s) == w]
                for u, v in itertools.combinations(masks, 2):
                    d = popcount(u ^ v)
                    assert d == 2 * (w - popcount(u & v))


class TestCwcStrategy:
    def test_pairs_of_four(self):
        s = strategy_from_cwc(SubsetFamily.layer(4, 2), 2, 1)
        rep = error_report(s)
        assert rep.worst_case == F(1, 2) and rep.one_sided

    def test_nine_point_packing(self):
        fam = SubsetFamily.from_elements(9, [
            (1, 2, 3), (4, 5, 6), (7, 8, 9), (1, 4, 7), (2, 5, 8), (3, 6, 9),
            (1, 5, 9), (2, 6, 7), (3, 4, 8), (1, 6, 8), (2, 4, 9), (3, 5, 7)])
        s = strategy_from_cwc(fam, 3, 1)
        rep = error_report(s)
        assert rep.worst_case == F(1, 3)  # max intersection is exactly 1

    def test_disjoint_singletons(self):
        fam = SubsetFamily.from_elements(3, [(1,), (2,), (3,)])
        s = strategy_from_cwc(fam, 1, 0)
        assert error_report(s).worst_case == 0

    def test_worst_case_equals_max_intersection_over_k(self):
        fam = SubsetFamily.from_elements(6, [(1, 2, 3), (3, 4, 5), (1, 4, 6)])
        s = strategy_from_cwc(fam, 3, 1)
        assert error_report(s).worst_case == F(1, 3)

    def test_weight_violation_witness(self):
        fam = SubsetFamily.from_elements(4, [(1, 2), (3,)])
        with pytest.raises(ValueError, match="weight"):
            strategy_from_cwc(fam, 2, 1)

    def test_intersection_violation_witness(self):
        fam = SubsetFamily.from_elements(4, [(1, 2), (1, 3), (1, 4)])
        with pytest.raises(ValueError, match="intersect"):
            strategy_from_cwc(fam, 2, 0)


class TestComplementPair:
    @pytest.mark.parametrize("m,n,worst", [
        (4, 6, F(3, 4)), (5, 10, F(5, 6)), (2, 2, F(0)), (6, 20, F(8, 9)),
    ])
    def test_values(self, m, n, worst):
        s = complement_pair_strategy(m)
        rep = error_report(s)
        assert s.n == n and rep.worst_case == worst and rep.one_sided


class TestHalving:
    def test_optimal_545_base(self):
        from fingerlab.strategies import brute_force_min_wce
        base = brute_force_min_wce(5, 4, 5, "one-way").strategy
        s = halving_construction(base)
        assert (s.n, s.m_a, s.m_b) == (10, 9, 9)
        rep = error_report(s)
        assert rep.worst_case == F(1, 2) and rep.one_sided

    def test_identity_base(self):
        s = halving_construction(identity_strategy(4))
        rep = error_report(s)
        assert rep.worst_case == 0 and rep.one_sided

    def test_antichain_base(self):
        base, val = optimize_supports_one_way(SubsetFamily.layer(4, 2))
        s = halving_construction(base)
        assert (s.n, s.m_a) == (12, 10)
        assert error_report(s).worst_case == val == F(1, 2)

    def test_rejects_non_relay_base(self):
        with pytest.raises(ValueError, match="one-way"):
            halving_construction(complement_pair_strategy(4))


class TestPairStrategies:
    def test_published_8_couple_pair(self):
        fp, fq = pair_capacity_example_8_5()
        s, j = smp_strategy_from_pair(fp, fq, 2, 2)
        assert j == 3
        rep = error_report(s)
        assert rep.worst_case == F(3, 4) and rep.one_sided

    def test_binary_completion_matches_rectangle_union(self):
        fp, fq = pair_capacity_example_8_5()
        s, _ = smp_strategy_from_pair(fp, fq, 2, 2)
        comp = binary_completion(s.p, s.q)
        assert comp.r == s.r
        # r is 1 exactly on the union of the 8 support rectangles
        want = set()
        for z in range(8):
            for a in range(5):
                for b in range(5):
                    if (fp.sets[z] >> a) & 1 and (fq.sets[z] >> b) & 1:
                        want.add((a, b))
        got = {(a, b) for a in range(5) for b in range(5) if s.r[a][b] == 1}
        assert got == want

    def test_disjoint_singletons(self):
        fam = SubsetFamily.from_elements(3, [(1,), (2,), (3,)])
        s, j = smp_strategy_from_pair(fam, fam, 1, 1)
        assert j == 0 and error_report(s).worst_case == 0

    def test_size_mismatch(self):
        f1 = SubsetFamily.from_elements(3, [(1,), (2,)])
        f2 = SubsetFamily.from_elements(3, [(1,)])
        with pytest.raises(ValueError, match="sizes differ"):
            smp_strategy_from_pair(f1, f2, 1, 1)


class TestPairSearch:
    def test_trivial_singletons(self):
        r = search_pair_capacity(4, 1, 1, 0)
        assert r.n == 4 and r.exact

    def test_known_capacity_5(self):
        r = search_pair_capacity(5, 2, 2, 3, max_seconds=210)
        assert r.n == 8 and r.exact
        s, j = smp_strategy_from_pair(r.fp, r.fq, 2, 2)
        assert j <= 3 and error_report(s).worst_case <= F(3, 4)

    def test_full_matching_7(self):
        r = search_pair_capacity(7, 2, 2, 3, max_seconds=210)
        assert r.n == 21 and r.exact
        s, j = smp_strategy_from_pair(r.fp, r.fq, 2, 2)
        assert error_report(s).worst_case <= F(3, 4)
