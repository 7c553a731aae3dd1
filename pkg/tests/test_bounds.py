from fractions import Fraction as F

import pytest

from fingerlab.bounds import BoundInterval, BoundsEngine, Provenance, TProvider
from fingerlab.codes import complement_pair_strategy, strategy_from_cwc
from fingerlab.families import SubsetFamily
from fingerlab.strategies import error_report


@pytest.fixture(scope="module")
def engine():
    return BoundsEngine(use_search=True)


class TestInterval:
    def test_validation(self):
        with pytest.raises(AssertionError):
            BoundInterval(F(2, 3), F(1, 3),
                          (Provenance("lower", "test", ""),))
        with pytest.raises(ValueError):
            BoundInterval(F(0), F(1), ())

    def test_cell_rendering(self):
        iv = BoundInterval(F(1, 3), F(1, 2), (Provenance("lower", "x", ""),))
        assert iv.cell_str() == "1/3 -- 1/2"
        iv = BoundInterval(F(1, 2), F(1, 2), (Provenance("exact", "x", ""),))
        assert iv.cell_str() == "1/2" and iv.exact


class TestOneWay:
    @pytest.mark.parametrize("n,m,cell", [
        (6, 4, "1/2"),
        (17, 16, "0 -- 1/4"),
        (2, 2, "0"),
        (16, 6, "2/3"),
        (10, 9, "1/3"),
        (36, 7, "1"),
    ])
    def test_cells(self, engine, n, m, cell):
        assert engine.one_way_interval(n, m).cell_str() == cell

    def test_monotone_in_n_and_m(self, engine):
        for m in (4, 6, 9):
            prev = None
            for n in range(2, 30):
                iv = engine.one_way_interval(n, m)
                if prev is not None:
                    assert iv.lower >= prev.lower
                prev = iv
        for n in (10, 20, 30):
            for m in range(2, 16):
                a = engine.one_way_interval(n, m)
                b = engine.one_way_interval(n, m + 1)
                assert a.upper >= b.upper

    def test_provenance_present(self, engine):
        iv = engine.one_way_interval(13, 9)
        assert any(p.source == "theorem:cover-free-threshold"
                   and "search" in p.detail for p in iv.provenance)


class TestSmp:
    @pytest.mark.parametrize("n,m,cell", [
        (5, 4, "3/4"),
        (10, 9, "1/3 -- 1/2"),
        (4, 4, "0"),
        (9, 5, "5/6"),
        (13, 6, "1/2 -- 5/6"),
        (22, 7, "2/3 -- 8/9"),
    ])
    def test_cells(self, engine, n, m, cell):
        assert engine.smp_interval(n, m).cell_str() == cell

    def test_cross_model_inequality(self, engine):
        for n in range(2, 23):
            for m in range(2, 10):
                assert (engine.smp_interval(n, m).lower
                        >= engine.one_way_interval(n, m).lower)


class TestConstructionSanity:
    def test_measured_values_respect_lower_bounds(self, engine):
        # every exactly-evaluated construction sits at or above the cell floor
        cases = []
        for m in (4, 5, 6):
            s = complement_pair_strategy(m)
            cases.append((s.n, m, error_report(s).worst_case, "smp"))
        s = strategy_from_cwc(SubsetFamily.layer(4, 2), 2, 1)
        cases.append((6, 4, error_report(s).worst_case, "one-way"))
        for n, m, measured, model in cases:
            iv = (engine.smp_interval(n, m) if model == "smp"
                  else engine.one_way_interval(n, m))
            assert measured >= iv.lower


class TestTProvider:
    def test_search_backed_values(self):
        prov = TProvider(use_search=True)
        fact = prov.get(9, 2)
        assert fact.value == 12 and fact.exact and fact.source == "search"
        fact = prov.get(6, F(3, 2))
        assert fact.value == 15 and fact.exact and fact.source == "search"

    def test_bundled_fallback(self):
        prov = TProvider(use_search=False)
        fact = prov.get(10, 2)
        assert fact.value == 13 and fact.exact
        assert fact.source.startswith("published")

    def test_lower_bound_rows(self):
        prov = TProvider(use_search=False)
        fact = prov.get(12, 2)
        assert not fact.exact and fact.value == 20
        fact = prov.get(9, F(4, 3))
        assert not fact.exact and fact.value == 84
