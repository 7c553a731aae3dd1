import pytest

from fingerlab.quantum.bounds import packing_bounds
from fingerlab.quantum.packing import GrassmannConfig, grassmann_search

FAST = GrassmannConfig(restarts=24, iterations=2500, seed=3)


class TestGrassmannSearch:
    def test_orthonormal_when_counts_match(self):
        res = grassmann_search(3, 3, FAST)
        assert res.overlap == 0.0

    def test_simplex_frame_m3(self):
        res = grassmann_search(4, 3, FAST)
        assert abs(res.overlap - 1 / 9) < 1e-6
        assert res.simplex_gap >= -1e-9

    def test_qubit_pentagon(self):
        res = grassmann_search(5, 2, FAST)
        assert res.overlap <= 0.5 + 1e-3

    def test_never_beats_simplex_bound(self):
        for n, m in [(4, 2), (6, 3), (7, 4)]:
            res = grassmann_search(n, m, FAST)
            assert res.overlap >= packing_bounds(n, m).simplex - 1e-9

    def test_deterministic_given_seed(self):
        cfg = GrassmannConfig(restarts=4, iterations=300, seed=7)
        r1 = grassmann_search(4, 2, cfg)
        r2 = grassmann_search(4, 2, cfg)
        assert r1.overlap == r2.overlap
        assert (r1.states.vectors == r2.states.vectors).all()

    def test_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            grassmann_search(2, 3)
