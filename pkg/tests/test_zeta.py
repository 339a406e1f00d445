"""The zeta and eta maps: four constructions, fillings, and relations."""

from __future__ import annotations

import pytest

import rational_dyck as rd
from rational_dyck.zeta import (
    eta_via_cores,
    eta_via_intervals,
    eta_via_lasers,
    eta_via_sweep,
    zeta_via_cores,
    zeta_via_intervals,
    zeta_via_lasers,
    zeta_via_sweep,
)

from conftest import coprime_pairs, laser_value_by_intersection

ZETA_METHODS = (zeta_via_cores, zeta_via_sweep, zeta_via_lasers, zeta_via_intervals)
ETA_METHODS = (eta_via_cores, eta_via_sweep, eta_via_lasers, eta_via_intervals)


class TestRunningExample:
    def test_lambda_mu(self, running):
        assert rd.lambda_partition(running).parts == (4, 3, 2, 1, 0)
        assert rd.mu_partition(running).parts == (3, 2, 2, 1, 1, 1, 0, 0)
        assert rd.mu_partition(running).conjugate().parts == (6, 3, 1)

    @pytest.mark.parametrize("method", ZETA_METHODS)
    def test_zeta_all_methods(self, running, method):
        assert method(running).steps == "NENENENENEEEE"

    @pytest.mark.parametrize("method", ETA_METHODS)
    def test_eta_all_methods(self, running, method):
        assert method(running).steps == "NNENEENEEENEE"

    def test_sweep_sorted_word(self, running):
        # sorted barred word: bars exactly on the east entries
        levels = running.levels()
        entries = sorted(
            (levels[i], running.steps[i]) for i in range(running.length)
        )
        assert [v for v, _ in entries] == [0, 5, 8, 10, 12, 15, 16, 17, 19, 20, 22, 24, 27]
        assert "".join(s for _, s in entries) == "NENENENENEEEE"

    def test_bar_positions_match_the_permutations(self):
        # forward bars sit at the cyclic descents of sigma, reverse bars at
        # the cyclic ascents of tau
        for a, b in coprime_pairs(9):
            for p in rd.enumerate_paths(a, b):
                n = p.length
                forward = {i + 1 for i in range(n) if p.steps[i] == "E"}
                assert forward == set(rd.sigma(p).right_cyclic_descents())
                backward = {i + 1 for i in range(n) if p.steps[n - 1 - i] == "E"}
                assert backward == set(rd.tau(p).right_cyclic_ascents())


class TestLowestAndFull:
    def test_zeta_of_lowest_is_full(self):
        for a, b in coprime_pairs(10):
            low = rd.lowest_path(a, b)
            assert rd.zeta(low, check=True) == rd.full_path(a, b)
            assert rd.eta(low, check=True) == rd.full_path(a, b)

    def test_zeta_of_full_is_lowest(self):
        for a, b in coprime_pairs(10):
            assert rd.zeta(rd.full_path(a, b)) == rd.lowest_path(a, b)


class TestFourWayAgreement:
    def test_exhaustive(self):
        for a, b in coprime_pairs(11):
            for p in rd.enumerate_paths(a, b):
                rd.zeta(p, check=True)
                rd.eta(p, check=True)


class TestLaserFilling:
    def test_running_values(self, running):
        filling = rd.laser_filling(running)
        assert filling.total() == 10
        values = [filling.value(*box) for box in filling.boxes()]
        assert sorted(values, reverse=True) == [2, 1, 1, 1, 1, 1, 1, 1, 1]
        assert sorted(filling.row_sums(), reverse=True) == [4, 3, 2, 1, 0]
        assert sorted(filling.column_sums(), reverse=True) == [3, 2, 2, 1, 1, 1, 0, 0]

    def test_lowest_all_zero(self):
        filling = rd.laser_filling(rd.lowest_path(3, 5))
        assert filling.total() == 0

    def test_against_rational_intersection_oracle(self):
        for a, b in coprime_pairs(10):
            for p in rd.enumerate_paths(a, b):
                filling = rd.laser_filling(p)
                for box in filling.boxes():
                    assert filling.value(*box) == laser_value_by_intersection(p, *box)

    def test_total_is_skew_length(self):
        for a, b in coprime_pairs(10):
            for p in rd.enumerate_paths(a, b):
                assert rd.laser_filling(p).total() == rd.skew_length(p)


class TestIntervalGrid:
    def test_running_intervals(self, running):
        grid = rd.interval_grid(running)
        assert grid.north_intervals == ((0, 8), (8, 16), (12, 20), (16, 24), (19, 27))
        assert grid.east_intervals == (
            (0, 5), (5, 10), (10, 15), (12, 17), (15, 20), (17, 22), (19, 24), (22, 27),
        )

    def test_shading_types_are_disjoint_and_cover(self, running):
        grid = rd.interval_grid(running)
        nw, se = grid.northwest_shaded(), grid.southeast_shaded()
        for r in range(grid.a):
            for c in range(grid.b):
                assert not (nw[r][c] and se[r][c])
                assert grid.shaded[r][c] == (nw[r][c] or se[r][c])

    def test_shading_sits_on_the_right_side_of_the_diagonal(self):
        # northwest cells lie above the diagonal, southeast cells below
        for a, b in coprime_pairs(9):
            for p in rd.enumerate_paths(a, b):
                grid = rd.interval_grid(p)
                nw, se = grid.northwest_shaded(), grid.southeast_shaded()
                for r in range(a):
                    for c in range(b):
                        value = r * b - (c + 1) * a
                        if nw[r][c]:
                            assert value > 0
                        if se[r][c]:
                            assert value < 0

    def test_lowest_path_grid(self):
        p = rd.lowest_path(2, 3)
        assert rd.zeta_via_intervals(p) == rd.full_path(2, 3)


class TestRelations:
    def test_eta_is_zeta_of_conjugate(self):
        for a, b in coprime_pairs(11):
            for p in rd.enumerate_paths(a, b):
                assert rd.eta(p) == rd.zeta(rd.conjugate(p))

    def test_flip_relations(self):
        for a, b in coprime_pairs(11):
            for p in rd.enumerate_paths(a, b):
                flipped = rd.flip(p)
                assert rd.zeta(flipped) == rd.flip(rd.eta(p))
                assert rd.eta(flipped) == rd.flip(rd.zeta(p))

    def test_skew_length_to_coarea(self):
        for a, b in coprime_pairs(11):
            for p in rd.enumerate_paths(a, b):
                q = rd.zeta(p)
                assert rd.skew_length(p) == rd.coarea(q)
                assert rd.dinv(p) == rd.area(q)
