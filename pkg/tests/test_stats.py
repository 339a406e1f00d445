"""Scalar statistics: area family, the five skew-length routes, dinv, delta."""

from __future__ import annotations

import rational_dyck as rd

from conftest import coprime_pairs


def all_paths(max_sum):
    for a, b in coprime_pairs(max_sum):
        yield from rd.enumerate_paths(a, b)


class TestAreaFamily:
    def test_running(self, running):
        assert rd.area(running) == 9
        assert rd.coarea(running) == 5
        assert rd.rank(running) == 2
        assert rd.core_rank(running) == 9

    def test_extremes(self):
        low, full = rd.lowest_path(5, 8), rd.full_path(5, 8)
        assert (rd.area(low), rd.coarea(low)) == (0, 14)
        assert (rd.area(full), rd.coarea(full), rd.rank(full)) == (14, 0, 0)

    def test_area_plus_coarea(self):
        for p in all_paths(11):
            assert rd.area(p) + rd.coarea(p) == (p.a - 1) * (p.b - 1) // 2

    def test_core_rank_is_core_row_count(self):
        for p in all_paths(9):
            assert rd.core_rank(p) == rd.anderson(p).rows


class TestSkewLength:
    def test_running_five_ways(self, running):
        assert rd.skew_length_peaks_valleys(running) == 10
        assert rd.skew_inversions(running) == 10
        assert rd.flip_skew_inversions(running) == 10
        assert rd.skew_length_core(rd.anderson(running)) == 10
        assert rd.laser_filling(running).total() == 10

    def test_running_peak_valley_breakdown(self, running):
        filling = rd.row_length_filling(running)
        points = running.points()
        peaks, valleys = [], []
        for i in range(running.length - 1):
            pair = running.steps[i : i + 2]
            x, y = points[i + 1]
            if pair == "NE":
                peaks.append(filling.value(x, y - 1))
            elif pair == "EN":
                valleys.append(filling.value(x, y - 1))
        assert sorted(peaks) == [2, 4, 6]
        assert sorted(valleys) == [0, 2]

    def test_lowest_zero(self):
        p = rd.lowest_path(4, 7)
        assert rd.skew_inversions(p) == rd.flip_skew_inversions(p) == 0
        assert rd.skew_length_peaks_valleys(p) == 0

    def test_all_methods_agree_exhaustive(self):
        for p in all_paths(12):
            sl = rd.skew_length(p)
            assert rd.skew_length_peaks_valleys(p) == sl
            assert rd.flip_skew_inversions(p) == sl
            assert rd.skew_length_core(rd.anderson(p)) == sl
            assert rd.laser_filling(p).total() == sl

    def test_invariance_under_conjugate_and_flip(self):
        for p in all_paths(12):
            sl = rd.skew_length(p)
            assert rd.skew_length(rd.conjugate(p)) == sl
            assert rd.skew_length(rd.flip(p)) == sl


class TestCoSkewAndDinv:
    def test_running(self, running):
        assert rd.co_skew_length(running) == 4
        assert rd.dinv(running) == 4

    def test_dinv_equals_co_skew(self):
        for p in all_paths(11):
            assert rd.dinv(p) == rd.co_skew_length(p)

    def test_dinv_equals_area_of_zeta(self):
        for p in all_paths(11):
            assert rd.dinv(p) == rd.area(rd.zeta(p))

    def test_full_path_cross_check(self):
        full = rd.full_path(5, 8)
        assert rd.dinv(full) == rd.area(rd.zeta(full))


class TestDelta:
    def test_running(self, running):
        assert rd.delta(running) == 5

    def test_lowest(self):
        for a, b in [(2, 3), (5, 8), (1, 6), (4, 1)]:
            assert rd.delta(rd.lowest_path(a, b)) == a + b

    def test_full_58(self):
        assert rd.delta(rd.full_path(5, 8)) == 4  # levels {0, 8, 10, 5}

    def test_bounds(self):
        for p in all_paths(11):
            assert 1 <= rd.delta(p) <= p.a + p.b


class TestSummary:
    def test_running_schema(self, running):
        assert rd.statistics_summary(running) == {
            "area": 9,
            "coarea": 5,
            "rank": 2,
            "sl": 10,
            "slp": 4,
            "dinv": 4,
            "delta": 5,
        }
