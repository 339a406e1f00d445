"""Predecessor chains, bounce paths, and the chain-based inverses."""

from __future__ import annotations

import pytest

import rational_dyck as rd
from rational_dyck.bounce import fuss_delta_trace, search_delta_traces
from rational_dyck.errors import (
    DimensionTooSmall,
    NoBoxToAdd,
    NoEastInPrefix,
    NotFussCase,
)

from conftest import coprime_pairs


def delta_tilde(path):
    """Levels at most a*(k+1), the bounce-pinned lower bound for delta."""
    k = path.b // path.a
    bound = path.a * (k + 1)
    return sum(1 for v in path.reading_word() if v <= bound)


class TestConjPredecessor:
    def test_running_example_gamma_rotation(self, running):
        succ = rd.conj_predecessor(running)
        rho = rd.rotation_cycle(13, 1, rd.delta(running))
        expected = rd.gamma(running).conjugated_by(rho.inverse())
        assert rd.gamma(succ) == expected

    def test_bottom_raises(self):
        with pytest.raises(NoBoxToAdd):
            rd.conj_predecessor(rd.lowest_path(3, 5))

    def test_chains_reach_lowest(self):
        for a, b in [(3, 5), (4, 5), (2, 7)]:
            for p in rd.enumerate_paths(a, b):
                current = p
                hops = 0
                while rd.area(current) > 0:
                    nxt = rd.conj_predecessor(current)
                    assert rd.skew_length(nxt) < rd.skew_length(current)
                    current = nxt
                    hops += 1
                    assert hops <= (a - 1) * (b - 1)
                assert current == rd.lowest_path(a, b)


class TestZetaPredecessor:
    def test_running_example(self, running):
        q = rd.zeta(running)
        assert rd.zeta_predecessor(q, rd.delta(running)).steps == "NNENEENENEEEE"

    def test_commuting_square(self):
        for a, b in coprime_pairs(12):
            for p in rd.enumerate_paths(a, b):
                if rd.area(p) == 0:
                    continue
                expected = rd.zeta(rd.conj_predecessor(p))
                assert rd.zeta_predecessor(rd.zeta(p), rd.delta(p)) == expected

    def test_prefix_errors(self):
        q = rd.full_path(3, 4)  # NNNEEEE
        with pytest.raises(NoEastInPrefix):
            rd.zeta_predecessor(q, 2)
        # an all-east prefix cannot occur: every Dyck path starts with N,
        # so the all-north case is the only reachable prefix failure
        with pytest.raises(NoEastInPrefix):
            rd.zeta_predecessor(rd.DyckPath(1, 4, "NEEEE"), 1)

    def test_delta_range(self):
        q = rd.full_path(2, 3)
        with pytest.raises(ValueError):
            rd.zeta_predecessor(q, 0)
        with pytest.raises(ValueError):
            rd.zeta_predecessor(q, 6)


class TestInitialBounce:
    def test_needs_a_at_least_two(self):
        with pytest.raises(DimensionTooSmall):
            rd.initial_bounce(rd.lowest_path(1, 4))

    def test_23_values(self):
        b1 = rd.initial_bounce(rd.make_path(2, 3, "NENEE"))
        assert (b1.v, b1.h) == ((1, 1), (1,))
        b2 = rd.initial_bounce(rd.make_path(2, 3, "NNEEE"))
        assert (b2.v, b2.h) == ((2, 0), (2,))

    def test_vertex_walk_shape(self):
        bounce = rd.initial_bounce(rd.full_path(5, 8))
        assert bounce.vertices()[0] == (0, 0)
        assert len(bounce.v) == 5 // 5 + 1 or len(bounce.v) == 8 // 5 + 1

    def test_delta_tilde_equality(self):
        # the bounce length pins the count of levels at most a*(k+1)
        for a, b in coprime_pairs(12, min_dim=2):
            for p in rd.enumerate_paths(a, b):
                bounce = rd.initial_bounce(rd.zeta(p))
                assert delta_tilde(p) == bounce.v_total + bounce.h_total + 1

    def test_delta_window(self):
        for a, b in coprime_pairs(12, min_dim=2):
            r = b % a
            for p in rd.enumerate_paths(a, b):
                bounce = rd.initial_bounce(rd.zeta(p))
                low = bounce.v_total + bounce.h_total + 1
                assert low <= rd.delta(p) <= low + r - 1

    def test_fuss_window_is_tight(self):
        for a, b in [(2, 5), (3, 7), (4, 9), (2, 9)]:
            for p in rd.enumerate_paths(a, b):
                bounce = rd.initial_bounce(rd.zeta(p))
                assert rd.delta(p) == bounce.v_total + bounce.h_total + 1


class TestFussInverse:
    def test_not_fuss_rejected(self):
        with pytest.raises(NotFussCase):
            rd.zeta_inverse_fuss(rd.lowest_path(5, 8))

    def test_single_path_families(self):
        assert rd.zeta_inverse_fuss(rd.lowest_path(1, 6)) == rd.lowest_path(1, 6)
        assert rd.zeta_inverse_fuss(rd.lowest_path(4, 1)) == rd.lowest_path(4, 1)

    def test_round_trip_small(self):
        for a, b in [(2, 3), (2, 5), (3, 4), (3, 7), (4, 5), (4, 9), (5, 6)]:
            for p in rd.enumerate_paths(a, b):
                assert rd.zeta_inverse_fuss(rd.zeta(p)) == p

    def test_trace_of_lowest_image(self):
        # zeta(lowest) is the full path: the chain is already at its end
        assert fuss_delta_trace(rd.full_path(3, 4)) == ()
        assert rd.zeta_inverse_fuss(rd.full_path(3, 4)) == rd.lowest_path(3, 4)


class TestSearchInverse:
    def test_round_trip_desk_scale(self):
        # includes the wide-window b < a pairs; this is the slow test
        for a, b in coprime_pairs(13):
            for p in rd.enumerate_paths(a, b):
                assert rd.zeta_inverse_search(rd.zeta(p)) == p

    def test_fuss_inputs_have_width_one_window(self):
        for p in rd.enumerate_paths(3, 7):
            q = rd.zeta(p)
            found, _ = search_delta_traces(q, find_all=True)
            assert [path for path, _ in found] == [p]
            assert found[0][1] == fuss_delta_trace(q)

    def test_accepted_traces_all_decode_to_the_preimage(self):
        # several delta traces may survive; they must all decode to the same
        # (correct) path, and their multiplicity is telemetry, not asserted
        trace_counts = []
        for a, b in [(3, 5), (4, 5), (5, 4)]:
            for p in rd.enumerate_paths(a, b):
                found, _ = search_delta_traces(rd.zeta(p), find_all=True)
                assert found and all(path == p for path, _ in found)
                trace_counts.append(len(found))
        assert min(trace_counts) >= 1

    def test_running_example(self, running):
        assert rd.zeta_inverse_search(rd.zeta(running)) == running
