import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shatterbound.bounds import (
    BoundQuery,
    NoBracketError,
    bound_report,
    delta_bound,
    emit_epsilon_curve,
    max_eps_report,
    min_n_report,
    solve_max_eps,
    solve_min_n,
    solve_min_n_trace,
)
from shatterbound.shattering import HypothesisSpec, epsilon_curve

LN_001 = math.log(0.01)


class TestBoundQuery:
    def test_field_validation(self):
        with pytest.raises(ValueError):
            BoundQuery(spec=HypothesisSpec(1, 1), eps=1.2)
        with pytest.raises(ValueError):
            BoundQuery(spec=HypothesisSpec(1, 1), delta=0.0)
        with pytest.raises(ValueError):
            BoundQuery(spec=HypothesisSpec(1, 1), n=0)


class TestDeltaBound:
    def test_single_sample(self):
        got = delta_bound(1, 0.5, HypothesisSpec(1, 1)).log_value
        assert got == pytest.approx(1.3237943611198906, abs=1e-12)

    def test_four_points_dimension_two(self):
        got = delta_bound(4, 0.5, HypothesisSpec(2, 1)).log_value
        assert got == pytest.approx(3.082204510175204, abs=1e-12)

    def test_headline_sample_size_gives_delta_near_one_percent(self):
        got = delta_bound(1026780, 0.05, HypothesisSpec(3, 16)).log_value
        assert abs(got - LN_001) <= 0.15

    def test_rejects_eps_outside_unit_interval(self):
        with pytest.raises(ValueError):
            delta_bound(10, 1.0, HypothesisSpec(1, 1))


class TestSolveMinN:
    def test_headline_example(self):
        n_star = solve_min_n(0.01, 0.05, HypothesisSpec(3, 16))
        assert abs(n_star - 1.02678e6) <= 0.005 * 1.02678e6

    def test_crossing_is_tight(self):
        spec = HypothesisSpec(3, 16)
        n_star = solve_min_n(0.01, 0.05, spec)
        assert delta_bound(n_star, 0.05, spec).log_value <= LN_001
        assert delta_bound(n_star - 1, 0.05, spec).log_value > LN_001

    def test_flat_space_closed_form(self):
        # h=0 keeps the count at 2, so the bound is ln4 - n*eps^2/4 and the
        # crossing is the first integer past (ln4 - ln delta)/(eps^2/4)
        expected = math.ceil((math.log(4) - LN_001) / (0.05**2 / 4))
        assert expected == 9587
        assert solve_min_n(0.01, 0.05, HypothesisSpec(0, 1)) == expected

    def test_smaller_delta_needs_more_samples(self):
        spec = HypothesisSpec(3, 16)
        assert solve_min_n(0.001, 0.05, spec) > solve_min_n(0.01, 0.05, spec)

    def test_strictly_decreasing_past_crossing(self):
        spec = HypothesisSpec(3, 16)
        n_star, trace = solve_min_n_trace(0.01, 0.05, spec)
        prev = delta_bound(n_star, 0.05, spec).log_value
        for k in range(1, 101):
            cur = delta_bound(n_star + k * 997, 0.05, spec).log_value
            assert cur < prev
            assert cur <= LN_001
            prev = cur
        assert trace.bracket[0] < n_star <= trace.bracket[1]

    def test_unreachable_target_raises(self):
        with pytest.raises(NoBracketError):
            solve_min_n(0.01, 0.05, HypothesisSpec(3, 16), ceiling=1000)

    def test_trace_expansion_is_doubling(self):
        _, trace = solve_min_n_trace(0.01, 0.05, HypothesisSpec(2, 4))
        ns = [n for n, _ in trace.expansion]
        assert ns == [2**i for i in range(len(ns))]
        assert all(v <= LN_001 for _, v in trace.tail_probes)


class TestSolveMaxEps:
    def test_headline_inversion(self):
        got = solve_max_eps(1026780, 0.01, HypothesisSpec(3, 16))
        assert abs(got - 0.05) <= 0.001

    def test_saturated_case_is_vacuous(self):
        got = solve_max_eps(10, 0.5, HypothesisSpec(9, 1))
        assert got == pytest.approx(1.8240357635440533, abs=1e-12)
        rep = max_eps_report(10, 0.5, HypothesisSpec(9, 1))
        assert rep.vacuous and rep.saturated
        assert rep.primary == "solved_eps"

    def test_round_trip_specific(self):
        spec = HypothesisSpec(2, 4)
        eps = solve_max_eps(1000, 0.05, spec)
        back = delta_bound(1000, eps, spec).log_value
        assert abs(back - math.log(0.05)) <= 1e-9

    @given(
        st.integers(10, 10**6),
        st.floats(min_value=1e-6, max_value=0.5),
        st.integers(0, 4),
        st.integers(1, 16),
    )
    @settings(max_examples=100)
    def test_round_trip_randomized(self, n, delta, h, p):
        spec = HypothesisSpec(h, p)
        eps = solve_max_eps(n, delta, spec)
        if not 0.0 < eps < 1.0:
            return  # vacuous answers fall outside delta_bound's eps domain
        back = delta_bound(n, eps, spec).log_value
        assert abs(back - math.log(delta)) <= 1e-9


class TestReports:
    def test_bound_report_flags(self):
        rep = bound_report(4, 0.5, HypothesisSpec(2, 1))
        assert rep.vacuous and not rep.saturated
        assert rep.primary == "delta_log"
        rep = bound_report(2, 0.5, HypothesisSpec(3, 1))
        assert rep.saturated

    def test_min_n_report_carries_trace(self):
        rep = min_n_report(0.01, 0.05, HypothesisSpec(0, 1))
        assert rep.solved_n == 9587
        assert rep.trace is not None
        assert rep.primary == "solved_n"


class TestEmitEpsilonCurve:
    def test_single_point_grid(self):
        rows = emit_epsilon_curve([10**6], [HypothesisSpec(3, 16)])
        assert len(rows) == 1
        assert rows[0].epsilon == pytest.approx(0.05374885530581072, abs=1e-12)

    def test_row_ordering_and_offsets(self):
        grid = [100, 1000, 10000]
        specs = [HypothesisSpec(3, 16), HypothesisSpec(2, 1), HypothesisSpec(2, 16)]
        rows = emit_epsilon_curve(grid, specs)
        keys = [(r.h, r.p, r.n) for r in rows]
        assert keys == sorted(keys)
        by_key = {(r.h, r.p, r.n): r.epsilon for r in rows}
        for n in grid:
            assert by_key[(3, 16, n)] > by_key[(2, 16, n)] > by_key[(2, 1, n)]

    def test_matches_pointwise_evaluation(self):
        rows = emit_epsilon_curve([50, 500], [HypothesisSpec(1, 2)])
        for row in rows:
            assert row.epsilon == epsilon_curve(row.n, HypothesisSpec(row.h, row.p))

    def test_eventually_decreasing_along_grid(self):
        grid = list(range(10, 2000, 7))
        rows = emit_epsilon_curve(grid, [HypothesisSpec(2, 3)])
        eps = [r.epsilon for r in rows]
        assert all(a > b for a, b in zip(eps, eps[1:]))

    def test_rejects_bad_grids(self):
        with pytest.raises(ValueError):
            emit_epsilon_curve([], [HypothesisSpec(1, 1)])
        with pytest.raises(ValueError):
            emit_epsilon_curve([5, 5], [HypothesisSpec(1, 1)])
        with pytest.raises(ValueError):
            emit_epsilon_curve([9, 3], [HypothesisSpec(1, 1)])
