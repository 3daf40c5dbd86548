"""Unit tests for the pure formula layer."""

import math

import numpy as np
import pytest

from marketflow.book import InteractionOutcome
from marketflow.physics import (
    DegenerateBookError,
    FlowRegime,
    classify_flow,
    collision_ratio,
    fluid_density,
    kernel_weight,
    obstacle_density,
    reynolds_closed_form,
    reynolds_tick,
    size_at,
    viscosity,
)


def _outcome(obstacle=1000.0, order=500.0, volume=5.0, v_t=1.0,
             spread=1, collision=True):
    return InteractionOutcome(
        traded_volume=volume, price_change=v_t, spread_before=spread,
        obstacle_notional=obstacle, order_notional=order, collision=collision)


def _rel(a, b):
    return abs(a - b) / abs(b)


class TestKernelWeight:
    def test_peak_value_pin(self):
        # closed form at r = 0, h = 10
        expected = 1.0 / (1000.0 * math.pi ** 1.5)
        assert _rel(kernel_weight(0.0, 10.0), expected) <= 1e-12
        assert abs(kernel_weight(0.0, 10.0) - 1.79587e-4) < 1e-9

    def test_one_bandwidth_out_is_e_fold_down(self):
        for h in (0.5, 1.0, 10.0):
            assert kernel_weight(h, h) == pytest.approx(
                kernel_weight(0.0, h) * math.exp(-1.0), rel=1e-14)

    def test_even_in_r(self):
        rng = np.random.default_rng(11)
        for r in rng.uniform(-50, 50, size=200):
            assert kernel_weight(-r, 10.0) == kernel_weight(r, 10.0)

    def test_maximal_at_zero(self):
        peak = kernel_weight(0.0, 10.0)
        for r in (0.1, 1.0, 5.0, 30.0):
            assert kernel_weight(r, 10.0) < peak

    def test_rejects_nonpositive_h(self):
        with pytest.raises(ValueError):
            kernel_weight(1.0, 0.0)
        with pytest.raises(ValueError):
            kernel_weight(1.0, -2.0)

    @pytest.mark.parametrize("h", [2.5, 10.0])
    def test_line_integral_matches_closed_form(self, h):
        # trapezoid rule at step h/100 over [-10h, 10h]; the Gaussian
        # tail beyond that range is far below the tolerance
        step = h / 100.0
        n = 2000
        ys = [kernel_weight(-10.0 * h + i * step, h) for i in range(n + 1)]
        integral = step * (sum(ys) - 0.5 * (ys[0] + ys[-1]))
        assert _rel(integral, 1.0 / (h * h * math.pi)) <= 1e-6


class TestSizeAt:
    def test_reference_pin(self):
        # m = 2000, h = 10, unit spread, at the bid
        size = size_at(3681, 3681, 3682, 2000.0, 10.0)
        assert abs(size - 0.7148) < 5e-5
        expected = 2000.0 * (kernel_weight(0, 10.0) + kernel_weight(1, 10.0))
        assert size == expected

    def test_linear_in_m(self):
        a = size_at(3680, 3681, 3682, 1000.0, 10.0)
        b = size_at(3680, 3681, 3682, 2000.0, 10.0)
        assert b == 2 * a

    def test_symmetric_across_symmetric_anchors(self):
        # equidistant prices around a unit spread get equal sizes
        assert size_at(3681, 3681, 3682, 2000.0, 10.0) == \
            size_at(3682, 3681, 3682, 2000.0, 10.0)

    def test_vanishes_far_away(self):
        assert size_at(3681 - 90, 3681, 3682, 2000.0, 10.0) < 1e-30


class TestDensities:
    def test_arithmetic(self):
        assert obstacle_density(10.0, 100.0, 5.0) == 200.0
        assert fluid_density(5.0, 100.0, 5.0) == 100.0

    def test_zero_volume_is_infinite(self):
        assert obstacle_density(10.0, 100.0, 0.0) == math.inf
        assert fluid_density(5.0, 100.0, 0.0) == math.inf

    def test_zero_size(self):
        assert obstacle_density(0.0, 100.0, 2.0) == 0.0

    def test_equal_inputs_agree(self):
        assert obstacle_density(7.0, 3.0, 2.0) == fluid_density(7.0, 3.0, 2.0)


class TestViscosity:
    def test_arithmetic(self):
        assert viscosity(_outcome(obstacle=1000.0, order=500.0,
                                  volume=5.0, v_t=1.0)) == 100.0

    def test_no_trade_is_infinite(self):
        assert viscosity(_outcome(volume=0.0, v_t=0.0, collision=False)) == math.inf

    def test_zero_price_change_is_infinite(self):
        assert viscosity(_outcome(volume=5.0, v_t=0.0)) == math.inf

    def test_perfect_collision_is_zero(self):
        assert viscosity(_outcome(obstacle=800.0, order=800.0,
                                  volume=2.0, v_t=0.5)) == 0.0

    def test_reported_as_magnitude(self):
        fat = viscosity(_outcome(obstacle=500.0, order=1000.0,
                                 volume=5.0, v_t=1.0))
        assert fat == 100.0


class TestCollisionRatio:
    def test_arithmetic(self):
        assert collision_ratio(_outcome(obstacle=1000.0, order=500.0)) == 0.5

    def test_equal_notionals(self):
        assert collision_ratio(_outcome(obstacle=640.0, order=640.0)) == 1.0

    def test_passive_is_zero(self):
        assert collision_ratio(_outcome(collision=False)) == 0.0

    def test_clamped_at_one(self):
        assert collision_ratio(_outcome(obstacle=100.0, order=250.0)) == 1.0

    def test_degenerate_obstacle_rejected(self):
        with pytest.raises(DegenerateBookError):
            collision_ratio(_outcome(obstacle=0.0))


class TestReynoldsTick:
    def test_zero_velocity(self):
        assert reynolds_tick(_outcome(v_t=0.0)) == 0.0

    def test_passive_tick(self):
        assert reynolds_tick(_outcome(collision=False, v_t=0.0)) == 0.0

    def test_saturated_ratio_is_infinite(self):
        assert reynolds_tick(_outcome(obstacle=500.0, order=500.0,
                                      v_t=0.5)) == math.inf

    def test_matches_closed_form_on_random_outcomes(self):
        rng = np.random.default_rng(7)
        for _ in range(2000):
            obstacle = rng.uniform(1.0, 1e4)
            ratio = rng.uniform(1e-6, 0.999999)
            out = _outcome(obstacle=obstacle, order=obstacle * ratio,
                           v_t=rng.uniform(-5, 5) or 0.5,
                           spread=int(rng.integers(1, 21)))
            p_hat = collision_ratio(out)
            want = reynolds_closed_form(out.price_change,
                                        float(out.spread_before), p_hat)
            assert _rel(reynolds_tick(out), want) <= 1e-12


class TestReynoldsClosedForm:
    def test_unit_pin(self):
        assert reynolds_closed_form(1.0, 1.0, 0.5) == 1.0

    def test_arithmetic_pin(self):
        # 4 * 5 * 99 up to double round-off
        assert _rel(reynolds_closed_form(2.0, 5.0, 0.99), 1980.0) <= 1e-13

    def test_zero_velocity(self):
        assert reynolds_closed_form(0.0, 7.0, 0.9) == 0.0

    def test_rejects_saturated_probability(self):
        for p in (1.0, 1.5, -0.1):
            with pytest.raises(ValueError):
                reynolds_closed_form(1.0, 1.0, p)

    def test_even_in_velocity(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            v = rng.uniform(0.01, 5.0)
            l = rng.uniform(1.0, 20.0)
            p = rng.uniform(0.0, 0.99)
            assert reynolds_closed_form(-v, l, p) == reynolds_closed_form(v, l, p)

    def test_linear_in_l(self):
        rng = np.random.default_rng(17)
        for _ in range(200):
            v = rng.uniform(0.01, 5.0)
            l = rng.uniform(1.0, 20.0)
            c = rng.uniform(0.1, 10.0)
            p = rng.uniform(0.0, 0.99)
            assert reynolds_closed_form(v, c * l, p) == pytest.approx(
                c * reynolds_closed_form(v, l, p), rel=1e-12)

    def test_spread_one_to_twenty_scales_exactly(self):
        rng = np.random.default_rng(19)
        for _ in range(200):
            v = rng.uniform(-5.0, 5.0)
            p = rng.uniform(0.0, 0.99)
            assert reynolds_closed_form(v, 20.0, p) == \
                20.0 * reynolds_closed_form(v, 1.0, p)

    def test_monotone_in_p(self):
        values = [reynolds_closed_form(1.0, 1.0, p / 100) for p in range(100)]
        assert all(a < b for a, b in zip(values, values[1:]))


class TestClassifyFlow:
    @pytest.mark.parametrize("n_r,regime", [
        (0.0, FlowRegime.LAMINAR),
        (1000.0, FlowRegime.LAMINAR),
        (2299.999, FlowRegime.LAMINAR),
        (2300.0, FlowRegime.TRANSITIONAL),
        (2500.0, FlowRegime.TRANSITIONAL),
        (2900.0, FlowRegime.TRANSITIONAL),
        (2900.001, FlowRegime.TURBULENT),
        (3000.0, FlowRegime.TURBULENT),
        (math.inf, FlowRegime.TURBULENT),
    ])
    def test_thresholds(self, n_r, regime):
        assert classify_flow(n_r) is regime


class TestLimitRelationship:
    def test_viscosity_and_reynolds_are_inverse_in_the_limits(self):
        # saturated collision with equal notionals: mu -> 0, N_R -> inf
        sat = _outcome(obstacle=600.0, order=600.0, volume=3.0, v_t=0.5)
        assert viscosity(sat) == 0.0
        assert reynolds_tick(sat) == math.inf
        # no trade: mu -> inf, N_R -> 0
        idle = _outcome(volume=0.0, v_t=0.0, collision=False)
        assert viscosity(idle) == math.inf
        assert reynolds_tick(idle) == 0.0
