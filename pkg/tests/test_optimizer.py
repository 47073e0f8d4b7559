import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fcad.capacities import chi_b_value, q_value
from fcad.entropy import h2, xlog2
from fcad.optimizer import SimplexPoint, maximize_1d, maximize_simplex, scan_simplex

LOG2_3 = math.log2(3.0)


def shannon_objective(pt: SimplexPoint) -> float:
    return float(-xlog2(pt.alpha) - 2.0 * xlog2(pt.beta) - xlog2(pt.delta))


class TestSimplexPoint:
    def test_from_alpha_delta(self):
        pt = SimplexPoint.from_alpha_delta(0.2, 0.3)
        assert pt.beta == pytest.approx(0.25)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            SimplexPoint(-0.1, 0.5, 0.1)

    def test_rejects_bad_sum(self):
        with pytest.raises(ValueError):
            SimplexPoint(0.5, 0.5, 0.5)

    @given(
        st.floats(min_value=0.0, max_value=1.0),
        st.floats(min_value=0.0, max_value=1.0),
    )
    @settings(max_examples=200, deadline=None)
    def test_from_alpha_delta_always_valid(self, alpha, frac):
        delta = (1.0 - alpha) * frac
        pt = SimplexPoint.from_alpha_delta(alpha, delta)
        assert pt.alpha + 2.0 * pt.beta + pt.delta == pytest.approx(1.0, abs=1e-12)


class TestMaximizeSimplex:
    def test_shannon_entropy_peak(self):
        result = maximize_simplex(shannon_objective)
        assert abs(result.value - 2.0) < 1e-12
        assert result.point.alpha == pytest.approx(0.25, abs=1e-7)
        assert result.point.delta == pytest.approx(0.25, abs=1e-7)

    def test_coherent_info_noiseless(self):
        result = maximize_simplex(lambda pt: float(q_value(pt.alpha, pt.delta, 1.0)))
        assert abs(result.value - 2.0) < 1e-12

    def test_coherent_info_low_transmissivity_boundary(self):
        """Below eta = 1/2 the maximum sits on the delta = 0 face at log2(3)."""
        result = maximize_simplex(lambda pt: float(q_value(pt.alpha, pt.delta, 0.3)))
        assert abs(result.value - LOG2_3) < 1e-4
        assert result.point.delta < 1e-7

    def test_refinement_is_monotone(self):
        objective = lambda pt: float(chi_b_value(pt.alpha, pt.delta, 0.37))
        coarse_only = maximize_simplex(objective, coarse_step=0.01, refine_tol=0.01)
        refined = maximize_simplex(objective, coarse_step=0.01, refine_tol=1e-7)
        assert refined.value >= coarse_only.value

    def test_deterministic(self):
        objective = lambda pt: float(chi_b_value(pt.alpha, pt.delta, 0.61))
        a = maximize_simplex(objective)
        b = maximize_simplex(objective)
        assert a == b

    def test_grid_objective_matches_scalar_path(self):
        eta = 0.44
        scalar = maximize_simplex(lambda pt: float(chi_b_value(pt.alpha, pt.delta, eta)))
        accelerated = maximize_simplex(
            lambda pt: float(chi_b_value(pt.alpha, pt.delta, eta)),
            grid_objective=lambda a, d: chi_b_value(a, d, eta),
        )
        assert scalar == accelerated

    def test_value_matches_point(self):
        objective = lambda pt: float(chi_b_value(pt.alpha, pt.delta, 0.8))
        result = maximize_simplex(objective)
        assert abs(result.value - objective(result.point)) < 1e-12

    def test_agrees_with_flat_grid_oracle(self):
        """Coarse-and-refine matches the exhaustive 1e-4 grid in value."""
        rng = np.random.default_rng(2024)
        for eta in rng.uniform(0.0, 1.0, 5):
            eta = float(eta)
            fast = maximize_simplex(
                lambda pt: float(chi_b_value(pt.alpha, pt.delta, eta)),
                refine_tol=1e-7,
                grid_objective=lambda a, d: chi_b_value(a, d, eta),
            )
            flat = scan_simplex(lambda a, d: chi_b_value(a, d, eta), step=1e-4)
            assert abs(fast.value - flat.value) < 1e-4


class TestMaximize1d:
    def test_binary_entropy(self):
        result = maximize_1d(lambda p: float(h2(p)), 0.0, 1.0)
        assert abs(result.value - 1.0) < 1e-12
        assert abs(result.point - 0.5) < 1e-6

    def test_noiseless_damping_gain(self):
        gain = lambda p: float(h2(p)) - float(h2(0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - 0.0 * p * p)))))
        result = maximize_1d(gain, 0.0, 1.0)
        assert abs(result.value - 1.0) < 1e-12

    def test_grid_cross_check_agreement(self):
        eta = 0.75

        def gain(p: float) -> float:
            root = math.sqrt(max(0.0, 1.0 - 4.0 * eta * (1.0 - eta) * p * p))
            return float(h2(eta * p)) - float(h2(0.5 * (1.0 + root)))

        golden = maximize_1d(gain, 0.0, 1.0)
        fine_grid = max(gain(k / 100000.0) for k in range(100001))
        assert abs(golden.value - fine_grid) < 1e-6

    def test_catches_non_unimodal(self):
        """The flat grid pass rescues a bimodal objective."""
        bumps = lambda x: -((x - 0.1) ** 2) * ((x - 0.9) ** 2)
        result = maximize_1d(bumps, 0.0, 1.0)
        assert result.value == pytest.approx(0.0, abs=1e-9)

    def test_requires_ordered_bracket(self):
        with pytest.raises(ValueError):
            maximize_1d(lambda x: x, 1.0, 0.0)

    def test_determinism(self):
        result_a = maximize_1d(lambda p: float(h2(p)), 0.0, 1.0)
        result_b = maximize_1d(lambda p: float(h2(p)), 0.0, 1.0)
        assert result_a == result_b
