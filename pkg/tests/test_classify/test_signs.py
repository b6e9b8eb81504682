"""
Tests for tolerance-banded sign detection.
"""

import pytest

from src.classify import (
    ClassifyConfig,
    SignVerdict,
    VerdictStatus,
    order_sign,
    required_sign,
    sample_grid,
)


class TestOrderSign:
    """Tests for order_sign."""

    def test_non_negative(self):
        """Test strictly positive samples are NonNegative."""
        result = order_sign([1.0, 2.0, 3.0], [0.0, 1.0, 2.0], 0, 1e-9)
        assert result.verdict is SignVerdict.NON_NEGATIVE
        assert result.epsilon == pytest.approx(4e-9)
        assert result.negative_witness is None

    def test_zero(self):
        """Test all-zero samples are Zero."""
        result = order_sign([0.0, 0.0], [0.0, 1.0], 3, 1e-9)
        assert result.verdict is SignVerdict.ZERO

    def test_mixed_with_first_witnesses(self):
        """Test mixed samples report the first sample of each sign."""
        result = order_sign([0.5, -1.0, 1.0, -2.0], [0.0, 1.0, 2.0, 3.0], 2, 1e-9)
        assert result.verdict is SignVerdict.MIXED
        assert result.negative_witness.x == 1.0
        assert result.negative_witness.value == -1.0
        assert result.negative_witness.order == 2
        assert result.positive_witness.x == 0.0

    def test_integer_points_stay_integers(self):
        """Test sequence indices are reported as ints."""
        result = order_sign([1.0, -1.0], [0, 1], 1, 1e-9)
        assert result.negative_witness.x == 1
        assert isinstance(result.negative_witness.x, int)

    def test_steps_are_carried(self):
        """Test the difference step is attached to witnesses."""
        result = order_sign([-1.0], [2.0], 1, 1e-9, steps=[0.5])
        assert result.negative_witness.t == 0.5

    def test_values_inside_band_are_not_witnesses(self):
        """Test values inside the zero band do not become witnesses."""
        result = order_sign([1.0, -1e-10], [0.0, 1.0], 0, 1e-9)
        assert result.verdict is SignVerdict.NON_NEGATIVE
        assert result.negative_witness is None

    def test_empty_values(self):
        """Test empty input is rejected."""
        with pytest.raises(ValueError):
            order_sign([], [], 0, 1e-9)

    def test_length_mismatch(self):
        """Test values and points must have the same length."""
        with pytest.raises(ValueError):
            order_sign([1.0, 2.0], [0.0], 0, 1e-9)


class TestRequiredSign:
    """Tests for required_sign."""

    def test_holds(self):
        """Test a clean sign Holds."""
        data = order_sign([1.0, 2.0], [0.0, 1.0], 0, 1e-9)
        assert required_sign(data, 1).status is VerdictStatus.HOLDS

    def test_fails_with_witness(self):
        """Test a violation beyond the band Fails with its witness."""
        data = order_sign([1.0, 2.0], [0.0, 1.0], 0, 1e-9)
        verdict = required_sign(data, -1)
        assert verdict.is_fails
        assert verdict.witness.x == 0.0

    def test_zero_holds_both_ways(self):
        """Test an all-zero order Holds in both directions."""
        data = order_sign([0.0, 1e-12], [0.0, 1.0], 4, 1e-9)
        assert required_sign(data, 1).is_holds
        assert required_sign(data, -1).is_holds

    def test_inside_band_is_inconclusive(self):
        """Test wrong-sign values inside the band are Inconclusive."""
        data = order_sign([1.0, -1e-10], [0.0, 1.0], 0, 1e-9)
        verdict = required_sign(data, 1)
        assert verdict.is_inconclusive
        assert verdict.note

    def test_rounding_noise_is_ignored(self):
        """Test wrong-sign values at rounding level still Hold."""
        data = order_sign([1.0, -1e-13], [0.0, 1.0], 0, 1e-9)
        assert required_sign(data, 1).is_holds

    def test_invalid_sign(self):
        """Test the sign must be +1 or -1."""
        data = order_sign([1.0], [0.0], 0, 1e-9)
        with pytest.raises(ValueError):
            required_sign(data, 0)


class TestClassifyConfig:
    """Tests for ClassifyConfig."""

    def test_defaults(self):
        """Test the default settings."""
        cfg = ClassifyConfig()
        assert cfg.order == 8
        assert cfg.x_max == 20.0
        assert cfg.t_values == (0.1, 0.25, 0.5, 1.0, 2.0, 5.0)
        assert cfg.tol == 1e-9

    def test_grid_is_sorted_union(self):
        """Test the grid merges the uniform and geometric parts."""
        points = ClassifyConfig().points
        assert points[0] == 0.0
        assert points[-1] == 20.0
        assert (points[1:] > points[:-1]).all()
        assert points.min() == 0.0
        assert 1e-3 in points

    def test_uniform_only(self):
        """Test n_geometric=0 keeps the uniform grid."""
        points = sample_grid(ClassifyConfig(n_geometric=0, n_uniform=11, x_max=10.0))
        assert points.tolist() == [float(i) for i in range(11)]

    @pytest.mark.parametrize("kwargs", [
        {"order": 1},
        {"order": 17},
        {"x_max": 0.0},
        {"n_uniform": 1},
        {"n_geometric": -1},
        {"geometric_min": 1.0},
        {"t_values": ()},
        {"t_values": (0.5, 0.0)},
        {"tol": 0.0},
    ])
    def test_invalid_settings(self, kwargs):
        """Test out-of-range settings are rejected."""
        with pytest.raises(ValueError):
            ClassifyConfig(**kwargs)

    def test_describe(self):
        """Test the grid description names both parts."""
        text = ClassifyConfig().describe()
        assert "201 uniform points on [0, 20]" in text
        assert "50 geometric points" in text
