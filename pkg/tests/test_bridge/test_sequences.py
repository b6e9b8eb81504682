"""
Tests for the weighted-shift bridge sequences.
"""

import math

import numpy as np
import pytest

from src.bridge import (
    DEFAULT_TERMS,
    SequenceLengthError,
    beta_alpha,
    fwd_diff,
    leibniz_check,
    shift_weights_to_frame,
)
from src.symbols import PositivityError, parse


class TestBetaAlpha:
    """Tests for beta_alpha."""

    def test_linear(self):
        """Test x+1 gives beta = 1, 2, 3, ... and alpha = sqrt((n+2)/(n+1))."""
        weights = beta_alpha(parse("x+1"), 5)
        np.testing.assert_array_equal(weights.beta, [1.0, 2.0, 3.0, 4.0, 5.0, 6.0])
        n = np.arange(5)
        np.testing.assert_allclose(weights.alpha, np.sqrt((n + 2) / (n + 1)), rtol=1e-15)
        assert weights.terms == 5

    def test_constant(self):
        """Test phi = 1 is the unweighted shift."""
        weights = beta_alpha(parse("1"), 4)
        assert np.all(weights.beta == 1.0)
        assert np.all(weights.alpha == 1.0)

    def test_exponential_decay(self):
        """Test exp(-x) has constant alpha = exp(-1/2)."""
        weights = beta_alpha(parse("exp(-x)"), 10)
        np.testing.assert_allclose(weights.beta, np.exp(-np.arange(11.0)), rtol=1e-15)
        np.testing.assert_allclose(weights.alpha, math.exp(-0.5), rtol=1e-14)

    def test_dual_and_normalised(self):
        """Test the dual weights and the normalised beta."""
        weights = beta_alpha(parse("x+2"), 3)
        np.testing.assert_allclose(weights.dual_alpha * weights.alpha, 1.0, rtol=1e-15)
        np.testing.assert_allclose(weights.normalized_beta, [1.0, 1.5, 2.0, 2.5])

    def test_alpha_beta_coherence(self):
        """Test alpha_n^2 = beta_{n+1}/beta_n."""
        weights = beta_alpha(parse("2*x - log(cosh(x-10)) + 100"))
        assert weights.beta.size == DEFAULT_TERMS + 1
        np.testing.assert_allclose(weights.alpha ** 2, weights.beta[1:] / weights.beta[:-1], rtol=1e-14)

    def test_too_short(self):
        """Test N must be at least 1."""
        with pytest.raises(ValueError):
            beta_alpha(parse("1"), 0)

    def test_non_positive(self):
        """Test a vanishing symbol reports the index."""
        with pytest.raises(PositivityError) as exc:
            beta_alpha(parse("x"), 4)
        assert exc.value.index == 0

    def test_frame(self):
        """Test the table layout n,beta,alpha,dual_alpha."""
        frame = shift_weights_to_frame(beta_alpha(parse("x+1"), 3))
        assert list(frame.columns) == ["n", "beta", "alpha", "dual_alpha"]
        assert len(frame) == 4
        assert np.isnan(frame["alpha"].iloc[-1])


class TestFwdDiff:
    """Tests for fwd_diff."""

    def test_squares(self):
        """Test differences of the squares."""
        squares = [1.0, 4.0, 9.0, 16.0]
        np.testing.assert_array_equal(fwd_diff(squares, 1), [3.0, 5.0, 7.0])
        np.testing.assert_array_equal(fwd_diff(squares, 2), [2.0, 2.0])

    def test_order_zero_is_a_copy(self):
        """Test order 0 returns the sequence itself."""
        seq = np.array([1.0, 2.0])
        out = fwd_diff(seq, 0)
        np.testing.assert_array_equal(out, seq)
        out[0] = 5.0
        assert seq[0] == 1.0

    def test_too_short(self):
        """Test the order must be below the length."""
        with pytest.raises(SequenceLengthError):
            fwd_diff([1.0, 2.0], 2)

    def test_negative_order(self):
        """Test negative orders are rejected."""
        with pytest.raises(ValueError):
            fwd_diff([1.0, 2.0], -1)


class TestLeibniz:
    """Tests for the discrete Leibniz identity."""

    def test_linear_and_reciprocal(self):
        """Test beta of x+1 against 1/beta at n = 2."""
        beta = beta_alpha(parse("x+1"), 20).beta
        assert leibniz_check(beta, 1.0 / beta, 2) <= 1e-12

    def test_order_zero_is_exact(self):
        """Test n = 0 has no residual."""
        beta = beta_alpha(parse("sqrt(x+1)"), 10).beta
        assert leibniz_check(beta, 1.0 / beta, 0) == 0.0

    def test_random_sequences(self):
        """Test random positive sequences satisfy the identity."""
        rng = np.random.default_rng(7)
        phi = rng.uniform(0.5, 2.0, 40)
        psi = rng.uniform(0.5, 2.0, 40)
        assert leibniz_check(phi, psi, 3, relative=True) <= 1e-10

    def test_length_mismatch(self):
        """Test the sequences must have equal length."""
        with pytest.raises(SequenceLengthError):
            leibniz_check([1.0, 2.0, 3.0], [1.0, 2.0], 1)
