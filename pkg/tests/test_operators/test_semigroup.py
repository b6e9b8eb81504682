"""
Tests for the discretised weighted translation semigroup.
"""

import math

import numpy as np
import pytest

from src.classify import Direction, difference_pairs, finite_difference_check
from src.operators import (
    Grid,
    GridMismatchError,
    SampledFunction,
    ShiftAlignmentError,
    apply_adjoint,
    apply_st,
    inner,
    multiplier_bn,
    norm_st,
    power,
    quad_form_bn,
    sample,
    semigroup_residual,
    weight,
)
from src.symbols import PositivityError, SymbolDomainError, parse
from tests.conftest import SMOOTH_SYMBOLS


def bump(grid: Grid, centre: float = 5.0, radius: float = 2.0) -> SampledFunction:
    """Smooth compactly supported test function."""
    u = grid.nodes - centre
    return SampledFunction(grid, np.where(np.abs(u) < radius, (radius ** 2 - u ** 2) ** 2, 0.0))


def norm(f: SampledFunction) -> float:
    return math.sqrt(inner(f, f))


class TestSample:
    """Tests for sample."""

    def test_constant(self, operator_grid):
        """Test the constant symbol samples to ones."""
        np.testing.assert_array_equal(sample(parse("1"), operator_grid).values, np.ones(2001))

    def test_sqrt_shift(self):
        """Test sqrt(x+1) on [0, 4] with 5 nodes."""
        values = sample(parse("sqrt(x+1)"), Grid(4.0, 5)).values
        np.testing.assert_allclose(values, np.sqrt([1.0, 2.0, 3.0, 4.0, 5.0]), rtol=1e-15)

    def test_domain_error_reports_node(self, operator_grid):
        """Test log(x) fails at node 0."""
        with pytest.raises(SymbolDomainError) as exc:
            sample(parse("log(x)"), operator_grid)
        assert exc.value.index == 0


class TestWeight:
    """Tests for the weight function phi_t."""

    def test_sqrt_shift(self, operator_grid):
        """Test phi_1 of sqrt(x+1) at 2, 3 and 0.5."""
        w = weight(parse("sqrt(x+1)"), 1.0, operator_grid).values
        assert w[200] == pytest.approx(1.5 ** 0.25, abs=1e-12)
        assert w[300] == pytest.approx((4.0 / 3.0) ** 0.25, abs=1e-12)
        assert w[50] == 0.0

    def test_constant_is_indicator(self, operator_grid):
        """Test phi = 1 gives the indicator of [t, x_max]."""
        w = weight(parse("1"), 0.5, operator_grid).values
        assert np.all(w[:50] == 0.0)
        assert np.all(w[50:] == 1.0)

    def test_exponential_decay_is_constant(self, operator_grid):
        """Test exp(-x) has phi_2 = exp(-1) on x >= 2."""
        w = weight(parse("exp(-x)"), 2.0, operator_grid).values
        np.testing.assert_allclose(w[200:], math.exp(-1.0), rtol=1e-12)

    def test_zero_shift(self, operator_grid):
        """Test phi_0 is identically one."""
        w = weight(parse("sqrt(x+1)"), 0.0, operator_grid).values
        assert np.all(w == 1.0)

    def test_unaligned(self, operator_grid):
        """Test an unaligned shift is rejected."""
        with pytest.raises(ShiftAlignmentError):
            weight(parse("1"), 0.015, operator_grid)

    def test_non_positive_symbol(self, operator_grid):
        """Test a symbol that vanishes is rejected with its node."""
        with pytest.raises(PositivityError) as exc:
            weight(parse("x"), 1.0, operator_grid)
        assert exc.value.index == 0


class TestApply:
    """Tests for S_t and its adjoint."""

    def test_unweighted_right_translation(self, operator_grid):
        """Test phi = 1 translates to the right."""
        f = bump(operator_grid)
        out = apply_st(parse("1"), 1.0, f).values
        np.testing.assert_array_equal(out[100:], f.values[:-100])
        assert np.all(out[:100] == 0.0)

    def test_delta_at_origin(self, operator_grid):
        """Test a delta at node 0 moves to node 1 with weight sqrt(1+h)."""
        h = operator_grid.h
        values = np.zeros(2001)
        values[0] = 1.0 / math.sqrt(h)
        out = apply_st(parse("x+1"), h, SampledFunction(operator_grid, values)).values
        assert np.count_nonzero(out) == 1
        assert out[1] == pytest.approx(math.sqrt(1.0 + h) / math.sqrt(h), rel=1e-14)

    def test_zero_shift_is_identity(self, operator_grid):
        """Test S_0 = I."""
        f = bump(operator_grid)
        np.testing.assert_array_equal(apply_st(parse("sqrt(x+1)"), 0.0, f).values, f.values)

    def test_unweighted_adjoint_translates_left(self, operator_grid):
        """Test phi = 1 adjoint translates to the left."""
        f = bump(operator_grid)
        out = apply_adjoint(parse("1"), 1.0, f).values
        np.testing.assert_array_equal(out[:-100], f.values[100:])
        assert np.all(out[-100:] == 0.0)

    def test_adjoint_times_st_is_multiplication(self, operator_grid):
        """Test S_t* S_t f = phi(x+t)/phi(x) f."""
        e = parse("sqrt(x+1)")
        f = bump(operator_grid)
        out = apply_adjoint(e, 1.0, apply_st(e, 1.0, f)).values
        x = operator_grid.nodes
        np.testing.assert_allclose(out, np.sqrt(x + 2.0) / np.sqrt(x + 1.0) * f.values, rtol=1e-12)

    @pytest.mark.parametrize("text", SMOOTH_SYMBOLS)
    def test_adjoint_pairing(self, text, operator_grid):
        """Test <S_t f, g> = <f, S_t* g> away from the window edges."""
        e = parse(text)
        f = bump(operator_grid, 4.0, 2.0)
        g = bump(operator_grid, 7.0, 3.0)
        lhs = inner(apply_st(e, 1.5, f), g)
        rhs = inner(f, apply_adjoint(e, 1.5, g))
        assert abs(lhs - rhs) <= 1e-8 * norm(f) * norm(g)

    def test_grid_mismatch_in_pairing(self, operator_grid):
        """Test operator output cannot be paired across grids."""
        f = apply_st(parse("1"), 1.0, bump(operator_grid))
        with pytest.raises(GridMismatchError):
            inner(f, bump(Grid(10.0, 1001)))

    def test_power(self, operator_grid):
        """Test S_t applied twice equals S_2t."""
        e = parse("log(x+2)")
        f = bump(operator_grid)
        np.testing.assert_allclose(
            power(apply_st, e, 0.5, f, 2).values, apply_st(e, 1.0, f).values, rtol=1e-13, atol=1e-13
        )


class TestSemigroupLaw:
    """Tests for semigroup_residual."""

    def test_unweighted_is_exact(self, operator_grid):
        """Test phi = 1 composes exactly."""
        assert semigroup_residual(parse("1"), 0.7, 1.3, bump(operator_grid)) == 0.0

    def test_zero_shift_is_exact(self, operator_grid):
        """Test t = 0 composes exactly."""
        assert semigroup_residual(parse("sqrt(x+1)"), 0.0, 0.5, bump(operator_grid)) == 0.0

    def test_sqrt_shift(self, operator_grid):
        """Test S_0.5 S_0.5 = S_1 for sqrt(x+1)."""
        assert semigroup_residual(parse("sqrt(x+1)"), 0.5, 0.5, bump(operator_grid)) <= 1e-12 * norm(bump(operator_grid))

    @pytest.mark.parametrize("text", SMOOTH_SYMBOLS)
    def test_all_symbols(self, text, operator_grid):
        """Test the semigroup law holds for every smooth fixture."""
        f = bump(operator_grid)
        assert semigroup_residual(parse(text), 0.5, 1.25, f) <= 1e-10 * norm(f)


class TestMultiplier:
    """Tests for the multiplication symbol of B_n(S_t)."""

    def test_linear_second_order_vanishes(self, operator_grid):
        """Test m_2 of x+1 is zero."""
        m = multiplier_bn(parse("x+1"), 2, 1.0, operator_grid).values
        np.testing.assert_allclose(m, 0.0, atol=1e-13)

    def test_log_first_order_negative(self, operator_grid):
        """Test m_1 of log(x+2) is negative."""
        m = multiplier_bn(parse("log(x+2)"), 1, 0.5, operator_grid).values
        assert np.all(m < 0)

    def test_exponential_decay_closed_form(self, operator_grid):
        """Test m_2 of exp(-x) is (1 - exp(-t))^2."""
        t = 0.75
        m = multiplier_bn(parse("exp(-x)"), 2, t, operator_grid).values
        np.testing.assert_allclose(m, (1.0 - math.exp(-t)) ** 2, rtol=1e-12)

    def test_invalid_arguments(self, operator_grid):
        """Test n and t must be non-negative."""
        with pytest.raises(ValueError):
            multiplier_bn(parse("1"), -1, 1.0, operator_grid)
        with pytest.raises(ValueError):
            multiplier_bn(parse("1"), 1, -1.0, operator_grid)

    @pytest.mark.parametrize("text, n", [("sqrt(x+1)", 2), ("1/(x+1)", 1), ("exp(-x)", 2), ("log(x+2)", 3)])
    def test_sign_matches_difference_route(self, text, n, operator_grid):
        """Test the multiplier sign agrees with the finite-difference check."""
        e = parse(text)
        t = 0.5
        m = multiplier_bn(e, n, t, operator_grid).values
        pairs = difference_pairs(operator_grid.nodes[::10], [t], n, operator_grid.x_max)
        if np.all(m <= 0):
            assert finite_difference_check(e, n, pairs, Direction.NON_POSITIVE).is_holds
        else:
            assert np.all(m >= 0)
            assert finite_difference_check(e, n, pairs, Direction.NON_NEGATIVE).is_holds


class TestQuadForm:
    """Tests for the two routes to <B_n(S_t) f, f>."""

    def test_linear_two_isometry(self, operator_grid):
        """Test x+1 gives zero for n = 2."""
        result = quad_form_bn(parse("x+1"), 2, 1.0, bump(operator_grid))
        assert abs(result.pencil) <= 1e-10 * result.scale
        assert abs(result.multiplier) <= 1e-10 * result.scale

    def test_unweighted_isometry(self, operator_grid):
        """Test phi = 1 gives zero for n = 1."""
        result = quad_form_bn(parse("1"), 1, 2.0, bump(operator_grid))
        assert result.pencil == pytest.approx(0.0, abs=1e-10)
        assert result.multiplier == 0.0

    def test_sqrt_shift_routes_agree(self, operator_grid):
        """Test both routes are non-positive and agree for sqrt(x+1), n = 2."""
        result = quad_form_bn(parse("sqrt(x+1)"), 2, 1.0, bump(operator_grid))
        assert result.pencil <= 0.0
        assert result.multiplier <= 0.0
        assert result.relative_difference <= 1e-8

    @pytest.mark.parametrize("text", SMOOTH_SYMBOLS)
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_routes_agree_for_fixtures(self, text, n, operator_grid):
        """Test both routes agree for every smooth fixture up to n = 4."""
        result = quad_form_bn(parse(text), n, 0.5, bump(operator_grid))
        assert result.relative_difference <= 1e-8

    def test_result_dict(self, operator_grid):
        """Test the result serialises both routes."""
        data = quad_form_bn(parse("1"), 1, 1.0, bump(operator_grid)).to_dict()
        assert set(data) == {"pencil", "multiplier", "difference", "scale"}


class TestNorm:
    """Tests for norm_st."""

    def test_exponential_decay(self, operator_grid):
        """Test ||S_t|| = exp(-t/2) for exp(-x)."""
        assert norm_st(parse("exp(-x)"), 1.0, operator_grid) == pytest.approx(math.exp(-0.5), rel=1e-12)

    def test_unweighted(self, operator_grid):
        """Test ||S_t|| = 1 for phi = 1."""
        assert norm_st(parse("1"), 3.0, operator_grid) == 1.0

    @pytest.mark.parametrize("text", ["sqrt(x+1)", "log(x+2)", "(x+0.5)/(x+1)"])
    def test_attained_at_shift(self, text, operator_grid):
        """Test completely alternating symbols attain the norm at x = t."""
        e = parse(text)
        w = weight(e, 1.0, operator_grid).values
        assert norm_st(e, 1.0, operator_grid) == w[100]

    @pytest.mark.parametrize("text", ["1/(x+1)", "exp(-x)", "(x+2)/(x+1)", "1"])
    @pytest.mark.parametrize("t", [0.1, 1.0, 5.0])
    def test_completely_monotone_contracts(self, text, t, operator_grid):
        """Test completely monotone symbols give contractions."""
        assert norm_st(parse(text), t, operator_grid) <= 1.0
