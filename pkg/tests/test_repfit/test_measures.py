"""
Tests for discrete measures, Levy triples and their synthesis.
"""

import numpy as np
import pytest

from src.classify import classify
from src.operators import Grid
from src.repfit import (
    DiscreteMeasure,
    LevyTriple,
    MeasureKind,
    representation_expr,
    synthesize,
)
from src.symbols import Num, evaluate

EMPTY = DiscreteMeasure([], [])


def values_of(e, x):
    return np.broadcast_to(np.asarray(evaluate(e, x), dtype=float), x.shape)


class TestDiscreteMeasure:
    """Tests for DiscreteMeasure."""

    def test_atoms_and_mass(self):
        """Test atoms pair locations with weights."""
        measure = DiscreteMeasure([0.5, 2.0], [0.25, 0.75])
        assert measure.atoms == [(0.5, 0.25), (2.0, 0.75)]
        assert measure.total_mass == pytest.approx(1.0)
        assert measure.kind is MeasureKind.LAPLACE

    def test_kind_from_string(self):
        """Test the kind may be given by value."""
        assert DiscreteMeasure([0.5], [1.0], "moment").kind is MeasureKind.MOMENT

    def test_length_mismatch(self):
        """Test locations and weights must pair up."""
        with pytest.raises(ValueError):
            DiscreteMeasure([1.0, 2.0], [1.0])

    def test_negative_weight(self):
        """Test weights must be non-negative."""
        with pytest.raises(ValueError):
            DiscreteMeasure([1.0], [-0.1])

    def test_negative_location(self):
        """Test locations must be non-negative."""
        with pytest.raises(ValueError):
            DiscreteMeasure([-1.0], [1.0])

    def test_locations_must_increase(self):
        """Test repeated or unsorted locations are rejected."""
        with pytest.raises(ValueError):
            DiscreteMeasure([2.0, 1.0], [1.0, 1.0])
        with pytest.raises(ValueError):
            DiscreteMeasure([1.0, 1.0], [1.0, 1.0])

    def test_laplace_evaluation(self):
        """Test a unit atom at a = 1 is exp(-x)."""
        x = np.array([0.0, 1.0, 2.5])
        np.testing.assert_allclose(DiscreteMeasure([1.0], [1.0])(x), np.exp(-x))

    def test_moment_evaluation(self):
        """Test moment atoms evaluate s^x with 0^0 = 1."""
        measure = DiscreteMeasure([0.0, 0.5], [0.25, 0.75], MeasureKind.MOMENT)
        np.testing.assert_allclose(measure(np.array([0.0, 1.0, 2.0])), [1.0, 0.375, 0.1875])

    def test_empty_measure_is_zero(self):
        """Test the empty measure evaluates to zero."""
        np.testing.assert_array_equal(EMPTY(np.array([0.0, 1.0])), [0.0, 0.0])
        assert EMPTY.total_mass == 0.0

    def test_to_frame(self):
        """Test the frame has one row per atom."""
        frame = DiscreteMeasure([0.5, 2.0], [0.25, 0.75]).to_frame()
        assert list(frame.columns) == ["a", "weight"]
        assert frame["weight"].tolist() == [0.25, 0.75]

    def test_to_dict(self):
        """Test the dict form names the kind and lists atoms."""
        data = DiscreteMeasure([1.0], [2.0], MeasureKind.MOMENT).to_dict()
        assert data == {"kind": "moment", "atoms": [{"a": 1.0, "weight": 2.0}]}


class TestLevyTriple:
    """Tests for LevyTriple."""

    def test_negative_drift(self):
        """Test the drift must be non-negative."""
        with pytest.raises(ValueError):
            LevyTriple(1.0, -0.5, EMPTY)

    def test_moment_measure_rejected(self):
        """Test the Levy measure must be of laplace kind."""
        with pytest.raises(ValueError):
            LevyTriple(1.0, 0.0, DiscreteMeasure([0.5], [1.0], MeasureKind.MOMENT))

    def test_evaluation(self):
        """Test phi0 + c x + w (1 - exp(-a x))."""
        triple = LevyTriple(1.0, 0.5, DiscreteMeasure([2.0], [3.0]))
        x = np.array([0.0, 1.0, 4.0])
        np.testing.assert_allclose(triple(x), 1.0 + 0.5 * x + 3.0 * (1.0 - np.exp(-2.0 * x)))

    def test_to_dict(self):
        """Test the dict form carries phi0, drift and atoms."""
        data = LevyTriple(1.0, 1.0, EMPTY).to_dict()
        assert data == {"phi0": 1.0, "c": 1.0, "atoms": []}


class TestSynthesize:
    """Tests for synthesize."""

    def test_unit_atom_is_exponential(self):
        """Test the atom (1, 1) synthesises exp(-x)."""
        g = Grid(10.0, 101)
        f = synthesize(DiscreteMeasure([1.0], [1.0]), g)
        assert f.grid == g
        np.testing.assert_allclose(f.values, np.exp(-g.nodes))

    def test_linear_triple(self):
        """Test the triple (1, 1, empty) synthesises x + 1."""
        g = Grid(10.0, 11)
        f = synthesize(LevyTriple(1.0, 1.0, EMPTY), g)
        np.testing.assert_allclose(f.values, g.nodes + 1.0)


class TestRepresentationExpr:
    """Tests for representation_expr."""

    @pytest.mark.parametrize("rep", [
        DiscreteMeasure([0.5, 1.0, 2.0], [0.2, 0.3, 0.5]),
        DiscreteMeasure([0.25, 0.5, 1.5], [0.5, 0.25, 0.25], MeasureKind.MOMENT),
        LevyTriple(1.0, 0.5, DiscreteMeasure([0.1, 3.0], [2.0, 0.5])),
    ])
    def test_matches_evaluation(self, rep):
        """Test the expression evaluates to the representation."""
        x = np.linspace(0.0, 20.0, 41)
        np.testing.assert_allclose(values_of(representation_expr(rep), x), rep(x), rtol=1e-12)

    def test_moment_atom_at_zero_dropped(self):
        """Test an atom at s = 0 is left out of the expression."""
        rep = DiscreteMeasure([0.0, 0.5], [0.25, 0.75], MeasureKind.MOMENT)
        x = np.array([1.0, 2.0, 3.0])
        np.testing.assert_allclose(values_of(representation_expr(rep), x), rep(x))

    def test_empty_measure(self):
        """Test the empty measure is the constant 0."""
        assert representation_expr(EMPTY) == Num(0)

    def test_laplace_representation_is_cm(self, small_config):
        """Test a non-negative combination of decaying exponentials classifies as CM."""
        rep = DiscreteMeasure([0.5, 1.0, 2.0], [0.2, 0.3, 0.5])
        report = classify(representation_expr(rep), small_config)
        assert report.lookup("completely_monotone").status.value == "Holds"

    def test_levy_representation_is_ca(self, small_config):
        """Test a Levy triple classifies as completely alternating."""
        rep = LevyTriple(1.0, 0.5, DiscreteMeasure([0.5, 2.0], [1.0, 0.5]))
        report = classify(representation_expr(rep), small_config)
        assert report.lookup("completely_alternating").status.value == "Holds"
