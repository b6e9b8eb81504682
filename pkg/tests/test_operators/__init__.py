"""Tests for the discretised semigroup operators."""
