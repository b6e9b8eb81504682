"""Tests for the Cauchy dual analysis."""
