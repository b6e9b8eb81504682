"""Tests for representation fitting."""
