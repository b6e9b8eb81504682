"""Tests for symbol classification."""
