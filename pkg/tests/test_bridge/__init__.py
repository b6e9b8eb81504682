"""Tests for the weighted-shift bridge."""
