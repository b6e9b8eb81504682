"""Tests for CLI interface."""
