"""Tests for expression parsing and jet evaluation."""
