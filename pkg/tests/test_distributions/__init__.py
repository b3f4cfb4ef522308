"""Tests for the analytic loss distributions."""
