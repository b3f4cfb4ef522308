"""Tests for the Monte Carlo network simulator."""
