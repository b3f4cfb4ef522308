"""Tests for the standard normal kernel."""
