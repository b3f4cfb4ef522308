"""Tests for the cascade solver."""
