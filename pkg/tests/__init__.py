"""Test suite for netcascade."""
