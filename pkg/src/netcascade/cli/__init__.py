"""Command-line interface."""

from netcascade.cli.main import main

__all__ = ["main"]
