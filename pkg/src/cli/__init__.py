"""Command-line entry point and CSV sweeps."""

from .main import build_parser, main

__all__ = ["build_parser", "main"]
