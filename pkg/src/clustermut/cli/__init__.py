"""CLI package for clustermut commands."""

from .main import main

__all__ = ["main"]
