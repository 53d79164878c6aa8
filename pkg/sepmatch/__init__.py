"""Separating matchings in subcubic graphs."""

__version__ = "0.1.0"
