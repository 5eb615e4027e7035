"""Exact operator product expansions for vertex algebras of free fields."""

__version__ = "0.1.0"
