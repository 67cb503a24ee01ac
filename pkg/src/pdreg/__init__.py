"""Exact regularity, projective dimension and domination invariants for small graphs and complexes."""

__version__ = "0.1.0"
