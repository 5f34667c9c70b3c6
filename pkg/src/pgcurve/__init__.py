"""Curves in the pseudo-Galilean space G_3^1."""

__version__ = "0.1.0"
