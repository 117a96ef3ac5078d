"""Finite-n laboratory for independence numbers of Johnson graphs G(n, r, s)."""

__version__ = "0.1.0"
