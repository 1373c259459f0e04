"""Exact rank-one computations for families of automorphic forms on PGL(2)."""

__version__ = "0.1.0"
