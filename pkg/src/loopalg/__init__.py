"""Exact-arithmetic chain-level loop-space constructions: cobar algebras,
homotopy diagonals, based-path objects, double-loop and homotopy-fiber
models, with homology over Z, Q, and prime fields."""

__version__ = "0.1.0"
