"""Pseudo H-type Lie algebras from Hurwitz-Radon families, 1-factorizations and orthogonal designs."""
__version__ = "0.1.0"
