"""Bott-Chern and Aeppli cohomology of double complexes and flat bi-generalized Hermitian models."""

__version__ = "0.1.0"
