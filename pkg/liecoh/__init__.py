"""Exact adjoint cohomology of perfect Lie algebras s ⋉ N."""

__version__ = "0.1.0"
