"""Cohomology, exceptional collections and G2 linear algebra on the Cayley Grassmannian."""

__version__ = "0.1.0"
