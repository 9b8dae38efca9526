"""Exact BGG-complex computation of Hochschild cohomology tables for blocks of small quantum groups."""

__version__ = "0.1.0"
