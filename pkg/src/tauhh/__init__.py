"""Exact Hochschild and tau-Hochschild (co)homology dimensions for
bound quiver algebras, with radical-square-zero closed forms and
bounded-degree structural classification."""

__version__ = "0.1.0"
