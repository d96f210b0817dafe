"""Exact computations on the canonical blow-ups of Lagrangian and orthogonal Grassmannians."""
from .exact_linalg import DimensionError, DomainError, Rat, RationalMatrix, det, minor, pfaffian, pfaffian_submatrix, rank

__all__ = ["DimensionError", "DomainError", "Rat", "RationalMatrix", "det", "minor", "pfaffian",
           "pfaffian_submatrix", "rank"]
