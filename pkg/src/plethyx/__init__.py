"""Exact Schur expansions of Chern plethysm polynomials, by several independent routes."""
from .chern import (
    coeff_alternating,
    coeff_column,
    coeff_column_jacobi_trudi,
    coeff_single_row,
    coeff_two_rows,
    expand_column_case,
    expand_row_case,
    sbar_alternating,
    sbar_direct,
)
from .shapes import Partition, SkewShape, parse_partition
from .sympoly import SchurExpansion, SparsePoly

__all__ = [
    "Partition",
    "SchurExpansion",
    "SkewShape",
    "SparsePoly",
    "coeff_alternating",
    "coeff_column",
    "coeff_column_jacobi_trudi",
    "coeff_single_row",
    "coeff_two_rows",
    "expand_column_case",
    "expand_row_case",
    "parse_partition",
    "sbar_alternating",
    "sbar_direct",
]
