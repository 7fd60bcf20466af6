"""Exact counting of strictly upper-triangular matrices over GF(q) whose
square is zero: four independent formula engines plus a brute-force
enumeration oracle, all in exact integer arithmetic."""

from .counting import (
    NonPolynomialResultError,
    TriangularTable,
    WLaurent,
    alternating_qbinomial_sum,
    alternating_qbinomial_sum_closed,
    closed_form,
    constant_term_entry,
    constant_term_total,
    recurrence_residual,
    recurrence_table,
)
from .gf import SUPPORTED_ORDERS, FiniteField
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    StrictUpperMatrix,
    count_by_rank,
    count_square_zero,
    matrix_rank,
    square_is_zero,
)
from .qbinom import binomial, qbinomial
from .qpoly import ONE, Q, ZERO, InexactDivisionError, QLaurentPoly

__all__ = [
    "QLaurentPoly",
    "InexactDivisionError",
    "ZERO",
    "ONE",
    "Q",
    "binomial",
    "qbinomial",
    "WLaurent",
    "TriangularTable",
    "NonPolynomialResultError",
    "recurrence_table",
    "closed_form",
    "constant_term_entry",
    "constant_term_total",
    "recurrence_residual",
    "alternating_qbinomial_sum",
    "alternating_qbinomial_sum_closed",
    "FiniteField",
    "SUPPORTED_ORDERS",
    "StrictUpperMatrix",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "square_is_zero",
    "count_square_zero",
    "count_by_rank",
    "matrix_rank",
]
