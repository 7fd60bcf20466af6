"""Binomial coefficients and their Gaussian (q-analogue) counterparts."""

from __future__ import annotations

import math
from functools import lru_cache

from .qpoly import ONE, ZERO, QLaurentPoly


def binomial(n: int, k: int) -> int:
    """C(n, k), with the out-of-range convention C(n, k) = 0 for k < 0 or k > n.

    Defined for n >= 0 only; a negative upper index is rejected loudly
    rather than silently picking one of the competing extensions.
    """
    if n < 0:
        raise ValueError(f"negative upper index: binomial({n}, {k})")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _one_minus_q_pow(j: int) -> QLaurentPoly:
    return QLaurentPoly({0: 1, j: -1})


@lru_cache(maxsize=None)
def qbinomial(m: int, n: int) -> QLaurentPoly:
    """Gaussian binomial coefficient, a polynomial in q; zero unless 0 <= n <= m.

    Computed literally as the quotient
    (1-q^m)(1-q^(m-1))...(1-q^(m-n+1)) / (1-q)(1-q^2)...(1-q^n),
    dividing out one denominator factor at a time.  Every partial quotient
    is itself a Gaussian binomial, so each division is exact; exact_div
    raising here would reveal a real bug instead of hiding it.
    """
    if not 0 <= n <= m:
        return ZERO
    result = ONE
    for t in range(1, n + 1):
        result = (result * _one_minus_q_pow(m - t + 1)).exact_div(_one_minus_q_pow(t))
    return result
