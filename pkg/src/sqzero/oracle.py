"""Exhaustive ground truth: enumerate strictly upper-triangular matrices
over GF(q) and count those whose square is zero, totally and by rank.

The enumeration is deliberately brute force; its entire value as a
cross-check comes from sharing no machinery with the polynomial engines it
is compared against, so no algebraic shortcut is taken.

Only strictly upper-triangular matrices are enumerated.  That loses
nothing: for a triangular X the diagonal of X^2 consists of the squares of
X's own diagonal entries, and a field has no nonzero element whose square
is zero, so every upper-triangular solution of X^2 = 0 already has a zero
diagonal and the two counts coincide.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import NamedTuple

from .gf import FiniteField

DEFAULT_BUDGET = 10**8


class BudgetExceededError(Exception):
    """The enumeration would exceed the candidate budget.

    Carries the required candidate count so a caller can rerun with a
    deliberately raised budget instead of silently waiting forever.
    """

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"enumeration budget exceeded: {required} candidates > budget {budget}"
        )
        self.required = required
        self.budget = budget


class StrictUpperMatrix(NamedTuple):
    """n x n matrix with zeros on and below the diagonal.

    ``entries`` holds the n(n-1)/2 above-diagonal values in row-major
    order over positions (i, j) with i < j.
    """

    n: int
    entries: tuple[int, ...]

    def rows(self) -> list[list[int]]:
        """Materialize the full n x n matrix."""
        out = [[0] * self.n for _ in range(self.n)]
        pos = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                out[i][j] = self.entries[pos]
                pos += 1
        return out


def flat_index(n: int, i: int, j: int) -> int:
    """Position of entry (i, j), i < j, in the row-major entry vector."""
    if not 0 <= i < j < n:
        raise ValueError(f"not an above-diagonal position: ({i}, {j}) for n={n}")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def _check_plan(n: int) -> list[tuple[tuple[int, int], ...]]:
    """For each position (i, j) of X^2 that can be nonzero, the entry-vector
    index pairs whose products sum to it.

    Only j >= i+2 appears: for strictly upper-triangular X the diagonal and
    first superdiagonal of X^2 are identically zero.
    """
    plan = []
    for i in range(n):
        for j in range(i + 2, n):
            plan.append(
                tuple((flat_index(n, i, t), flat_index(n, t, j)) for t in range(i + 1, j))
            )
    return plan


def _entries_square_zero(entries, field: FiniteField, plan) -> bool:
    for pairs in plan:
        acc = 0
        for u, v in pairs:
            x = entries[u]
            if x:
                y = entries[v]
                if y:
                    acc = field.add(acc, field.mul(x, y))
        if acc:
            return False
    return True


def square_is_zero(mat: StrictUpperMatrix, field: FiniteField) -> bool:
    """True iff every entry of mat squared vanishes over the field."""
    expected = mat.n * (mat.n - 1) // 2
    if len(mat.entries) != expected:
        raise ValueError(f"expected {expected} entries for n={mat.n}, got {len(mat.entries)}")
    return _entries_square_zero(mat.entries, field, _check_plan(mat.n))


def _rank_of_rows(rows: list[list[int]], field: FiniteField) -> int:
    """Rank by Gaussian elimination over the field (eliminate below pivots)."""
    m = len(rows)
    if m == 0:
        return 0
    width = len(rows[0])
    rank = 0
    for col in range(width):
        pivot = next((i for i in range(rank, m) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field.inv(rows[rank][col])
        if inv != 1:
            rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        top = rows[rank]
        for i in range(rank + 1, m):
            f = rows[i][col]
            if f:
                rows[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(rows[i], top)]
        rank += 1
        if rank == m:
            break
    return rank


def matrix_rank(mat: StrictUpperMatrix, field: FiniteField) -> int:
    return _rank_of_rows(mat.rows(), field)


def _partition_counts(n: int, q: int, by_rank: bool, prefix: tuple[int, ...]):
    """Count solutions among entry vectors starting with ``prefix``; the
    remaining entries are enumerated odometer-style, last entry fastest."""
    field = FiniteField(q)
    plan = _check_plan(n)
    free = n * (n - 1) // 2 - len(prefix)
    if by_rank:
        ranks: Counter[int] = Counter()
        for suffix in itertools.product(range(q), repeat=free):
            entries = prefix + suffix
            if _entries_square_zero(entries, field, plan):
                ranks[_rank_of_rows(StrictUpperMatrix(n, entries).rows(), field)] += 1
        return ranks
    total = 0
    for suffix in itertools.product(range(q), repeat=free):
        if _entries_square_zero(prefix + suffix, field, plan):
            total += 1
    return total


def _enumerate(n: int, q: int, budget: int, workers: int, by_rank: bool):
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    FiniteField(q)  # validates q up front
    length = n * (n - 1) // 2
    required = q**length
    if required > budget:
        raise BudgetExceededError(required, budget)
    count = partial(_partition_counts, n, q, by_rank)
    if workers <= 1:
        return count(())
    # Partition on a prefix of the entry vector: every worker enumerates a
    # disjoint slice, and summing the slices is independent of how many
    # workers ran or how slices were scheduled.
    prefix_len = 0
    while q**prefix_len < workers and prefix_len < length:
        prefix_len += 1
    prefixes = list(itertools.product(range(q), repeat=prefix_len))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(count, prefixes))
    if by_rank:
        merged: Counter[int] = Counter()
        for part in parts:
            merged.update(part)
        return merged
    return sum(parts)


def count_square_zero(
    n: int, q: int, *, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> int:
    """Exact number of n x n strictly upper-triangular matrices over GF(q)
    whose square is zero, by exhaustive enumeration of all q^(n(n-1)/2)
    candidates."""
    return _enumerate(n, q, budget, workers, by_rank=False)


def count_by_rank(
    n: int, q: int, *, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> dict[int, int]:
    """Square-zero count partitioned by matrix rank; only ranks that occur
    appear, and the values sum to count_square_zero(n, q)."""
    ranks = _enumerate(n, q, budget, workers, by_rank=True)
    return dict(sorted(ranks.items()))
