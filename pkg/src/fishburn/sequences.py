"""Independent Fishburn families and the left-nesting / Eulerian triangles.

Ascent sequences and pattern-avoiding permutations give counts that owe
nothing to matchings or diagrams, so they serve as cross-checks.  The
triangle functions compute the left-nesting distribution L(n, j) and the
second-order Eulerian numbers T(n, k), related by L(n, n-k) = T(n, k).
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import permutations
from typing import Iterator

from .errors import PreconditionError, check_cap
from .matchings import LEFT, count_nestings, enumerate_matchings

__all__ = [
    "ascents",
    "is_ascent_sequence",
    "enumerate_ascent_sequences",
    "zeros_statistic",
    "avoids_pattern",
    "enumerate_avoiding_permutations",
    "second_order_eulerian",
    "left_nesting_distribution",
]


def ascents(seq) -> int:
    return sum(1 for x, y in zip(seq, seq[1:]) if y > x)


def is_ascent_sequence(seq) -> bool:
    if not seq or seq[0] != 0:
        return False
    asc = 0
    for i in range(1, len(seq)):
        if not 0 <= seq[i] <= asc + 1:
            return False
        asc += seq[i] > seq[i - 1]
    return True


def enumerate_ascent_sequences(n: int, *, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ascent sequences of length n in lexicographic order."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    # x_i <= i - 1, so there are at most n! of them
    check_cap(math.factorial(n), f"ascent sequences of length {n}", cap)
    prefix = [0]

    def rec(asc: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        last = prefix[-1]
        for x in range(asc + 2):
            prefix.append(x)
            yield from rec(asc + (x > last))
            prefix.pop()

    yield from rec(0)


def zeros_statistic(seq) -> int:
    return sum(1 for x in seq if x == 0)


def avoids_pattern(perm) -> bool:
    """True iff no i < j has perm[j] = perm[i] - 1 with perm[i+1] > perm[i]."""
    position = {v: i for i, v in enumerate(perm)}
    for i in range(len(perm) - 1):
        if perm[i + 1] > perm[i]:
            j = position.get(perm[i] - 1)
            if j is not None and j > i:
                return False
    return True


def enumerate_avoiding_permutations(n: int, *, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Permutations of 1..n avoiding the pattern above, lexicographic."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    check_cap(math.factorial(n), f"permutations of [{n}]", cap)
    for perm in permutations(range(1, n + 1)):
        if avoids_pattern(perm):
            yield perm


def second_order_eulerian(n_max: int) -> list[list[int]]:
    """Rows 1..n_max of T(n, k), k = 1..n.

    T(1, 1) = 1 and T(n, k) = k T(n-1, k) + (2n - k) T(n-1, k-1).
    """
    if n_max < 1:
        raise PreconditionError("n_max must be >= 1")
    rows = [[1]]
    for n in range(2, n_max + 1):
        prev = rows[-1]

        def T(k: int) -> int:
            return prev[k - 1] if 1 <= k <= len(prev) else 0

        rows.append([k * T(k) + (2 * n - k) * T(k - 1) for k in range(1, n + 1)])
    return rows


def left_nesting_distribution(
    n: int, method: str = "recurrence", *, cap: int | None = None
) -> list[int]:
    """[L(n, 0), ..., L(n, n-1)]: matchings on [2n] by number of left-nestings."""
    if n < 1:
        raise PreconditionError("n must be >= 1")
    if method == "recurrence":
        row = [1]
        for m in range(2, n + 1):
            prev = row

            def L(j: int) -> int:
                return prev[j] if 0 <= j < len(prev) else 0

            row = [(m + j) * L(j) + (m - j) * L(j - 1) for j in range(m)]
        return row
    if method == "exhaustive":
        counts = Counter(count_nestings(x, LEFT) for x in enumerate_matchings(n, cap=cap))
        return [counts.get(j, 0) for j in range(n)]
    raise PreconditionError(f"unknown method {method!r}; use 'recurrence' or 'exhaustive'")
