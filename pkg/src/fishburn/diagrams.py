"""Fishburn diagrams and the sign-reversing involution psi.

A Fishburn diagram of length k is a sequence of nonempty sets
A_1..A_k with A_i a subset of {0, .., i-1}; picture column i of a staircase
with a dot in row r (from the bottom, 0-based) iff r is in A_i.  Its dot
count is n = sum |A_i| and its signed weight is (-1)^(n-k) t^n.

Text form: columns joined by ``;``, members by ``,``::

    >>> str(FishburnDiagram([{0}, {1}, {0, 2}, {0, 1, 2}]))
    '0;1;0,2;0,1,2'

Column indices in :class:`CaseOne` / :class:`CaseTwo` are 1-based, matching
the column numbering used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional, Union

from .errors import InvariantError, ParseError, PreconditionError, check_cap
from .tables import InversionTable

__all__ = [
    "FishburnDiagram",
    "CaseOne",
    "CaseTwo",
    "Violation",
    "count_diagrams",
    "enumerate_Y",
    "signed_weight",
    "minimal_violation",
    "apply_violation",
    "psi",
    "is_fixed",
    "fixed_to_table",
    "table_to_fixed",
    "diagram_d_statistic",
]


@dataclass(frozen=True)
class FishburnDiagram:
    columns: tuple[tuple[int, ...], ...]

    def __init__(self, columns: Iterable[Iterable[int]]):
        cols = tuple(tuple(sorted(int(s) for s in col)) for col in columns)
        object.__setattr__(self, "columns", cols)
        for i, col in enumerate(cols, start=1):
            if not col:
                raise PreconditionError(f"column {i} is empty")
            if len(set(col)) != len(col):
                raise PreconditionError(f"column {i} repeats a member")
            if col[0] < 0 or col[-1] > i - 1:
                raise PreconditionError(f"column {i}={set(col)} is not inside 0..{i - 1}")

    @classmethod
    def _trusted(cls, cols: tuple[tuple[int, ...], ...]) -> FishburnDiagram:
        obj = object.__new__(cls)
        object.__setattr__(obj, "columns", cols)
        return obj

    @classmethod
    def parse(cls, text: str) -> FishburnDiagram:
        t = "".join(text.split())
        if not t:
            return cls(())
        try:
            cols = [[int(x) for x in part.split(",")] for part in t.split(";")]
        except ValueError:
            raise ParseError(f"cannot parse diagram from {text!r}") from None
        try:
            return cls(cols)
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None

    @property
    def length(self) -> int:
        return len(self.columns)

    @property
    def dots(self) -> int:
        return sum(len(col) for col in self.columns)

    def __len__(self) -> int:
        return len(self.columns)

    def __str__(self) -> str:
        return ";".join(",".join(map(str, col)) for col in self.columns)


@dataclass(frozen=True)
class CaseOne:
    """Smallest violation is a multi-dot column containing ``level``.

    ``column`` is the first such column; ``gap`` is the distance from
    ``level`` to that column's second-smallest member.
    """

    level: int
    column: int
    gap: int


@dataclass(frozen=True)
class CaseTwo:
    """Smallest violation is ``level + 1`` appearing before ``level``.

    ``low_column`` is the last column containing ``level`` (it is exactly
    ``{level}``); ``high_column`` is the last column before it containing
    ``level + 1``.
    """

    level: int
    high_column: int
    low_column: int


Violation = Union[CaseOne, CaseTwo]


def _size_table(n: int) -> list[list[int]]:
    """ways[k][m]: diagrams of length k with m dots, for m <= n."""
    ways = [[0] * (n + 1) for _ in range(n + 1)]
    ways[0][0] = 1
    for k in range(1, n + 1):
        for m in range(n + 1):
            ways[k][m] = sum(
                ways[k - 1][m - r] * math.comb(k, r) for r in range(1, min(k, m) + 1)
            )
    return ways


def count_diagrams(n: int, length: int | None = None) -> int:
    """|Y_n|, or the number of those with ``length`` columns."""
    ways = _size_table(n)
    if length is not None:
        return ways[length][n] if 0 <= length <= n else 0
    return sum(ways[k][n] for k in range(n + 1))


def enumerate_Y(n: int, d: int | None = None, *, cap: int | None = None) -> Iterator[FishburnDiagram]:
    """Diagrams with n dots (and d-statistic ``d`` if given).

    Ordered by length, then column by column with smaller columns first
    and equal-size columns lexicographically.  ``n = 0`` yields the single
    empty diagram.
    """
    if n < 0:
        raise PreconditionError("n must be non-negative")
    if d is not None and not 1 <= d <= n:
        raise PreconditionError(f"d={d} outside 1..{n}")
    check_cap(count_diagrams(n), f"Fishburn diagrams with {n} dots", cap)
    for k in range(n + 1):
        if k * (k + 1) // 2 < n:
            continue
        yield from _diagrams_of_length(n, k, d)


def _diagrams_of_length(n: int, k: int, d: int | None) -> Iterator[FishburnDiagram]:
    cols: list[tuple[int, ...]] = []

    def rec(i: int, left: int, tops: int):
        if i > k:
            if left == 0 and (d is None or tops == d):
                yield FishburnDiagram._trusted(tuple(cols))
            return
        remaining = k - i  # columns after this one
        for size in range(1, i + 1):
            rest = left - size
            if rest < remaining:
                break
            if rest > (remaining * (2 * i + remaining + 1)) // 2:
                continue
            for col in combinations(range(i), size):
                new_tops = tops + (col[-1] == i - 1)
                if d is not None and (new_tops > d or new_tops + remaining < d):
                    continue
                cols.append(col)
                yield from rec(i + 1, rest, new_tops)
                cols.pop()

    yield from rec(1, n, 0)


def signed_weight(diagram: FishburnDiagram) -> tuple[int, int]:
    """``(sign, degree)`` with sign = (-1)^(n-k) and degree = n."""
    n = diagram.dots
    return (-1 if (n - diagram.length) % 2 else 1), n


def diagram_d_statistic(diagram: FishburnDiagram) -> int:
    return sum(1 for i, col in enumerate(diagram.columns, start=1) if col[-1] == i - 1)


def minimal_violation(
    diagram: FishburnDiagram,
    descent_counts: Optional[Callable[[int], bool]] = None,
) -> Optional[Violation]:
    """Smallest level at which the diagram fails to be a fixed point.

    A level j is violated if some multi-dot column contains j, or if j+1
    occurs in an earlier column than some occurrence of j.  When
    ``descent_counts`` is given, the second kind only counts at levels for
    which it returns True.  The multi-dot case wins at equal levels.
    """
    cols = diagram.columns
    if not cols:
        return None
    first_col: dict[int, int] = {}
    last_col: dict[int, int] = {}
    multi_col: dict[int, int] = {}
    for i, col in enumerate(cols, start=1):
        for s in col:
            first_col.setdefault(s, i)
            last_col[s] = i
            if len(col) > 1:
                multi_col.setdefault(s, i)

    for j in range(len(cols)):
        if j in multi_col:
            column = multi_col[j]
            members = cols[column - 1]
            # minimality of j forces it to be the smallest member
            if members[0] != j:
                raise InvariantError(f"level {j} is not the minimum of column {column}")
            return CaseOne(j, column, members[1] - j)
        if (
            j + 1 in first_col
            and j in last_col
            and first_col[j + 1] < last_col[j]
            and (descent_counts is None or descent_counts(j))
        ):
            low = last_col[j]
            high = max(i for i in range(1, low) if j + 1 in cols[i - 1])
            return CaseTwo(j, high, low)
    return None


def apply_violation(diagram: FishburnDiagram, violation: Violation) -> FishburnDiagram:
    """Column surgery removing (CaseOne) or creating (CaseTwo) a multi-dot column.

    CaseOne moves all but the smallest dot of the offending column ``gap``
    columns to the left, leaving ``{level}`` as a new column: length k+1.
    CaseTwo is its inverse: length k-1.
    """
    if isinstance(violation, CaseOne):
        cols = _case_one(diagram.columns, violation.level, violation.column, violation.gap)
    else:
        cols = _case_two(
            diagram.columns, violation.level, violation.high_column, violation.low_column
        )
    try:
        out = FishburnDiagram(cols)
    except PreconditionError as exc:
        raise InvariantError(f"surgery on {diagram} produced an invalid diagram: {exc}") from None
    if out.dots != diagram.dots:
        raise InvariantError(f"surgery on {diagram} changed the dot count")
    return out


def _case_one(cols, j: int, col: int, gap: int) -> list[list[int]]:
    k = len(cols)
    out = []
    for L in range(1, k + 2):
        if L <= col - gap:
            out.append(list(cols[L - 1]))
        elif L == col - gap + 1:
            out.append([s - gap + 1 for s in cols[col - 1] if s != j])
        elif L <= col:
            out.append([s if s < j + 1 else s + 1 for s in cols[L - 2]])
        elif L == col + 1:
            out.append([j])
        else:
            out.append([s if s < j else s + 1 for s in cols[L - 2]])
    return out


def _case_two(cols, j: int, high: int, low: int) -> list[list[int]]:
    k = len(cols)
    out = []
    for L in range(1, k):
        if L <= high - 1:
            out.append(list(cols[L - 1]))
        elif L <= low - 2:
            out.append([s if s < j + 1 else s - 1 for s in cols[L]])
        elif L == low - 1:
            out.append([s + low - high - 1 for s in cols[high - 1]] + [j])
        else:
            out.append([s if s < j else s - 1 for s in cols[L]])
    return out


def psi(diagram: FishburnDiagram) -> FishburnDiagram:
    violation = minimal_violation(diagram)
    if violation is None:
        return diagram
    return apply_violation(diagram, violation)


def is_fixed(diagram: FishburnDiagram) -> bool:
    return minimal_violation(diagram) is None


def fixed_to_table(diagram: FishburnDiagram) -> InversionTable:
    """Unwrap the singleton columns of a fixed point into a cdf table."""
    if not is_fixed(diagram):
        raise PreconditionError(f"{diagram} is not a fixed point of psi")
    return InversionTable(tuple(col[0] for col in diagram.columns))


def table_to_fixed(table: InversionTable) -> FishburnDiagram:
    return FishburnDiagram([a] for a in table.entries)
