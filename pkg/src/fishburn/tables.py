"""Inversion tables, the consecutive-descent-free condition and the map phi.

An inversion table of length n is a_1..a_n with 0 <= a_i <= i-1.  It is
*cdf* ("consecutive-decreasing-free") when no p < q has a_p = a_q + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ParseError, PreconditionError, check_cap
from .matchings import LEFT, Matching, has_nesting, insert_rightmost_arc

__all__ = [
    "InversionTable",
    "phi",
    "phi_inverse",
    "is_cdf",
    "d_statistic",
    "enumerate_inversion_tables",
    "enumerate_T",
]


@dataclass(frozen=True)
class InversionTable:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        object.__setattr__(self, "entries", entries)
        for i, a in enumerate(entries, start=1):
            if not 0 <= a <= i - 1:
                raise PreconditionError(f"entry a_{i}={a} outside 0..{i - 1}")

    @classmethod
    def _from_trusted(cls, entries: tuple[int, ...]) -> InversionTable:
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", entries)
        return obj

    @classmethod
    def parse(cls, text: str) -> InversionTable:
        """``00214`` or ``0,0,2,1,4`` (whitespace ignored)."""
        t = "".join(text.split())
        try:
            if "," in t:
                entries = [int(x) for x in t.split(",")]
            else:
                entries = [int(ch) for ch in t]
        except ValueError:
            raise ParseError(f"cannot parse inversion table from {text!r}") from None
        try:
            return cls(tuple(entries))
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        if all(a <= 9 for a in self.entries):
            return "".join(map(str, self.entries))
        return ",".join(map(str, self.entries))


def phi(x: Matching) -> InversionTable:
    """a_i = number of closers left of the opener of the i-th arc by closer."""
    if has_nesting(x, LEFT):
        raise PreconditionError(f"phi is only defined without left-nestings; {x} has one")
    closers = x.closers()
    entries = []
    for a, _ in sorted(x.pairs, key=lambda p: p[1]):
        entries.append(sum(1 for c in closers if c < a))
    return InversionTable(tuple(entries))


def phi_inverse(table: InversionTable) -> Matching:
    x = Matching._trusted(())
    for i, a in enumerate(table.entries, start=1):
        closers = x.closers()
        # a == i - 1 means: before the new arc's own closer
        slot = closers[a] if a < len(closers) else 2 * i - 1
        x = insert_rightmost_arc(x, slot)
    return x


def is_cdf(table: InversionTable | Sequence[int]) -> bool:
    entries = table.entries if isinstance(table, InversionTable) else table
    seen: set[int] = set()
    for a in entries:
        if a + 1 in seen:
            return False
        seen.add(a)
    return True


def d_statistic(table: InversionTable) -> int:
    return sum(1 for i, a in enumerate(table.entries, start=1) if a == i - 1)


def enumerate_inversion_tables(n: int, *, cap: int | None = None) -> Iterator[InversionTable]:
    """All n! inversion tables of length n, lexicographic."""
    if n < 0:
        raise PreconditionError("n must be non-negative")
    check_cap(math.factorial(n), f"inversion tables of length {n}", cap)
    yield from _tables(n, cdf=False, d=None)


def enumerate_T(n: int, d: int | None = None, *, cap: int | None = None) -> Iterator[InversionTable]:
    """Cdf inversion tables of length n (with d-statistic ``d`` if given), lexicographic."""
    if n < 0:
        raise PreconditionError("n must be non-negative")
    if d is not None and not 1 <= d <= n:
        raise PreconditionError(f"d={d} outside 1..{n}")
    check_cap(math.factorial(n), f"inversion tables of length {n}", cap)
    yield from _tables(n, cdf=True, d=d)


def _tables(n: int, cdf: bool, d: int | None) -> Iterator[InversionTable]:
    prefix: list[int] = []
    counts: dict[int, int] = {}

    def rec(i: int, tops: int):
        if i > n:
            if d is None or tops == d:
                yield InversionTable._from_trusted(tuple(prefix))
            return
        for a in range(i):
            if cdf and counts.get(a + 1):
                continue
            new_tops = tops + (a == i - 1)
            if d is not None and (new_tops > d or new_tops + (n - i) < d):
                continue
            prefix.append(a)
            counts[a] = counts.get(a, 0) + 1
            yield from rec(i + 1, new_tops)
            counts[a] -= 1
            prefix.pop()

    yield from rec(1, 0)
