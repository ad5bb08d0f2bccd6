"""Perfect matchings on [2n], nesting statistics and rightmost-arc insertion.

A matching is stored as its arcs ``(opener, closer)`` sorted by opener.
The canonical text form joins the arcs without spaces::

    >>> str(Matching.parse("(1, 4) (2, 3)"))
    '(1,4)(2,3)'

The empty matching renders as ``()``.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ParseError, PreconditionError, check_cap

__all__ = [
    "Matching",
    "NestingKind",
    "InsertionCase",
    "GENERAL",
    "LEFT",
    "RIGHT",
    "NEIGHBOR",
    "double_factorial",
    "enumerate_matchings",
    "count_nestings",
    "has_nesting",
    "insert_rightmost_arc",
    "remove_rightmost_arc",
    "classify_insertion",
    "generate_left_nesting_free",
]

_ARC_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def double_factorial(m: int) -> int:
    """m!! for odd or even m; (-1)!! = 0!! = 1."""
    return math.prod(range(m, 0, -2)) if m > 0 else 1


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(a), int(b)) for a, b in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        seen = []
        for a, b in pairs:
            if not a < b:
                raise PreconditionError(f"arc ({a},{b}) must have opener < closer")
            seen += (a, b)
        if sorted(seen) != list(range(1, 2 * len(pairs) + 1)):
            raise PreconditionError(
                f"endpoints of {pairs} are not exactly 1..{2 * len(pairs)}"
            )

    @classmethod
    def _trusted(cls, pairs: Sequence[tuple[int, int]]) -> Matching:
        # skips validation; callers guarantee sorted, valid pairs
        obj = object.__new__(cls)
        object.__setattr__(obj, "pairs", tuple(pairs))
        return obj

    @classmethod
    def parse(cls, text: str) -> Matching:
        stripped = re.sub(r"\s+", "", text)
        if stripped in ("", "()"):
            return cls(())
        arcs = _ARC_RE.findall(stripped)
        if not arcs or "".join(f"({a},{b})" for a, b in arcs) != stripped:
            raise ParseError(f"cannot parse matching from {text!r}")
        try:
            return cls(tuple((int(a), int(b)) for a, b in arcs))
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None

    @property
    def n(self) -> int:
        return len(self.pairs)

    def partners(self) -> list[int]:
        """Partner array indexed by label; index 0 is unused."""
        out = [0] * (2 * self.n + 1)
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out

    def closers(self) -> list[int]:
        return sorted(b for _, b in self.pairs)

    def __str__(self) -> str:
        if not self.pairs:
            return "()"
        return "".join(f"({a},{b})" for a, b in self.pairs)


@dataclass(frozen=True)
class NestingKind:
    """Which nestings to count.

    ``name`` is one of ``general``, ``k``, ``left``, ``right``, ``neighbor``;
    ``k`` is only used by the ``k`` variant (c - a <= k).
    """

    name: str
    k: int = 0

    def __post_init__(self):
        if self.name not in ("general", "k", "left", "right", "neighbor"):
            raise PreconditionError(f"unknown nesting kind {self.name!r}")
        if self.name == "k" and self.k < 1:
            raise PreconditionError("k-nesting requires k >= 1")

    @classmethod
    def k_nesting(cls, k: int) -> NestingKind:
        return cls("k", k)

    @classmethod
    def parse(cls, text: str) -> NestingKind:
        """Accepts ``nesting``, ``left``, ``right``, ``neighbor`` or ``<k>-nesting``."""
        t = text.strip().lower()
        aliases = {
            "nesting": "general",
            "general": "general",
            "left": "left",
            "left-nesting": "left",
            "right": "right",
            "right-nesting": "right",
            "neighbor": "neighbor",
            "neighbor-nesting": "neighbor",
            "neighbour": "neighbor",
        }
        if t in aliases:
            return cls(aliases[t])
        m = re.fullmatch(r"(\d+)-?nesting", t)
        if m:
            return cls.k_nesting(int(m.group(1)))
        raise ParseError(f"unknown nesting constraint {text!r}")

    def accepts(self, a: int, b: int, c: int, d: int) -> bool:
        """Extra condition on a nesting a < c < d < b."""
        if self.name == "general":
            return True
        if self.name == "k":
            return c - a <= self.k
        if self.name == "left":
            return c == a + 1
        if self.name == "right":
            return d == b - 1
        return c == a + 1 or d == b - 1

    def __str__(self) -> str:
        return f"{self.k}-nesting" if self.name == "k" else self.name


GENERAL = NestingKind("general")
LEFT = NestingKind("left")
RIGHT = NestingKind("right")
NEIGHBOR = NestingKind("neighbor")


class InsertionCase(enum.Enum):
    BEFORE_RIGHT_ENDPOINT = "before-right-endpoint"
    BEFORE_FREE_LEFT_ENDPOINT = "before-free-left-endpoint"
    BEFORE_INNER_LEFT_ENDPOINT = "before-inner-left-endpoint"


def _matching_pairs(free: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not free:
        yield []
        return
    first = free[0]
    for idx in range(1, len(free)):
        rest = free[1:idx] + free[idx + 1 :]
        for tail in _matching_pairs(rest):
            yield [(first, free[idx])] + tail


def enumerate_matchings(n: int, *, cap: int | None = None) -> Iterator[Matching]:
    """Every matching on [2n], lexicographic by partner sequence."""
    if n < 0:
        raise PreconditionError("n must be non-negative")
    check_cap(double_factorial(2 * n - 1), f"matchings on [{2 * n}]", cap)
    for pairs in _matching_pairs(list(range(1, 2 * n + 1))):
        yield Matching._trusted(pairs)


def count_nestings(x: Matching, kind: NestingKind = GENERAL) -> int:
    pairs = x.pairs
    total = 0
    for i, (a, b) in enumerate(pairs):
        for c, d in pairs[i + 1 :]:
            # pairs are sorted by opener, so a < c here
            if d < b and kind.accepts(a, b, c, d):
                total += 1
    return total


def has_nesting(x: Matching, kind: NestingKind = GENERAL) -> bool:
    pairs = x.pairs
    for i, (a, b) in enumerate(pairs):
        for c, d in pairs[i + 1 :]:
            if d < b and kind.accepts(a, b, c, d):
                return True
    return False


def insert_rightmost_arc(x: Matching, slot: int) -> Matching:
    """Add an arc ``(slot, 2n)`` to a matching on [2n-2].

    ``slot`` is the final label of the new opener; every old endpoint
    ``>= slot`` moves up by one.
    """
    n = x.n + 1
    if not 1 <= slot <= 2 * n - 1:
        raise PreconditionError(f"slot {slot} outside 1..{2 * n - 1}")

    def shift(e: int) -> int:
        return e + 1 if e >= slot else e

    pairs = [(shift(a), shift(b)) for a, b in x.pairs]
    pairs.append((slot, 2 * n))
    pairs.sort()
    return Matching._trusted(pairs)


def remove_rightmost_arc(x: Matching) -> tuple[Matching, int]:
    """Inverse of :func:`insert_rightmost_arc`: returns ``(smaller, slot)``."""
    if x.n == 0:
        raise PreconditionError("the empty matching has no arc to remove")
    top = 2 * x.n
    slot = next(a for a, b in x.pairs if b == top)

    def shift(e: int) -> int:
        return e - 1 if e > slot else e

    pairs = [(shift(a), shift(b)) for a, b in x.pairs if b != top]
    return Matching._trusted(pairs), slot


def classify_insertion(x: Matching, slot: int) -> InsertionCase:
    """Which of the three insertion cases ``slot`` falls into.

    The new opener lands immediately before the old endpoint currently
    labelled ``slot`` (or before its own closer when ``slot == 2n - 1``).
    """
    n = x.n + 1
    if not 1 <= slot <= 2 * n - 1:
        raise PreconditionError(f"slot {slot} outside 1..{2 * n - 1}")
    if slot == 2 * n - 1:
        return InsertionCase.BEFORE_RIGHT_ENDPOINT
    partner = x.partners()
    if partner[slot] < slot:
        return InsertionCase.BEFORE_RIGHT_ENDPOINT
    prev = slot - 1
    if prev >= 1 and partner[prev] > prev and partner[prev] > partner[slot]:
        return InsertionCase.BEFORE_INNER_LEFT_ENDPOINT
    return InsertionCase.BEFORE_FREE_LEFT_ENDPOINT


def generate_left_nesting_free(n: int, *, cap: int | None = None) -> Iterator[Matching]:
    """Matchings on [2n] with no left-nesting, built arc by arc.

    Each new rightmost arc opens immediately before one of the closers
    (its own included), so the stream comes out in lexicographic order of
    the corresponding inversion tables.
    """
    if n < 0:
        raise PreconditionError("n must be non-negative")
    check_cap(math.factorial(n), f"left-nesting-free matchings on [{2 * n}]", cap)
    yield from _left_nesting_free(n)


def _left_nesting_free(n: int) -> Iterator[Matching]:
    if n == 0:
        yield Matching._trusted(())
        return
    for x in _left_nesting_free(n - 1):
        for c in x.closers():
            yield insert_rightmost_arc(x, c)
        yield insert_rightmost_arc(x, 2 * n - 1)
