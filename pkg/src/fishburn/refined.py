"""Composition-paired diagrams, the involution psi_tilde and the embedding f.

A paired diagram ``(lam, A)`` couples a Fishburn diagram A of length k
with a composition ``lam`` of d into k+1 non-negative parts whose first
part is positive.  Its size is n = d + (dots of A).

Text form: ``1,2,0,3,0|0;1;1,2;0,1,3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .diagrams import (
    CaseOne,
    FishburnDiagram,
    _diagrams_of_length,
    apply_violation,
    count_diagrams,
    minimal_violation,
)
from .errors import InvariantError, ParseError, PreconditionError, check_cap

__all__ = [
    "PairedDiagram",
    "enumerate_compositions",
    "count_Y_tilde",
    "enumerate_Y_tilde",
    "psi_tilde",
    "is_fixed_tilde",
    "signed_weight_tilde",
    "embed_f",
    "f_inverse",
    "is_in_image",
]


@dataclass(frozen=True)
class PairedDiagram:
    composition: tuple[int, ...]
    diagram: FishburnDiagram

    def __post_init__(self):
        lam = tuple(int(x) for x in self.composition)
        object.__setattr__(self, "composition", lam)
        if not isinstance(self.diagram, FishburnDiagram):
            object.__setattr__(self, "diagram", FishburnDiagram(self.diagram))
        if len(lam) != self.diagram.length + 1:
            raise PreconditionError(
                f"composition {lam} needs {self.diagram.length + 1} parts for a diagram"
                f" of length {self.diagram.length}"
            )
        if lam[0] < 1 or any(x < 0 for x in lam):
            raise PreconditionError(f"composition {lam} needs a positive first part")

    @classmethod
    def parse(cls, text: str) -> PairedDiagram:
        t = "".join(text.split())
        if t.count("|") != 1:
            raise ParseError(f"expected 'composition|diagram', got {text!r}")
        left, right = t.split("|")
        try:
            lam = tuple(int(x) for x in left.split(","))
        except ValueError:
            raise ParseError(f"cannot parse composition from {left!r}") from None
        try:
            return cls(lam, FishburnDiagram.parse(right))
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None

    @property
    def d(self) -> int:
        return sum(self.composition)

    @property
    def n(self) -> int:
        return self.d + self.diagram.dots

    def __str__(self) -> str:
        return ",".join(map(str, self.composition)) + "|" + str(self.diagram)


def enumerate_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` non-negative parts, first part positive.

    Lexicographic order.
    """
    if parts < 1 or total < 1:
        return

    def rec(left: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if left == 0:
                yield ()
            return
        for x in range(left + 1):
            for tail in rec(left - x, slots - 1):
                yield (x,) + tail

    for first in range(1, total + 1):
        for tail in rec(total - first, parts - 1):
            yield (first,) + tail


def count_Y_tilde(n: int, d: int) -> int:
    m = n - d
    # compositions of d into k+1 parts with first >= 1: C(d-1+k, k)
    return sum(math.comb(d - 1 + k, k) * count_diagrams(m, k) for k in range(m + 1))


def enumerate_Y_tilde(n: int, d: int, *, cap: int | None = None) -> Iterator[PairedDiagram]:
    """Every paired diagram of size n with composition total d.

    Ordered by diagram length, then diagram, then composition.
    """
    if not 1 <= d <= n:
        raise PreconditionError(f"need 1 <= d <= n, got n={n}, d={d}")
    check_cap(count_Y_tilde(n, d), f"paired diagrams with n={n}, d={d}", cap)
    m = n - d
    for k in range(m + 1):
        if k * (k + 1) // 2 < m:
            continue
        comps = list(enumerate_compositions(d, k + 1))
        for diagram in _diagrams_of_length(m, k, None):
            for lam in comps:
                yield PairedDiagram(lam, diagram)


def _violation(p: PairedDiagram):
    lam = p.composition
    # a descent at level j only counts when the composition part lam_{j+2} is 0
    return minimal_violation(p.diagram, descent_counts=lambda j: lam[j + 1] == 0)


def psi_tilde(p: PairedDiagram) -> PairedDiagram:
    """Involution on paired diagrams; changes the diagram length by one off fixed points.

    The level is chosen by the composition-aware rule, then the same column
    surgery as :func:`fishburn.diagrams.psi` is applied at that level while
    a zero part is inserted into (CaseOne) or removed from (CaseTwo) the
    composition right after part ``level + 1``.
    """
    violation = _violation(p)
    if violation is None:
        return p
    lam = p.composition
    j = violation.level
    if isinstance(violation, CaseOne):
        mu = lam[: j + 1] + (0,) + lam[j + 1 :]
    else:
        if lam[j + 1] != 0:
            raise InvariantError(f"descent at level {j} of {p} has a nonzero part")
        mu = lam[: j + 1] + lam[j + 2 :]
    out = PairedDiagram(mu, apply_violation(p.diagram, violation))
    if out.n != p.n or out.d != p.d:
        raise InvariantError(f"psi_tilde changed the size of {p}")
    return out


def is_fixed_tilde(p: PairedDiagram) -> bool:
    return _violation(p) is None


def signed_weight_tilde(p: PairedDiagram) -> tuple[int, int, int]:
    """``(sign, n, d)`` for the weight sign * t^n * z^d.

    Only the diagram's extra dots carry a sign, (-1)^(dots - k); the
    composition contributes (zt)^d with no sign.
    """
    sign = -1 if (p.diagram.dots - p.diagram.length) % 2 else 1
    return sign, p.n, p.d


def _tall_columns(lam: tuple[int, ...]) -> list[int]:
    """1-based positions of the columns that receive the small diagram."""
    out, acc = [], 0
    for m, part in enumerate(lam[:-1], start=1):
        acc += part
        out.append(acc + m)
    return out


def embed_f(p: PairedDiagram) -> FishburnDiagram:
    """Inject a paired diagram into the plain diagrams with the same n and d.

    Columns at positions lam_1+1, lam_1+lam_2+2, ... stay open; every other
    column gets a single dot at its top.  A top dot in column L also blocks
    row L-2 in all later columns.  The unblocked squares of the open columns
    form a staircase; the r-th lowest free square of the m-th open column
    receives member r-1 of A_m.
    """
    lam, small = p.composition, p.diagram.columns
    tall = _tall_columns(lam)
    size = sum(lam) + len(small)
    blocked: set[int] = set()
    out = []
    m = 0
    for L in range(1, size + 1):
        if m < len(tall) and tall[m] == L:
            free = [v for v in range(L - 1) if v not in blocked]
            if len(free) != m + 1:
                raise InvariantError(f"open column {L} has {len(free)} free squares")
            out.append([free[s] for s in small[m]])
            m += 1
        else:
            out.append([L - 1])
            blocked.add(L - 2)
    return FishburnDiagram(out)


def is_in_image(diagram: FishburnDiagram) -> bool:
    """Every column with a top dot is a singleton, and the row below it is
    empty in all later columns."""
    cols = diagram.columns
    for i, col in enumerate(cols, start=1):
        if col[-1] == i - 1:
            if len(col) != 1:
                return False
            if any(i - 2 in later for later in cols[i:]):
                return False
    return True


def f_inverse(diagram: FishburnDiagram) -> PairedDiagram:
    if not is_in_image(diagram):
        raise PreconditionError(f"{diagram} is not in the image of f")
    lam = [0]
    small = []
    blocked: set[int] = set()
    for L, col in enumerate(diagram.columns, start=1):
        if col[-1] == L - 1:
            lam[-1] += 1
            blocked.add(L - 2)
        else:
            free = [v for v in range(L - 1) if v not in blocked]
            index = {v: r for r, v in enumerate(free)}
            try:
                small.append([index[v] for v in col])
            except KeyError:
                raise InvariantError(f"column {L} of {diagram} uses a blocked square") from None
            lam.append(0)
    return PairedDiagram(tuple(lam), FishburnDiagram(small))
