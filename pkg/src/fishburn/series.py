"""Truncated bivariate power series in t and z with exact integer coefficients.

Every series carries a truncation order N; terms of t-degree above N are
dropped by every operation.  Coefficients are Python ints, so arithmetic is
exact at any size.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Mapping

from .errors import ParseError, PreconditionError

__all__ = [
    "TruncatedPolynomial",
    "fishburn_summand",
    "fishburn_series",
    "refined_simple_summand",
    "refined_series_simple",
    "refined_rk_summand",
    "refined_series_rk",
    "coefficient",
    "SERIES",
]

Key = tuple[int, int]  # (t-degree, z-degree)


class TruncatedPolynomial:
    __slots__ = ("order", "_coeffs")

    def __init__(self, order: int, coeffs: Mapping[Key, int] | None = None):
        if order < 0:
            raise PreconditionError("truncation order must be non-negative")
        self.order = order
        self._coeffs: dict[Key, int] = {}
        for (a, b), c in (coeffs or {}).items():
            if a < 0 or b < 0:
                raise PreconditionError(f"negative exponent in term t^{a} z^{b}")
            if a <= order and c:
                self._coeffs[(a, b)] = self._coeffs.get((a, b), 0) + int(c)
        self._coeffs = {k: c for k, c in self._coeffs.items() if c}

    @classmethod
    def constant(cls, value: int, order: int) -> TruncatedPolynomial:
        return cls(order, {(0, 0): value})

    @classmethod
    def t(cls, order: int) -> TruncatedPolynomial:
        return cls(order, {(1, 0): 1})

    @classmethod
    def zt(cls, order: int) -> TruncatedPolynomial:
        return cls(order, {(1, 1): 1})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, int, int]], order: int) -> TruncatedPolynomial:
        """Sum of ``coef * t^a z^b`` over ``(a, b, coef)`` triples."""
        acc: dict[Key, int] = {}
        for a, b, c in terms:
            acc[(a, b)] = acc.get((a, b), 0) + c
        return cls(order, acc)

    def terms(self) -> list[tuple[Key, int]]:
        return sorted(self._coeffs.items())

    def coefficient(self, t_deg: int, z_deg: int = 0) -> int:
        if t_deg > self.order:
            raise PreconditionError(
                f"t-degree {t_deg} is beyond the truncation order {self.order}"
            )
        return self._coeffs.get((t_deg, z_deg), 0)

    def t_slice(self, t_deg: int) -> dict[int, int]:
        """``{z-degree: coefficient}`` of the t^t_deg part."""
        self.coefficient(t_deg)  # range check
        return {b: c for (a, b), c in sorted(self._coeffs.items()) if a == t_deg}

    def specialize_z(self, value: int = 1) -> TruncatedPolynomial:
        acc: dict[Key, int] = {}
        for (a, b), c in self._coeffs.items():
            acc[(a, 0)] = acc.get((a, 0), 0) + c * value**b
        return TruncatedPolynomial(self.order, acc)

    def min_t_degree(self) -> int | None:
        return min((a for a, _ in self._coeffs), default=None)

    def _coerce(self, other) -> TruncatedPolynomial:
        if isinstance(other, TruncatedPolynomial):
            if other.order != self.order:
                raise PreconditionError(
                    f"truncation orders differ: {self.order} vs {other.order}"
                )
            return other
        if isinstance(other, int):
            return TruncatedPolynomial.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._coeffs)
        for k, c in other._coeffs.items():
            acc[k] = acc.get(k, 0) + c
        return TruncatedPolynomial(self.order, acc)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPolynomial(self.order, {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Key, int] = {}
        n = self.order
        for (a1, b1), c1 in self._coeffs.items():
            for (a2, b2), c2 in other._coeffs.items():
                if a1 + a2 <= n:
                    key = (a1 + a2, b1 + b2)
                    acc[key] = acc.get(key, 0) + c1 * c2
        return TruncatedPolynomial(n, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise PreconditionError("only non-negative integer powers are supported")
        result = TruncatedPolynomial.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.order, frozenset(self._coeffs.items())))

    def __repr__(self):
        return f"TruncatedPolynomial(order={self.order}, {self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for (a, b), c in self.terms():
            mono = "".join(
                s for s in (_power("z", b), _power("t", a)) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def to_json_dict(self) -> dict[str, int]:
        """``{"t^a z^b": coefficient}`` with keys in (a, b) order."""
        return {f"t^{a} z^{b}": c for (a, b), c in self.terms()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str | Mapping[str, int], order: int) -> TruncatedPolynomial:
        data = json.loads(text) if isinstance(text, str) else text
        acc = {}
        for key, c in data.items():
            try:
                tpart, zpart = key.split()
                if not (tpart.startswith("t^") and zpart.startswith("z^")):
                    raise ValueError
                acc[(int(tpart[2:]), int(zpart[2:]))] = int(c)
            except ValueError:
                raise ParseError(f"bad series key {key!r}") from None
        return cls(order, acc)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def coefficient(p: TruncatedPolynomial, t_deg: int, z_deg: int = 0) -> int:
    return p.coefficient(t_deg, z_deg)


def _check_order(order: int) -> None:
    if order < 1:
        raise PreconditionError(f"order must be >= 1, got {order}")


def _one_minus_t(order: int) -> TruncatedPolynomial:
    return 1 - TruncatedPolynomial.t(order)


def fishburn_summand(m: int, order: int) -> TruncatedPolynomial:
    """prod_{i=1}^{m} (1 - (1-t)^i)."""
    one_minus_t = _one_minus_t(order)
    acc = TruncatedPolynomial.constant(1, order)
    for i in range(1, m + 1):
        acc = acc * (1 - one_minus_t**i)
    return acc


def refined_simple_summand(m: int, order: int) -> TruncatedPolynomial:
    """prod_{i=1}^{m} (1 - (1-t)^(i-1) (1-zt))."""
    one_minus_t = _one_minus_t(order)
    one_minus_zt = 1 - TruncatedPolynomial.zt(order)
    acc = TruncatedPolynomial.constant(1, order)
    for i in range(1, m + 1):
        acc = acc * (1 - one_minus_t ** (i - 1) * one_minus_zt)
    return acc


def _inverse_power_one_minus_zt(m: int, order: int) -> TruncatedPolynomial:
    # (1 - zt)^(-m) = sum_r C(m-1+r, r) (zt)^r; t-degree equals z-degree
    return TruncatedPolynomial(order, {(r, r): math.comb(m - 1 + r, r) for r in range(order + 1)})


def refined_rk_summand(m: int, order: int) -> TruncatedPolynomial:
    """zt / (1-zt)^m * prod_{i=1}^{m-1} (1 - (1-t)^i)."""
    return (
        TruncatedPolynomial.zt(order)
        * _inverse_power_one_minus_zt(m, order)
        * fishburn_summand(m - 1, order)
    )


def _series(summand, order: int) -> TruncatedPolynomial:
    _check_order(order)
    acc = TruncatedPolynomial.constant(1, order)
    # the m-th summand starts at t^m, so m <= order suffices
    for m in range(1, order + 1):
        acc = acc + summand(m, order)
    return acc


def fishburn_series(order: int) -> TruncatedPolynomial:
    """1 + sum_m prod_{i=1}^{m} (1 - (1-t)^i), whose t^n coefficient is f_n."""
    return _series(fishburn_summand, order)


def refined_series_simple(order: int) -> TruncatedPolynomial:
    return _series(refined_simple_summand, order)


def refined_series_rk(order: int) -> TruncatedPolynomial:
    return _series(refined_rk_summand, order)


SERIES = {
    "fishburn": fishburn_series,
    "refined-simple": refined_series_simple,
    "refined-rk": refined_series_rk,
}
