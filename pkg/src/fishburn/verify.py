"""Exhaustive property suites, one per ``verify`` subcommand.

Each suite runs every n from 1 to ``n_max`` and returns a list of check
records ``{"n", "check", "expected", "observed", "ok"}`` (plus ``"d"`` for
refined checks).  A suite passes iff every record is ok.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Callable

from . import diagrams as dg
from . import matchings as mt
from . import refined as rf
from . import sequences as sq
from . import series as sr
from . import tables as tb
from .errors import PreconditionError

__all__ = ["SUITES", "run_suite"]


class _Recorder:
    def __init__(self):
        self.records: list[dict] = []

    def check(self, check: str, expected, observed, **where) -> None:
        self.records.append(
            {**where, "check": check, "expected": expected, "observed": observed,
             "ok": expected == observed}
        )


def involution(n_max: int, cap=None) -> list[dict]:
    rec = _Recorder()
    for n in range(1, n_max + 1):
        bad_involution = bad_length = bad_size = bad_d = bad_level = 0
        total = fixed = signed = 0
        for a in dg.enumerate_Y(n, cap=cap):
            total += 1
            signed += dg.signed_weight(a)[0]
            b = dg.psi(a)
            if dg.psi(b) != a:
                bad_involution += 1
            if b == a:
                fixed += 1
                continue
            bad_length += abs(b.length - a.length) != 1
            bad_size += b.dots != a.dots
            bad_d += dg.diagram_d_statistic(b) != dg.diagram_d_statistic(a)
            bad_level += dg.minimal_violation(b).level != dg.minimal_violation(a).level
        rec.check("diagrams enumerated", dg.count_diagrams(n), total, n=n)
        rec.check("psi(psi(D)) != D", 0, bad_involution, n=n)
        rec.check("length change not +-1", 0, bad_length, n=n)
        rec.check("dot count changed", 0, bad_size, n=n)
        rec.check("d-statistic changed", 0, bad_d, n=n)
        rec.check("violation level changed", 0, bad_level, n=n)
        rec.check("signed sum equals fixed points", fixed, signed, n=n)
    return rec.records


def involution_refined(n_max: int, cap=None) -> list[dict]:
    rec = _Recorder()
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            bad_involution = bad_length = bad_size = 0
            total = fixed = signed = 0
            for p in rf.enumerate_Y_tilde(n, d, cap=cap):
                total += 1
                signed += rf.signed_weight_tilde(p)[0]
                q = rf.psi_tilde(p)
                bad_involution += rf.psi_tilde(q) != p
                if q == p:
                    fixed += 1
                    continue
                bad_length += abs(q.diagram.length - p.diagram.length) != 1
                bad_size += (q.n, q.d) != (p.n, p.d)
            rec.check("paired diagrams enumerated", rf.count_Y_tilde(n, d), total, n=n, d=d)
            rec.check("psi_tilde(psi_tilde(P)) != P", 0, bad_involution, n=n, d=d)
            rec.check("length change not +-1", 0, bad_length, n=n, d=d)
            rec.check("n or d changed", 0, bad_size, n=n, d=d)
            rec.check("signed sum equals fixed points", fixed, signed, n=n, d=d)
    return rec.records


def phi_roundtrip(n_max: int, cap=None) -> list[dict]:
    rec = _Recorder()
    two = mt.NestingKind.k_nesting(2)
    for n in range(1, n_max + 1):
        bad_forward = bad_image = count = 0
        for x in mt.generate_left_nesting_free(n, cap=cap):
            count += 1
            table = tb.phi(x)
            bad_forward += tb.phi_inverse(table) != x
            bad_image += tb.is_cdf(table) == mt.has_nesting(x, two)
        bad_backward = sum(
            tb.phi(tb.phi_inverse(t)) != t for t in tb.enumerate_inversion_tables(n, cap=cap)
        )
        rec.check("left-nesting-free matchings", math.factorial(n), count, n=n)
        rec.check("phi_inverse(phi(X)) != X", 0, bad_forward, n=n)
        rec.check("phi(phi_inverse(T)) != T", 0, bad_backward, n=n)
        rec.check("cdf(phi(X)) disagrees with no 2-nesting", 0, bad_image, n=n)
    return rec.records


def identity_eq1(n_max: int, cap=None) -> list[dict]:
    rec = _Recorder()
    series = sr.fishburn_series(n_max)
    two = mt.NestingKind.k_nesting(2)
    for n in range(1, n_max + 1):
        f_n = series.coefficient(n)
        signed = fixed = 0
        for a in dg.enumerate_Y(n, cap=cap):
            signed += dg.signed_weight(a)[0]
            fixed += dg.is_fixed(a)
        rec.check("|T_n|", f_n, sum(1 for _ in tb.enumerate_T(n, cap=cap)), n=n)
        rec.check("|Fix(psi_n)|", f_n, fixed, n=n)
        rec.check("signed diagram sum", f_n, signed, n=n)
        no_two = no_neighbor = 0
        for x in mt.enumerate_matchings(n, cap=cap):
            no_two += not mt.has_nesting(x, two)
            no_neighbor += not mt.has_nesting(x, mt.NEIGHBOR)
        rec.check("matchings without 2-nesting", f_n, no_two, n=n)
        rec.check("matchings without neighbor nesting", f_n, no_neighbor, n=n)
        rec.check("ascent sequences", f_n, sum(1 for _ in sq.enumerate_ascent_sequences(n, cap=cap)), n=n)
        rec.check(
            "avoiding permutations", f_n,
            sum(1 for _ in sq.enumerate_avoiding_permutations(n, cap=cap)), n=n,
        )
    return rec.records


def identity_eq7_eq8(n_max: int, cap=None) -> list[dict]:
    rec = _Recorder()
    simple = sr.refined_series_simple(n_max)
    rk = sr.refined_series_rk(n_max)
    for n in range(1, n_max + 1):
        tables = Counter(tb.d_statistic(t) for t in tb.enumerate_T(n, cap=cap))
        fixed: Counter = Counter()
        signed: Counter = Counter()
        for a in dg.enumerate_Y(n, cap=cap):
            d = dg.diagram_d_statistic(a)
            signed[d] += dg.signed_weight(a)[0]
            fixed[d] += dg.is_fixed(a)
        zeros = Counter(sq.zeros_statistic(s) for s in sq.enumerate_ascent_sequences(n, cap=cap))
        for d in range(1, n + 1):
            target = simple.coefficient(n, d)
            rec.check("refined-rk coefficient", target, rk.coefficient(n, d), n=n, d=d)
            rec.check("|T_{n,d}|", target, tables[d], n=n, d=d)
            rec.check("|Fix(psi_{n,d})|", target, fixed[d], n=n, d=d)
            rec.check("signed sum over Y_{n,d}", target, signed[d], n=n, d=d)
            tilde_signed = tilde_fixed = 0
            for p in rf.enumerate_Y_tilde(n, d, cap=cap):
                tilde_signed += rf.signed_weight_tilde(p)[0]
                tilde_fixed += rf.is_fixed_tilde(p)
            rec.check("signed sum over paired diagrams", target, tilde_signed, n=n, d=d)
            rec.check("|Fix(psi_tilde_{n,d})|", target, tilde_fixed, n=n, d=d)
            rec.check("ascent sequences with d zeros", target, zeros[d], n=n, d=d)
    return rec.records


def embedding(n_max: int, cap=None) -> list[dict]:
    rec = _Recorder()
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            images = set()
            bad_roundtrip = bad_fixed = bad_d = total = 0
            for p in rf.enumerate_Y_tilde(n, d, cap=cap):
                total += 1
                a = rf.embed_f(p)
                images.add(a)
                bad_roundtrip += rf.f_inverse(a) != p
                bad_d += (a.dots, dg.diagram_d_statistic(a)) != (n, d)
                bad_fixed += rf.is_fixed_tilde(p) != dg.is_fixed(a)
            characterized = {a for a in dg.enumerate_Y(n, d, cap=cap) if rf.is_in_image(a)}
            rec.check("distinct images (injectivity)", total, len(images), n=n, d=d)
            rec.check("image lands outside Y_{n,d}", 0, bad_d, n=n, d=d)
            rec.check("f_inverse(f(P)) != P", 0, bad_roundtrip, n=n, d=d)
            rec.check("image differs from is_in_image set", 0, len(images ^ characterized), n=n, d=d)
            rec.check("fixed-point correspondence breaks", 0, bad_fixed, n=n, d=d)
    return rec.records


def eulerian(n_max: int, cap=None) -> list[dict]:
    rec = _Recorder()
    triangle = sq.second_order_eulerian(n_max)
    for n in range(1, n_max + 1):
        by_recurrence = sq.left_nesting_distribution(n, "recurrence")
        exhaustive = sq.left_nesting_distribution(n, "exhaustive", cap=cap)
        # L(n, j) = T(n, n - j)
        from_eulerian = [triangle[n - 1][n - j - 1] for j in range(n)]
        rec.check("L(n, .) exhaustive vs recurrence", by_recurrence, exhaustive, n=n)
        rec.check("L(n, j) vs T(n, n-j)", from_eulerian, by_recurrence, n=n)
        rec.check("row sum", mt.double_factorial(2 * n - 1), sum(exhaustive), n=n)
        rec.check("L(n, 0)", math.factorial(n), exhaustive[0], n=n)
    return rec.records


def insertion_cases(n_max: int, cap=None) -> list[dict]:
    rec = _Recorder()
    case = mt.InsertionCase
    for n in range(1, n_max + 1):
        bad_counts = bad_effect = bad_roundtrip = 0
        seen: Counter = Counter()
        for x in mt.enumerate_matchings(n - 1, cap=cap):
            j = mt.count_nestings(x, mt.LEFT)
            tally: Counter = Counter()
            for slot in range(1, 2 * n):
                kind = mt.classify_insertion(x, slot)
                tally[kind] += 1
                y = mt.insert_rightmost_arc(x, slot)
                seen[y] += 1
                bad_roundtrip += mt.remove_rightmost_arc(y) != (x, slot)
                expected = j + (kind is case.BEFORE_FREE_LEFT_ENDPOINT)
                bad_effect += mt.count_nestings(y, mt.LEFT) != expected
            bad_counts += (
                tally[case.BEFORE_RIGHT_ENDPOINT],
                tally[case.BEFORE_FREE_LEFT_ENDPOINT],
                tally[case.BEFORE_INNER_LEFT_ENDPOINT],
            ) != (n, n - 1 - j, j)
        rec.check("slot counts differ from (n, n-1-j, j)", 0, bad_counts, n=n)
        rec.check("left-nesting change differs from case", 0, bad_effect, n=n)
        rec.check("remove(insert(X, s)) != (X, s)", 0, bad_roundtrip, n=n)
        rec.check("matchings covered", mt.double_factorial(2 * n - 1), len(seen), n=n)
        rec.check("matchings covered more than once", 0, sum(c > 1 for c in seen.values()), n=n)
    return rec.records


SUITES: dict[str, Callable[..., list[dict]]] = {
    "involution": involution,
    "involution-refined": involution_refined,
    "phi-roundtrip": phi_roundtrip,
    "identity-eq1": identity_eq1,
    "identity-eq7-eq8": identity_eq7_eq8,
    "embedding": embedding,
    "eulerian": eulerian,
    "insertion-cases": insertion_cases,
}


def run_suite(name: str, n_max: int, cap: int | None = None) -> list[dict]:
    try:
        suite = SUITES[name]
    except KeyError:
        raise PreconditionError(
            f"unknown suite {name!r}; choose from {', '.join(SUITES)}"
        ) from None
    if n_max < 1:
        raise PreconditionError("n_max must be >= 1")
    return suite(n_max, cap=cap)
