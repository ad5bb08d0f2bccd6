from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given

from fishburn.errors import CapExceededError, ParseError, PreconditionError
from fishburn.matchings import (
    GENERAL,
    LEFT,
    NEIGHBOR,
    RIGHT,
    InsertionCase,
    Matching,
    NestingKind,
    classify_insertion,
    count_nestings,
    double_factorial,
    enumerate_matchings,
    generate_left_nesting_free,
    has_nesting,
    insert_rightmost_arc,
    remove_rightmost_arc,
)

from strategies import matchings

LONG_EXAMPLE = "(1,4)(2,9)(3,6)(5,10)(7,8)"


def brute_matchings(n):
    """All matchings on [2n] by pairing up every permutation; deduplicated."""
    out = set()
    for perm in permutations(range(1, 2 * n + 1)):
        out.add(tuple(sorted(tuple(sorted(perm[i : i + 2])) for i in range(0, 2 * n, 2))))
    return out


def brute_nestings(x: Matching, kind: NestingKind) -> int:
    partner = x.partners()
    size = 2 * x.n
    total = 0
    for a in range(1, size + 1):
        b = partner[a]
        if b < a:
            continue
        for c in range(a + 1, b):
            d = partner[c]
            if c < d < b and kind.accepts(a, b, c, d):
                total += 1
    return total


def test_parse_and_render():
    x = Matching.parse(" (1, 4) (2,9)(3,6) (5,10)(7,8) ")
    assert str(x) == LONG_EXAMPLE
    assert Matching.parse("()") == Matching(())
    assert str(Matching(())) == "()"
    with pytest.raises(ParseError):
        Matching.parse("(1,2)(2,3)")
    with pytest.raises(ParseError):
        Matching.parse("(1,2)x")
    with pytest.raises(PreconditionError):
        Matching(((2, 1),))


def test_enumerate_small_cases():
    assert [str(x) for x in enumerate_matchings(0)] == ["()"]
    assert [str(x) for x in enumerate_matchings(2)] == ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]


@pytest.mark.parametrize("n", range(0, 5))
def test_enumerate_matches_brute_force(n):
    ours = [x.pairs for x in enumerate_matchings(n)]
    assert len(ours) == len(set(ours))
    assert set(ours) == brute_matchings(n)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 15), (4, 105), (5, 945), (6, 10395), (7, 135135)])
def test_enumerate_counts(n, expected):
    assert double_factorial(2 * n - 1) == expected
    assert sum(1 for _ in enumerate_matchings(n)) == expected


def test_enumeration_order_is_partner_lexicographic():
    xs = list(enumerate_matchings(4))
    keys = [tuple(x.partners()[1:]) for x in xs]
    assert keys == sorted(keys)


def test_cap():
    with pytest.raises(CapExceededError):
        next(enumerate_matchings(9))
    with pytest.raises(CapExceededError):
        next(enumerate_matchings(3, cap=14))
    assert sum(1 for _ in enumerate_matchings(3, cap=15)) == 15


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv("FISHBURN_CAP", "10")
    with pytest.raises(CapExceededError):
        next(enumerate_matchings(3))


def test_count_nestings_examples():
    assert count_nestings(Matching.parse("(1,4)(2,3)"), LEFT) == 1
    for kind in (GENERAL, LEFT, RIGHT, NEIGHBOR, NestingKind.k_nesting(3)):
        assert count_nestings(Matching.parse("(1,2)(3,4)"), kind) == 0
    fig1 = Matching.parse(LONG_EXAMPLE)
    assert count_nestings(fig1, LEFT) == 1
    # the single left-nesting is (2,9),(3,6)
    pairs = fig1.pairs
    lefts = [(p, q) for p in pairs for q in pairs if p[0] + 1 == q[0] and q[1] < p[1]]
    assert lefts == [((2, 9), (3, 6))]


def test_nesting_kind_parse():
    assert NestingKind.parse("2-nesting") == NestingKind.k_nesting(2)
    assert NestingKind.parse("neighbor") == NEIGHBOR
    assert NestingKind.parse("nesting") == GENERAL
    with pytest.raises(ParseError):
        NestingKind.parse("sideways")
    with pytest.raises(PreconditionError):
        NestingKind.k_nesting(0)


@pytest.mark.parametrize("n", range(0, 6))
def test_count_nestings_matches_brute_force(n):
    kinds = [GENERAL, LEFT, RIGHT, NEIGHBOR, NestingKind.k_nesting(1), NestingKind.k_nesting(2)]
    for x in enumerate_matchings(n):
        for kind in kinds:
            assert count_nestings(x, kind) == brute_nestings(x, kind)
            assert has_nesting(x, kind) == (brute_nestings(x, kind) > 0)


@given(matchings())
def test_nesting_chain(x):
    left = count_nestings(x, LEFT)
    assert left <= count_nestings(x, NEIGHBOR) <= count_nestings(x, GENERAL)
    assert count_nestings(x, NestingKind.k_nesting(1)) == left


CATALAN = [1, 1, 2, 5, 14, 42, 132]
FISHBURN = [1, 1, 2, 5, 15, 53, 217]


@pytest.mark.parametrize("n", range(0, 7))
def test_family_counts(n):
    xs = list(enumerate_matchings(n))
    assert sum(count_nestings(x, GENERAL) == 0 for x in xs) == CATALAN[n]
    two = NestingKind.k_nesting(2)
    no_two = sum(count_nestings(x, two) == 0 for x in xs)
    no_neighbor = sum(count_nestings(x, NEIGHBOR) == 0 for x in xs)
    assert no_two == no_neighbor == FISHBURN[n]


def test_insert_examples():
    assert str(insert_rightmost_arc(Matching(()), 1)) == "(1,2)"
    assert str(insert_rightmost_arc(Matching.parse("(1,2)"), 1)) == "(1,4)(2,3)"
    assert str(insert_rightmost_arc(Matching.parse("(1,2)"), 3)) == "(1,2)(3,4)"
    with pytest.raises(PreconditionError):
        insert_rightmost_arc(Matching.parse("(1,2)"), 4)
    with pytest.raises(PreconditionError):
        insert_rightmost_arc(Matching.parse("(1,2)"), 0)


@given(matchings(max_n=8))
def test_insert_then_remove_is_identity(x):
    for slot in range(1, 2 * x.n + 2):
        y = insert_rightmost_arc(x, slot)
        assert (slot, 2 * y.n) in y.pairs
        Matching(y.pairs)  # validates
        assert remove_rightmost_arc(y) == (x, slot)


@pytest.mark.parametrize("n", range(1, 7))
def test_insertion_covers_every_matching_once(n):
    produced = Counter(
        insert_rightmost_arc(x, s).pairs
        for x in enumerate_matchings(n - 1)
        for s in range(1, 2 * n)
    )
    assert set(produced) == {x.pairs for x in enumerate_matchings(n)}
    assert set(produced.values()) == {1}


def test_classify_insertion_example():
    x = Matching.parse("(1,4)(2,6)(3,5)")
    assert count_nestings(x, LEFT) == 1
    cases = {s: classify_insertion(x, s) for s in range(1, 8)}
    results = {s: count_nestings(insert_rightmost_arc(x, s), LEFT) for s in range(1, 8)}
    assert sorted(results.values()) == [1, 1, 1, 1, 1, 2, 2]
    # (7,8),(6,8),(5,8),(4,8) are before a right endpoint
    assert all(cases[s] is InsertionCase.BEFORE_RIGHT_ENDPOINT for s in (4, 5, 6, 7))
    assert cases[3] is InsertionCase.BEFORE_INNER_LEFT_ENDPOINT
    assert cases[2] is InsertionCase.BEFORE_FREE_LEFT_ENDPOINT
    assert cases[1] is InsertionCase.BEFORE_FREE_LEFT_ENDPOINT
    assert results[1] == results[2] == 2


def test_classify_own_closer():
    assert classify_insertion(Matching.parse("(1,2)"), 3) is InsertionCase.BEFORE_RIGHT_ENDPOINT


def test_classification_reproduces_L3():
    by_left = Counter()
    for x in enumerate_matchings(2):
        j = count_nestings(x, LEFT)
        for s in range(1, 6):
            kind = classify_insertion(x, s)
            by_left[j + (kind is InsertionCase.BEFORE_FREE_LEFT_ENDPOINT)] += 1
    assert [by_left[j] for j in range(3)] == [6, 8, 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_classification_slot_counts(n):
    for x in enumerate_matchings(n - 1):
        j = count_nestings(x, LEFT)
        tally = Counter(classify_insertion(x, s) for s in range(1, 2 * n))
        assert tally[InsertionCase.BEFORE_RIGHT_ENDPOINT] == n
        assert tally[InsertionCase.BEFORE_FREE_LEFT_ENDPOINT] == n - 1 - j
        assert tally[InsertionCase.BEFORE_INNER_LEFT_ENDPOINT] == j
        for s in range(1, 2 * n):
            bump = classify_insertion(x, s) is InsertionCase.BEFORE_FREE_LEFT_ENDPOINT
            assert count_nestings(insert_rightmost_arc(x, s), LEFT) == j + bump


def test_left_nesting_free_small():
    assert [str(x) for x in generate_left_nesting_free(1)] == ["(1,2)"]
    assert sorted(str(x) for x in generate_left_nesting_free(2)) == ["(1,2)(3,4)", "(1,3)(2,4)"]
    assert sum(1 for _ in generate_left_nesting_free(7)) == 5040


@pytest.mark.parametrize("n", range(0, 7))
def test_left_nesting_free_agrees_with_filter(n):
    built = [x.pairs for x in generate_left_nesting_free(n)]
    filtered = [x.pairs for x in enumerate_matchings(n) if count_nestings(x, LEFT) == 0]
    assert len(built) == len(set(built))
    assert sorted(built) == sorted(filtered)
