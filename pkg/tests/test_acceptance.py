"""Acceptance criteria 1-7, each at its stated size and with exact equality.

Every test carries a ``criterion`` marker; conftest prints one PASS/FAIL
line per criterion at the end of the run.
"""

from collections import Counter

import pytest

from fishburn.diagrams import (
    FishburnDiagram,
    diagram_d_statistic,
    enumerate_Y,
    is_fixed,
    minimal_violation,
    psi,
    signed_weight,
)
from fishburn.matchings import (
    NEIGHBOR,
    InsertionCase,
    Matching,
    NestingKind,
    classify_insertion,
    count_nestings,
    double_factorial,
    enumerate_matchings,
    has_nesting,
    insert_rightmost_arc,
    LEFT,
)
from fishburn.refined import PairedDiagram, embed_f, is_in_image, is_fixed_tilde, psi_tilde
from fishburn.sequences import (
    enumerate_ascent_sequences,
    enumerate_avoiding_permutations,
    left_nesting_distribution,
    second_order_eulerian,
)
from fishburn.series import coefficient, fishburn_series, refined_series_rk, refined_series_simple
from fishburn.tables import d_statistic, enumerate_T
from fishburn.verify import run_suite

FISHBURN = {1: 1, 2: 2, 3: 5, 4: 15, 5: 53, 6: 217, 7: 1014, 8: 5335}


def assert_suite(name, n_max):
    records = run_suite(name, n_max)
    bad = [r for r in records if not r["ok"]]
    assert records and not bad, bad[:5]


@pytest.fixture(scope="module")
def fixed_by_nd():
    """|Fix(psi_{n,d})| for n <= 8 from one pass over Y_n."""
    out = Counter()
    for n in range(1, 9):
        for a in enumerate_Y(n):
            if is_fixed(a):
                out[n, diagram_d_statistic(a)] += 1
    return out


# criterion 1

c1 = pytest.mark.criterion(1, "Fishburn agreement across seven families")


@c1
def test_c1_expected_sequence():
    assert [FISHBURN[n] for n in range(1, 7)] == [1, 2, 5, 15, 53, 217]


@c1
@pytest.mark.parametrize("n", range(1, 8))
def test_c1_matchings(n):
    two = NestingKind.k_nesting(2)
    no_two = no_neighbor = 0
    for x in enumerate_matchings(n):
        no_two += not has_nesting(x, two)
        no_neighbor += not has_nesting(x, NEIGHBOR)
    assert no_two == no_neighbor == FISHBURN[n]


@c1
@pytest.mark.parametrize("n", range(1, 8))
def test_c1_tables(n):
    assert sum(1 for _ in enumerate_T(n)) == FISHBURN[n]


@c1
def test_c1_fixed_points(fixed_by_nd):
    for n in range(1, 9):
        assert sum(fixed_by_nd[n, d] for d in range(1, n + 1)) == FISHBURN[n]


@c1
def test_c1_series():
    p = fishburn_series(8)
    assert [coefficient(p, n) for n in range(1, 9)] == [FISHBURN[n] for n in range(1, 9)]


@c1
@pytest.mark.parametrize("n", range(1, 8))
def test_c1_ascent_sequences(n):
    assert sum(1 for _ in enumerate_ascent_sequences(n)) == FISHBURN[n]


@c1
@pytest.mark.parametrize("n", range(1, 9))
def test_c1_permutations(n):
    assert sum(1 for _ in enumerate_avoiding_permutations(n)) == FISHBURN[n]


# criterion 2

c2 = pytest.mark.criterion(2, "psi is a sign-reversing involution on Y_n, n <= 8")


@c2
def test_c2_involution_suite():
    assert_suite("involution", 8)


@c2
def test_c2_signed_sum_equals_fixed_points():
    for n in range(1, 9):
        assert sum(signed_weight(a)[0] for a in enumerate_Y(n)) == FISHBURN[n]


# criterion 3

c3 = pytest.mark.criterion(3, "refinement identity: both series, T_{n,d} and Fix(psi_{n,d})")


@c3
def test_c3_refinement_identity(fixed_by_nd):
    simple, rk = refined_series_simple(8), refined_series_rk(8)
    for n in range(1, 9):
        tables = Counter(d_statistic(t) for t in enumerate_T(n))
        for d in range(1, n + 1):
            value = coefficient(simple, n, d)
            assert coefficient(rk, n, d) == value, (n, d)
            assert tables[d] == value, (n, d)
            assert fixed_by_nd[n, d] == value, (n, d)


@c3
def test_c3_refinement_suite():
    assert_suite("identity-eq7-eq8", 8)


# criterion 4

c4 = pytest.mark.criterion(4, "phi roundtrips and image characterization")


@c4
def test_c4_phi_suite():
    assert_suite("phi-roundtrip", 7)


# criterion 5

c5 = pytest.mark.criterion(5, "refined involution, embedding and fixed-point correspondence")


@c5
def test_c5_refined_involution_suite():
    assert_suite("involution-refined", 7)


@c5
def test_c5_embedding_suite():
    assert_suite("embedding", 7)


@c5
def test_c5_conjugated_psi_leaves_image():
    left = PairedDiagram.parse("1,1,2,0,1|0;0;0,1;0")
    image = embed_f(left)
    assert is_in_image(image)
    assert not is_in_image(psi(image))


# criterion 6

c6 = pytest.mark.criterion(6, "left-nesting distribution and insertion cases")


@c6
@pytest.mark.parametrize("n", range(1, 7))
def test_c6_triangles(n):
    rec = left_nesting_distribution(n, "recurrence")
    assert left_nesting_distribution(n, "exhaustive") == rec
    row = second_order_eulerian(n)[n - 1]
    assert [row[n - j - 1] for j in range(n)] == rec
    assert sum(rec) == double_factorial(2 * n - 1)
    assert rec[0] == [1, 1, 2, 6, 24, 120, 720][n]


@c6
@pytest.mark.parametrize("n", range(1, 6))
def test_c6_slot_classification(n):
    for x in enumerate_matchings(n - 1):
        j = count_nestings(x, LEFT)
        preserving = incrementing = 0
        for s in range(1, 2 * n):
            after = count_nestings(insert_rightmost_arc(x, s), LEFT)
            bump = classify_insertion(x, s) is InsertionCase.BEFORE_FREE_LEFT_ENDPOINT
            assert after == j + bump
            incrementing += bump
            preserving += not bump
        assert (preserving, incrementing) == (n + j, n - 1 - j)


@c6
def test_c6_suites():
    assert_suite("eulerian", 6)
    assert_suite("insertion-cases", 5)


# criterion 7

c7 = pytest.mark.criterion(7, "worked examples reproduce exactly")


@c7
def test_c7_psi_eight_to_nine_columns():
    a = FishburnDiagram.parse("0;0;2;2,3;0;1,3,5;1,3,5,6;2,4,6")
    b = psi(a)
    assert a.length == 8 and b.length == 9
    assert str(b) == "0;0;2;2,3;2,4;0;1;2,4,6,7;3,5,7"
    assert minimal_violation(a).level == minimal_violation(b).level == 1
    assert psi(b) == a


@c7
def test_c7_psi_tilde_example():
    left = PairedDiagram.parse("1,1,2,0,1|0;0;0,1;0")
    right = psi_tilde(left)
    assert str(right) == "1,0,1,2,0,1|0;0;1;0;1"
    assert right.composition == (1, 0, 1, 2, 0, 1)
    assert psi_tilde(right) == left


@c7
def test_c7_fixed_point():
    p = PairedDiagram.parse("1,0,1,2,0,1|0;0;2;0;1")
    assert is_fixed_tilde(p)
    assert str(psi_tilde(p)) == "1,0,1,2,0,1|0;0;2;0;1"


@c7
def test_c7_signed_weight():
    a = FishburnDiagram.parse("0;1;0,2;0,1,2")
    assert (a.dots, a.length) == (7, 4)
    assert signed_weight(a) == ((-1) ** 3, 7)


@c7
def test_c7_insertion_example():
    x = Matching.parse("(1,4)(2,6)(3,5)")
    results = sorted(count_nestings(insert_rightmost_arc(x, s), LEFT) for s in range(1, 8))
    assert results == [1, 1, 1, 1, 1, 2, 2]
