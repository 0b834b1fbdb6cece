import random

import pytest
from hypothesis import given, settings, strategies as st

from persteenrod.complex import build_filtered_complex
from persteenrod.errors import InconsistentInput, StageOutOfRange
from persteenrod.f2 import F2Matrix
from persteenrod.persistence import (
    NEG_INF,
    Barcode,
    ExtendedInterval,
    barcode_of,
    bits_to_cochain,
    build_antitransposed_coboundary,
    extract_triples,
    persistent_cohomology,
    phcol,
    restriction_rank_oracle,
)
from persteenrod.samples import random_filtration, shuffled_filtration
from persteenrod.steenrod import is_coboundary, is_cocycle

EDGE = build_filtered_complex([(1,), (2,), (1, 2)])
CIRCLE = build_filtered_complex([(1,), (2,), (3,), (1, 2), (2, 3), (1, 3)])


def check_reduction(M, R, V):
    n = M.nrows
    assert R == M @ V
    pivots = [c.bits.bit_length() for c in R.columns if c.bits]
    assert len(pivots) == len(set(pivots))
    assert V.is_upper_triangular()
    assert all((V.column(j).bits >> (j - 1)) & 1 for j in range(1, n + 1))


def test_antitranspose_of_edge():
    D = build_antitransposed_coboundary(EDGE)
    assert D.to_dense() == [[0, 1, 1], [0, 0, 0], [0, 0, 0]]
    assert D.is_upper_triangular(strict=True)


def test_antitranspose_of_vertex():
    D = build_antitransposed_coboundary(build_filtered_complex([(0,)]))
    assert D.to_dense() == [[0]]


def test_antitranspose_matches_incidence():
    X = random_filtration(random.Random(5), 40, 3)
    n = X.n
    D = build_antitransposed_coboundary(X)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            a, b = X.simplex(i), X.simplex(j)
            incident = len(b) == len(a) + 1 and set(a) <= set(b)
            assert D[n + 1 - j, n + 1 - i] == int(incident)
    assert D.is_upper_triangular(strict=True)


def test_phcol_already_reduced():
    M = F2Matrix.from_dense([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    R, V = phcol(M)
    assert R == M and V == F2Matrix.identity(3)


def test_phcol_zero():
    R, V = phcol(F2Matrix.zeros(4, 4))
    assert R == F2Matrix.zeros(4, 4) and V == F2Matrix.identity(4)


@pytest.mark.parametrize("seed", range(10))
def test_phcol_random_upper_triangular(seed):
    rng = random.Random(seed)
    dense = [[int(c >= r and rng.random() < 0.4) for c in range(12)] for r in range(12)]
    M = F2Matrix.from_dense(dense)
    R, V = phcol(M)
    check_reduction(M, R, V)


def test_phcol_rejects_rectangular():
    with pytest.raises(ValueError):
        phcol(F2Matrix.zeros(2, 3))


def test_single_vertex_triple():
    X = build_filtered_complex([(0,)])
    (t,) = persistent_cohomology(X).triples
    assert t.degree == 0 and t.essential
    assert t.interval == ExtendedInterval(NEG_INF, 1)
    assert barcode_of([t]).items().__next__() == (0, ExtendedInterval(NEG_INF, 1), 1)


def test_circle_triples():
    P = persistent_cohomology(CIRCLE)
    got = sorted((t.degree, t.interval, t.essential) for t in P.triples)
    assert got == [
        (0, ExtendedInterval(NEG_INF, 6), True),
        (0, ExtendedInterval(1, 3), False),
        (0, ExtendedInterval(2, 4), False),
        (1, ExtendedInterval(5, 6), True),
    ]
    for d in (0, 1):
        for i in range(1, 7):
            for j in range(i, 7):
                assert P.barcode.count_containing(d, i, j) == restriction_rank_oracle(CIRCLE, d, i, j)


def test_rp2_essential_bars(rp2_complex):
    P = persistent_cohomology(rp2_complex)
    ess = [t for t in P.triples if t.essential]
    assert sorted(t.degree for t in ess) == [0, 1, 2]
    assert all(t.interval.right == 31 for t in ess)
    assert [P.barcode.essential(d, 31) for d in (0, 1, 2)] == [1, 1, 1]
    for d in (0, 1, 2):
        assert restriction_rank_oracle(rp2_complex, d, 31, 31) == 1


def test_empty_barcode():
    assert len(barcode_of([])) == 0
    assert barcode_of([]) == Barcode()


def test_oracle_edge_cases(rp2_complex):
    # identity map: the betti number
    assert restriction_rank_oracle(CIRCLE, 1, 6, 6) == 1
    assert restriction_rank_oracle(CIRCLE, 0, 3, 3) == 3
    # no 2-simplices
    assert restriction_rank_oracle(CIRCLE, 2, 1, 6) == 0
    with pytest.raises(StageOutOfRange):
        restriction_rank_oracle(CIRCLE, 0, 3, 2)
    with pytest.raises(StageOutOfRange):
        restriction_rank_oracle(CIRCLE, 0, 1, 7)


def test_extract_rejects_bad_shapes():
    R, V = phcol(build_antitransposed_coboundary(EDGE))
    with pytest.raises(InconsistentInput):
        extract_triples(R, V, CIRCLE)


def test_extract_rejects_unreduced():
    D = build_antitransposed_coboundary(CIRCLE)
    with pytest.raises(InconsistentInput):
        extract_triples(D, F2Matrix.identity(CIRCLE.n), CIRCLE)


def test_extended_interval_semantics():
    iv = ExtendedInterval(2, 5)
    assert [s for s in range(8) if iv.contains(s)] == [3, 4, 5]
    assert list(iv.stages()) == [3, 4, 5]
    assert ExtendedInterval.from_stages(1, 4) == ExtendedInterval(NEG_INF, 4)
    assert iv.contains_window(3, 5) and not iv.contains_window(2, 5)
    with pytest.raises(ValueError):
        ExtendedInterval(3, 3)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32))
def test_barcode_matches_rank_oracle(seed):
    X = random_filtration(random.Random(seed), 30, 3)
    bc = persistent_cohomology(X).barcode
    for d in range(X.dimension + 1):
        for i in range(1, X.n + 1):
            for j in range(i, X.n + 1):
                assert bc.count_containing(d, i, j) == restriction_rank_oracle(X, d, i, j)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32))
def test_reduction_of_random_filtration(seed):
    X = random_filtration(random.Random(seed), 60, 3)
    D = build_antitransposed_coboundary(X)
    R, V = phcol(D)
    check_reduction(D, R, V)


@pytest.mark.parametrize("seed", range(6))
def test_representatives_live_exactly_on_their_interval(seed, rp2_complex):
    rng = random.Random(seed)
    X = random_filtration(rng, 30, 2) if seed % 2 else shuffled_filtration(list(rp2_complex), rng)
    for t in persistent_cohomology(X).triples:
        rep = bits_to_cochain(t.rep.bits, X, t.degree)
        assert is_cocycle(rep, X) == t.essential
        for stage in range(1, X.n + 1):
            Y = X.prefix(stage)
            r = rep.restrict(Y)
            if stage in t.interval.stages():
                assert is_cocycle(r, Y) and not is_coboundary(r, Y)
            elif stage <= t.interval.right:
                assert r.is_zero()
        if not t.essential:
            cob = bits_to_cochain(t.coboundary.bits, X, t.degree + 1)
            assert is_coboundary(cob, X)
