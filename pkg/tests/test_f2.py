import random

import pytest
from hypothesis import given, settings, strategies as st

from persteenrod.errors import LengthMismatch
from persteenrod.f2 import (
    Echelon,
    F2Column,
    F2Matrix,
    add_into,
    pivot,
    rank,
    solve_in_span,
)


def col(s):
    """'0110' -> rows 1..4."""
    return F2Column.from_list([int(ch) for ch in s])


def row_echelon_rank(rows):
    """Textbook row reduction on lists of ints mod 2 (rows, not columns)."""
    rows = [list(r) for r in rows]
    rank_, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        pr = next((r for r in range(rank_, len(rows)) if rows[r][c] % 2), None)
        if pr is None:
            continue
        rows[rank_], rows[pr] = rows[pr], rows[rank_]
        for r in range(len(rows)):
            if r != rank_ and rows[r][c] % 2:
                rows[r] = [(a + b) % 2 for a, b in zip(rows[r], rows[rank_])]
        rank_ += 1
    return rank_


def random_dense(rng, m, n, p=0.5):
    return [[int(rng.random() < p) for _ in range(n)] for _ in range(m)]


@pytest.mark.parametrize("bits, expected", [("0110", 3), ("0000", None), ("1000", 1)])
def test_pivot(bits, expected):
    assert pivot(col(bits)) == expected


def test_add_into():
    dst = col("011")
    out = add_into(col("101"), dst)
    assert out is dst and dst == col("110")
    c = col("1101")
    assert add_into(c.copy(), c.copy()) == col("0000")
    assert add_into(col("0000"), c.copy()) == c


def test_add_into_length_mismatch():
    with pytest.raises(LengthMismatch):
        add_into(col("10"), col("100"))


def test_rank_examples():
    assert rank(F2Matrix.identity(3)) == 3
    M = F2Matrix.from_dense([[1, 1], [0, 0], [1, 1]])
    assert rank(M) == 1
    assert rank(F2Matrix.zeros(4, 3)) == 0


def test_rank_does_not_mutate():
    M = F2Matrix.from_dense([[1, 1, 0], [1, 1, 1]])
    before = M.bits()
    rank(M)
    assert M.bits() == before


@pytest.mark.parametrize("seed", range(20))
def test_rank_against_row_echelon(seed):
    rng = random.Random(seed)
    dense = random_dense(rng, 8, 8)
    assert rank(F2Matrix.from_dense(dense)) == row_echelon_rank(dense)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 2**32))
def test_rank_of_transpose(m, n, seed):
    M = F2Matrix.from_dense(random_dense(random.Random(seed), m, n))
    assert rank(M) == rank(M.transpose())


def test_solve_identity():
    w = col("1011")
    assert solve_in_span(F2Matrix.identity(4), w) == w


def test_solve_single_column():
    c = col("0111")
    assert solve_in_span(F2Matrix(4, [c]), c) == F2Column.from_list([1])


def test_solve_outside_span():
    B = F2Matrix(3, [col("100"), col("110")])
    assert solve_in_span(B, col("001")) is None


def test_solve_length_mismatch():
    with pytest.raises(LengthMismatch):
        solve_in_span(F2Matrix.identity(3), col("10"))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 10), st.integers(1, 10), st.integers(0, 2**32))
def test_solution_multiplies_back(m, n, seed):
    rng = random.Random(seed)
    B = F2Matrix.from_dense(random_dense(rng, m, n, 0.4))
    # a vector in the span, possibly with dependent columns
    coeffs = F2Column.from_list([int(rng.random() < 0.5) for _ in range(n)])
    w = (B @ F2Matrix(n, [coeffs])).column(1)
    x = solve_in_span(B, w)
    assert x is not None
    assert (B @ F2Matrix(n, [x])).column(1) == w
    # an arbitrary vector is solvable iff appending it does not raise the rank
    v = F2Column.from_list([int(rng.random() < 0.5) for _ in range(m)])
    in_span = rank(F2Matrix(m, B.columns + [v])) == rank(B)
    assert (solve_in_span(B, v) is not None) == in_span


def test_echelon_reuse():
    B = F2Matrix.from_dense([[1, 0, 1], [0, 1, 1], [0, 0, 0]])
    e = Echelon(B)
    assert e.rank == 2
    assert e.solve(col("001")) is None
    for w in ("110", "100", "010"):
        x = e.solve(col(w))
        assert (B @ F2Matrix(3, [x])).column(1) == col(w)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 40), st.integers(0, 2**32))
def test_pivot_drops_after_collision(n, seed):
    rng = random.Random(seed)
    top = rng.randrange(n)
    a = F2Column(n, (1 << top) | rng.getrandbits(top) if top else 1)
    b = F2Column(n, (1 << top) | rng.getrandbits(top) if top else 1)
    before = max(pivot(a), pivot(b))
    after = pivot(add_into(a, b.copy()))
    assert after is None or after < before


def test_matmul_and_triangularity():
    M = F2Matrix.from_dense([[0, 1, 1], [0, 0, 1], [0, 0, 0]])
    assert M.is_upper_triangular(strict=True)
    assert M @ F2Matrix.identity(3) == M
    assert (M @ M).to_dense() == [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
