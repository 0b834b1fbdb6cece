"""Row-echelon GF(2) routines on dense uint8 arrays.

Deliberately separate from the bit-packed column code in ``f2``: the oracles
use these so they do not share an elimination path with what they check.
"""

from __future__ import annotations

import numpy as np

from .complex import FilteredComplex, Simplex


def rref(A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form mod 2 and the pivot column of each nonzero row."""
    A = np.array(A, dtype=np.uint8) % 2
    m, n = A.shape
    pivots: list[int] = []
    r = 0
    for col in range(n):
        if r == m:
            break
        hits = np.nonzero(A[r:, col])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        others = np.nonzero(A[:, col])[0]
        others = others[others != r]
        A[others] ^= A[r]
        pivots.append(col)
        r += 1
    return A[:r], pivots


def gf2_rank(A: np.ndarray) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A)[1])


def nullspace(A: np.ndarray, ncols: int | None = None) -> np.ndarray:
    """Rows form a basis of ``{x : A x = 0}`` over F2."""
    A = np.asarray(A, dtype=np.uint8)
    n = A.shape[1] if A.ndim == 2 else ncols
    if A.size == 0:
        return np.eye(n, dtype=np.uint8)
    R, pivots = rref(A)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.uint8)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for row, p in enumerate(pivots):
            basis[t, p] = R[row, f]
    return basis


def coboundary_matrix(
    X: FilteredComplex, d: int
) -> tuple[np.ndarray, tuple[Simplex, ...], tuple[Simplex, ...]]:
    """Matrix of the coboundary from degree ``d`` to ``d + 1``.

    Rows are the (d+1)-simplices and columns the d-simplices, both in
    filtration order. Built from faces of the upper simplices, not cofacet
    tables.
    """
    lower = X.simplices_of_dim(d) if d >= 0 else ()
    upper = X.simplices_of_dim(d + 1)
    col = {s: j for j, s in enumerate(lower)}
    A = np.zeros((len(upper), len(lower)), dtype=np.uint8)
    for r, c in enumerate(upper):
        for v in range(len(c)):
            face = c[:v] + c[v + 1 :]
            j = col.get(face)
            if j is not None:
                A[r, j] = 1
    return A, lower, upper


def relative_rank(vectors: np.ndarray, subspace: np.ndarray) -> int:
    """dim(span(vectors) + subspace) - dim(subspace); rows are vectors."""
    if vectors.shape[0] == 0:
        return 0
    if subspace.shape[0] == 0:
        return gf2_rank(vectors)
    return gf2_rank(np.vstack([subspace, vectors])) - gf2_rank(subspace)
