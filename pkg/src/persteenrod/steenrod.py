"""Steenrod squares of simplicial cocycles over F2.

``stsq`` evaluates the symmetrized cup-(d-k) square of a cochain by walking
unordered pairs of support simplices. ``cup_square_oracle`` computes the same
cochain the slow way, summing over all index partitions of each candidate
simplex, and exists to check ``stsq``.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from itertools import combinations

from .complex import (
    Cochain,
    FilteredComplex,
    Simplex,
    check_supported,
    coboundary,
    position,
)
from .errors import DegreeMismatch, InvalidK, NotCocycle, NotSubset
from .f2 import Echelon, F2Column, F2Matrix


@dataclass(frozen=True)
class IndexPartition:
    u_minus: frozenset[int]
    u_plus: frozenset[int]


def index_partition(u, c: Simplex) -> IndexPartition:
    """Split ``u`` by the parity of (position in ``u``) + (position in ``c``).

    Odd vertices go to ``u_minus``, even ones to ``u_plus``.
    """
    u = tuple(sorted(u))
    if not set(u) <= set(c):
        raise NotSubset(f"{u} is not a subset of {c}")
    minus, plus = [], []
    for i, v in enumerate(u):
        (minus if (i + position(v, c)) % 2 else plus).append(v)
    return IndexPartition(frozenset(minus), frozenset(plus))


def _union(a: Simplex, b: Simplex) -> Simplex:
    return tuple(sorted(set(a) | set(b)))


def pair_indices(a: Simplex, b: Simplex) -> dict[int, int]:
    """The mod-2 index of every vertex of the symmetric difference of ``a``
    and ``b``, measured inside ``a | b``."""
    c = _union(a, b)
    u = tuple(sorted(set(a) ^ set(b)))
    return {v: (i + position(v, c)) % 2 for i, v in enumerate(u)}


def pair_contributes(a: Simplex, b: Simplex) -> bool:
    """Whether the unordered pair {a, b} hits ``a | b`` in the square.

    The index must be constant on ``a - b`` and on ``b - a``, with different
    constants on the two sides.
    """
    ind = pair_indices(a, b)
    only_b = set(b)
    side_a = {ind[v] for v in a if v not in only_b}
    only_a = set(a)
    side_b = {ind[v] for v in b if v not in only_a}
    return len(side_a) == 1 and len(side_b) == 1 and side_a != side_b


def stsq(k: int, S: Cochain, X: FilteredComplex) -> Cochain:
    """A representative of ``Sq^k`` of the class of ``S``, as a (d+k)-cochain.

    Defined for any cochain; it is a cocycle when ``S`` is one. Pairs are
    bucketed by a shared face of size ``d + 1 - k``, so each pair whose union
    has the right size is visited exactly once.
    """
    if k < 1:
        raise InvalidK(f"k must be at least 1, got {k}")
    check_supported(X, S)
    d = S.degree
    if k > d + 1:
        return Cochain.zero(d + k)
    target = d + k + 1
    shared = d + 1 - k
    buckets: dict[tuple[int, ...], list[Simplex]] = {}
    for a in sorted(S.support):
        for face in combinations(a, shared):
            buckets.setdefault(face, []).append(a)
    out: set[Simplex] = set()
    for group in buckets.values():
        for a, b in combinations(group, 2):
            c = _union(a, b)
            if len(c) != target or c not in X:
                continue
            if pair_contributes(a, b):
                if c in out:
                    out.remove(c)
                else:
                    out.add(c)
    return Cochain(d + k, frozenset(out))


def cup_square_oracle(k: int, S: Cochain, X: FilteredComplex) -> Cochain:
    """Brute-force square: at each (d+k)-simplex ``c`` add up
    ``S(c - u_minus) * S(c - u_plus)`` over all ``2k``-subsets ``u`` of ``c``."""
    if k < 1:
        raise InvalidK(f"k must be at least 1, got {k}")
    check_supported(X, S)
    d = S.degree
    out = set()
    for c in X.simplices_of_dim(d + k):
        total = 0
        for u in combinations(c, 2 * k):
            part = index_partition(u, c)
            front = tuple(v for v in c if v not in part.u_minus)
            back = tuple(v for v in c if v not in part.u_plus)
            if front in S.support and back in S.support:
                total += 1
        if total % 2:
            out.add(c)
    return Cochain(d + k, frozenset(out))


def cup_product(alpha: Cochain, beta: Cochain, X: FilteredComplex) -> Cochain:
    """Alexander-Whitney cup product: front p-face times back q-face."""
    check_supported(X, alpha)
    check_supported(X, beta)
    p, q = alpha.degree, beta.degree
    out = set()
    for c in X.simplices_of_dim(p + q):
        if c[: p + 1] in alpha.support and c[p:] in beta.support:
            out.add(c)
    return Cochain(p + q, frozenset(out))


def is_cocycle(alpha: Cochain, X: FilteredComplex) -> bool:
    return coboundary(X, alpha).is_zero()


class _CoboundarySpace:
    """Echelon form of the image of the coboundary into degree ``d``."""

    def __init__(self, X: FilteredComplex, d: int):
        rows = X.simplices_of_dim(d)
        self.row = {s: r for r, s in enumerate(rows)}
        cols = []
        for sigma in X.simplices_of_dim(d - 1):
            b = 0
            for c in X.cofacets(sigma):
                b ^= 1 << self.row[c]
            cols.append(b)
        self.echelon = Echelon(F2Matrix.from_bits(len(rows), cols))

    def bits(self, alpha: Cochain) -> int:
        b = 0
        for s in alpha.support:
            b ^= 1 << self.row[s]
        return b

    def contains(self, alpha: Cochain) -> bool:
        return self.echelon.solve(F2Column(self.echelon.nrows, self.bits(alpha))) is not None


_spaces: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def coboundary_space(X: FilteredComplex, d: int) -> _CoboundarySpace:
    per_complex = _spaces.setdefault(X, {})
    if d not in per_complex:
        per_complex[d] = _CoboundarySpace(X, d)
    return per_complex[d]


def is_coboundary(alpha: Cochain, X: FilteredComplex) -> bool:
    check_supported(X, alpha)
    return coboundary_space(X, alpha.degree).contains(alpha)


def cohomologous(alpha: Cochain, beta: Cochain, X: FilteredComplex) -> bool:
    """Whether two cocycles of the same degree differ by a coboundary."""
    if alpha.degree != beta.degree:
        raise DegreeMismatch(f"degrees {alpha.degree} and {beta.degree} differ")
    check_supported(X, alpha)
    check_supported(X, beta)
    for name, gamma in (("first", alpha), ("second", beta)):
        if not is_cocycle(gamma, X):
            raise NotCocycle(f"{name} argument is not a cocycle")
    return is_coboundary(alpha + beta, X)


def square(k: int, S: Cochain, X: FilteredComplex) -> Cochain:
    """``stsq`` extended by ``Sq^0 = id``."""
    return S if k == 0 else stsq(k, S, X)
