"""The Steenrod rank invariant ``rho(k, d, i, j)``.

``rho(k, d, i, j)`` is the rank of ``Sq^k`` composed with the restriction
``H^d(X_j) -> H^d(X_i)``. :class:`RankInvariant` evaluates it from the
reduction output; :func:`rank_inv_oracle` recomputes it from scratch with
dense elimination on the prefixes.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import _dense
from .complex import Cochain, FilteredComplex
from .errors import QueryOutOfRange, SolveFailed
from .f2 import Echelon, F2Matrix, rank_of_bits
from .persistence import (
    NEG_INF,
    GradedTriple,
    bits_to_cochain,
    cochain_to_bits,
    persistent_cohomology,
    stage_cohomology,
)
from .steenrod import stsq


@dataclass(frozen=True)
class RankQuery:
    k: int
    d: int
    i: float
    j: int

    def validate(self, n: int) -> None:
        if self.k < 1:
            raise QueryOutOfRange(f"k must be at least 1, got {self.k}")
        if not 1 <= self.j <= n:
            raise QueryOutOfRange(f"j={self.j} outside 1..{n}")
        if self.i != NEG_INF and not (isinstance(self.i, int) and 1 <= self.i <= self.j):
            raise QueryOutOfRange(f"i={self.i} must be -inf or in 1..j={self.j}")


@dataclass
class RankTable:
    """``rho(k, d, ., .)`` over every window ``(i, j)`` with ``i <= j``."""

    k: int
    d: int
    n: int
    values: dict[tuple[float, int], int] = field(default_factory=dict)

    def __getitem__(self, window: tuple[float, int]) -> int:
        return self.values[window]

    def windows(self) -> Iterator[tuple[float, int]]:
        return iter(self.values)

    def to_csv(self) -> str:
        lines = ["i,j,rank"]
        for (i, j), r in sorted(self.values.items()):
            left = "-inf" if i == NEG_INF else str(i)
            lines.append(f"{left},{j},{r}")
        return "\n".join(lines) + "\n"


def all_windows(n: int) -> Iterator[tuple[float, int]]:
    for j in range(1, n + 1):
        yield NEG_INF, j
        for i in range(1, j + 1):
            yield i, j


class RankInvariant:
    """Rank invariant evaluated from the bars and representatives of ``X``.

    For a degree ``e`` the solve basis is the representatives of the degree-e
    bars followed by the reduced columns of the finite degree-(e-1) bars.
    Together they form a triangular basis of all e-cochains of ``X_n``, so
    every square has unique coordinates. For a window ``(i, j)``, the
    coordinates on bars alive at stage ``i`` are the class of the square in
    ``H^{d+k}(X_i)``; coordinates on bars that were born and died by stage
    ``i`` must vanish.
    """

    def __init__(self, X: FilteredComplex, Z: Sequence[GradedTriple] | None = None):
        self.X = X
        self.Z = list(persistent_cohomology(X).triples if Z is None else Z)
        self._bases: dict[int, tuple[list[GradedTriple], Echelon]] = {}
        self._coords: dict[tuple[int, int], int] = {}

    def _basis(self, e: int) -> tuple[list[GradedTriple], Echelon]:
        if e not in self._bases:
            bars = [t for t in self.Z if t.degree == e]
            killers = [t.coboundary.bits for t in self.Z if t.degree == e - 1 and not t.essential]
            cols = [t.rep.bits for t in bars] + killers
            self._bases[e] = bars, Echelon(F2Matrix.from_bits(self.X.n, cols))
        return self._bases[e]

    def coordinates(self, t: GradedTriple, k: int) -> int:
        """Coordinates of ``stsq(k, rep)`` in the degree ``deg + k`` basis."""
        key = (id(t), k)
        if key not in self._coords:
            bars, echelon = self._basis(t.degree + k)
            square = stsq(k, bits_to_cochain(t.rep.bits, self.X, t.degree), self.X)
            x = echelon.solve_bits(cochain_to_bits(square, self.X))
            if x is None:
                raise SolveFailed(
                    f"square of the degree-{t.degree} bar {t.interval} is outside the "
                    f"span of the degree-{t.degree + k} basis"
                )
            self._coords[key] = x
        return self._coords[key]

    def rank(self, q: RankQuery) -> int:
        q.validate(self.X.n)
        if q.i == NEG_INF:
            return 0
        selected = [t for t in self.Z if t.degree == q.d and t.interval.contains_window(q.i, q.j)]
        if not selected:
            return 0
        bars, _ = self._basis(q.d + q.k)
        alive = dead = 0
        for pos, b in enumerate(bars):
            if b.interval.contains(q.i):
                alive |= 1 << pos
            elif b.birth_index <= q.i:
                dead |= 1 << pos
        rows = []
        for t in selected:
            x = self.coordinates(t, q.k)
            if x & dead:
                raise SolveFailed(
                    f"square of the degree-{q.d} bar {t.interval} is not a cocycle at stage {q.i}"
                )
            rows.append(x & alive)
        return rank_of_bits(rows)

    def table(self, k: int, d: int) -> RankTable:
        table = RankTable(k, d, self.X.n)
        for i, j in all_windows(self.X.n):
            table.values[(i, j)] = self.rank(RankQuery(k, d, i, j))
        return table


def rank_inv(Z: Sequence[GradedTriple], X: FilteredComplex, q: RankQuery) -> int:
    return RankInvariant(X, Z).rank(q)


def rank_inv_table(X: FilteredComplex, k: int, d: int) -> RankTable:
    return RankInvariant(X).table(k, d)


class _OracleSquares:
    """Squares of a dense cocycle basis of ``H^d(X_j)``, computed inside ``X_j``."""

    def __init__(self, X: FilteredComplex):
        self.X = X
        self.sc = stage_cohomology(X)
        self._squares: dict[tuple[int, int, int], np.ndarray] = {}

    def squares(self, k: int, d: int, j: int) -> np.ndarray:
        key = (k, d, j)
        if key not in self._squares:
            lower = self.X.simplices_of_dim(d)
            upper = self.X.simplices_of_dim(d + k)
            col = {s: c for c, s in enumerate(upper)}
            Xj = self.X.prefix(j)
            basis = self.sc.cocycles(d, j)
            out = np.zeros((basis.shape[0], len(upper)), dtype=np.uint8)
            for r, vec in enumerate(basis):
                alpha = Cochain(d, frozenset(lower[c] for c in np.nonzero(vec)[0]))
                for s in stsq(k, alpha, Xj).support:
                    out[r, col[s]] = 1
            self._squares[key] = out
        return self._squares[key]


_oracles: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def rank_inv_oracle(X: FilteredComplex, q: RankQuery) -> int:
    """``rho`` from first principles: square a cocycle basis of ``H^d(X_j)``
    inside ``X_j``, restrict to ``X_i``, and count independent classes modulo
    the coboundaries of ``X_i``."""
    q.validate(X.n)
    if q.i == NEG_INF or q.d < 0 or not X.simplices_of_dim(q.d):
        return 0
    if not X.simplices_of_dim(q.d + q.k):
        return 0
    oracle = _oracles.get(X)
    if oracle is None:
        oracle = _oracles[X] = _OracleSquares(X)
    image = oracle.sc.restrict(oracle.squares(q.k, q.d, q.j), q.d + q.k, q.i)
    return _dense.relative_rank(image, oracle.sc.coboundaries(q.d + q.k, q.i))
