"""Persistent cohomology of a simplexwise filtration.

The coboundary matrix is reduced in reversed filtration order (the
anti-transpose of the incidence matrix), so matrix index ``m`` stands for the
simplex ``a_{n+1-m}``. Everything leaving this module is converted back to
filtration coordinates: representatives are bit-packed with bit ``s - 1`` for
``a_s``, and intervals are sets of filtration stages.

Restricting to the prefix ``X_i`` keeps a suffix of matrix rows and columns,
and a reduced matrix stays reduced under that truncation. Consequently the
columns ``V_j`` of bar-creating indices together with the nonzero ``R_j``
form a basis of all cochains of ``X_n`` whose truncation to any ``X_i`` is
again a basis adapted to the cohomology of ``X_i``. The rank invariant solves
against exactly that basis.
"""

from __future__ import annotations

import math
import weakref
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import _dense
from .complex import Cochain, FilteredComplex
from .errors import InconsistentInput, StageOutOfRange
from .f2 import F2Column, F2Matrix

NEG_INF = -math.inf


@dataclass(frozen=True, order=True)
class ExtendedInterval:
    """The stage set ``{s : left < s <= right}``; ``left`` may be ``NEG_INF``.

    A finite left endpoint is at least 1, so a bar starting at stage 1 is
    written with ``NEG_INF``.
    """

    left: float
    right: int

    def __post_init__(self):
        if self.left != NEG_INF and not (1 <= self.left < self.right):
            raise ValueError(f"bad interval ({self.left}, {self.right}]")

    @classmethod
    def from_stages(cls, first: int, last: int) -> ExtendedInterval:
        """The interval whose stages are ``first..last``."""
        return cls(NEG_INF if first <= 1 else first - 1, last)

    def contains(self, stage: int) -> bool:
        return self.left < stage <= self.right

    def contains_window(self, i: float, j: int) -> bool:
        """Whether every stage of ``[i, j]`` lies in the interval."""
        return self.left < i and j <= self.right

    def stages(self) -> range:
        first = 1 if self.left == NEG_INF else int(self.left) + 1
        return range(first, self.right + 1)

    def __str__(self) -> str:
        left = "-inf" if self.left == NEG_INF else str(int(self.left))
        return f"({left}, {self.right}]"


@dataclass(frozen=True)
class GradedTriple:
    """A bar with a cocycle representative.

    ``rep`` is a cocycle on every ``X_s`` with ``s`` in the interval and
    represents the bar's class there. For finite bars ``coboundary`` is the
    reduced column ``R_j``: the coboundary of ``rep`` in ``X_n``, of degree
    ``degree + 1``, and the basis element that kills the class at the right
    endpoint. Both columns use filtration coordinates.
    """

    rep: F2Column
    interval: ExtendedInterval
    degree: int
    coboundary: F2Column | None = None

    @property
    def essential(self) -> bool:
        return self.coboundary is None

    @property
    def birth_index(self) -> int:
        """Filtration index of the simplex that creates the class."""
        return (self.rep.bits & -self.rep.bits).bit_length()


@dataclass
class Barcode:
    """Per-degree multisets of extended intervals."""

    bars: dict[int, Counter] = field(default_factory=dict)

    def add(self, degree: int, interval: ExtendedInterval, count: int = 1) -> None:
        self.bars.setdefault(degree, Counter())[interval] += count

    def degrees(self) -> list[int]:
        return sorted(d for d, c in self.bars.items() if c)

    def intervals(self, degree: int) -> Counter:
        return self.bars.get(degree, Counter())

    def items(self) -> Iterator[tuple[int, ExtendedInterval, int]]:
        """``(degree, interval, multiplicity)`` sorted by degree, left, right."""
        for d in self.degrees():
            for interval in sorted(self.bars[d]):
                yield d, interval, self.bars[d][interval]

    def count_containing(self, degree: int, i: float, j: int) -> int:
        return sum(
            m for interval, m in self.intervals(degree).items() if interval.contains_window(i, j)
        )

    def essential(self, degree: int, n: int) -> int:
        return sum(m for interval, m in self.intervals(degree).items() if interval.right == n)

    def __eq__(self, other) -> bool:
        return isinstance(other, Barcode) and list(self.items()) == list(other.items())

    def __len__(self) -> int:
        return sum(sum(c.values()) for c in self.bars.values())


def _reverse_bits(b: int, n: int) -> int:
    if not b:
        return 0
    return int(format(b, f"0{n}b")[::-1], 2)


def bits_to_cochain(bits: int, X: FilteredComplex, degree: int | None = None) -> Cochain:
    """Filtration-coordinate bits to a cochain."""
    support = []
    while bits:
        low = bits & -bits
        support.append(X.simplices[low.bit_length() - 1])
        bits ^= low
    if degree is None:
        if not support:
            raise ValueError("degree is required for the zero cochain")
        degree = len(support[0]) - 1
    return Cochain(degree, frozenset(support))


def cochain_to_bits(alpha: Cochain, X: FilteredComplex) -> int:
    b = 0
    for s in alpha.support:
        b |= 1 << (X.index(s) - 1)
    return b


def build_antitransposed_coboundary(X: FilteredComplex) -> F2Matrix:
    """``D_perp[r, c] = D[n+1-c, n+1-r]`` where ``D[i, j] = 1`` iff ``a_i`` is a
    facet of ``a_j``. Column ``c`` holds the cofacets of ``a_{n+1-c}``; the
    result is strictly upper triangular."""
    n = X.n
    cols = []
    for c in range(1, n + 1):
        sigma = X.simplices[n - c]
        b = 0
        for tau in X.cofacets(sigma):
            b |= 1 << (n - X.index(tau))
        cols.append(b)
    return F2Matrix.from_bits(n, cols)


def phcol(M: F2Matrix) -> tuple[F2Matrix, F2Matrix]:
    """Column reduction ``R = M V`` with pairwise distinct pivots.

    Collisions are resolved left to right by adding the earlier column into
    the later one, so the output is deterministic.
    """
    if M.nrows != M.ncols:
        raise ValueError(f"expected a square matrix, got {M.shape}")
    R = M.bits()
    V = [1 << j for j in range(M.ncols)]
    owner: dict[int, int] = {}
    for j in range(len(R)):
        r = R[j]
        v = V[j]
        while r:
            p = r.bit_length()
            i = owner.get(p)
            if i is None:
                owner[p] = j
                break
            r ^= R[i]
            v ^= V[i]
        R[j], V[j] = r, v
    return F2Matrix.from_bits(M.nrows, R), F2Matrix.from_bits(M.nrows, V)


def _degree_of(bits: int, X: FilteredComplex) -> int:
    dims = set()
    while bits:
        low = bits & -bits
        dims.add(len(X.simplices[low.bit_length() - 1]) - 1)
        bits ^= low
    if len(dims) != 1:
        raise InconsistentInput(f"column is not homogeneous (dimensions {sorted(dims)})")
    return dims.pop()


def extract_triples(R: F2Matrix, V: F2Matrix, X: FilteredComplex) -> list[GradedTriple]:
    """One triple per bar, sorted by degree and then by birth.

    A nonzero column ``j`` with pivot ``i`` gives the finite bar on stages
    ``n+1-j .. n-i``; a zero column that is nobody's pivot gives an essential
    bar on stages ``n+1-j .. n``.
    """
    n = X.n
    if R.shape != (n, n) or V.shape != (n, n):
        raise InconsistentInput(f"matrices {R.shape}, {V.shape} do not match n={n}")
    rb, vb = R.bits(), V.bits()
    pivots = {}
    for j, r in enumerate(rb, start=1):
        if r:
            p = r.bit_length()
            if p in pivots:
                raise InconsistentInput(f"columns {pivots[p]} and {j} share pivot {p}")
            if p >= j:
                raise InconsistentInput(f"column {j} has pivot {p} on or below the diagonal")
            pivots[p] = j
    out = []
    for j in range(1, n + 1):
        r, v = rb[j - 1], vb[j - 1]
        if v.bit_length() != j:
            raise InconsistentInput(f"V column {j} does not have a unit diagonal")
        first = n + 1 - j
        rep = F2Column(n, _reverse_bits(v, n))
        degree = _degree_of(rep.bits, X)
        if r:
            if j in pivots:
                raise InconsistentInput(f"index {j} is both a pivot and a nonzero column")
            cob = F2Column(n, _reverse_bits(r, n))
            if _degree_of(cob.bits, X) != degree + 1:
                raise InconsistentInput(f"column {j} raises degree by more than one")
            last = n - r.bit_length()
            out.append(GradedTriple(rep, ExtendedInterval.from_stages(first, last), degree, cob))
        elif j not in pivots:
            out.append(GradedTriple(rep, ExtendedInterval.from_stages(first, n), degree))
    out.sort(key=lambda t: (t.degree, t.birth_index))
    return out


def barcode_of(Z: Iterable[GradedTriple]) -> Barcode:
    bc = Barcode()
    for t in Z:
        bc.add(t.degree, t.interval)
    return bc


@dataclass
class PersistenceResult:
    complex: FilteredComplex
    D: F2Matrix
    R: F2Matrix
    V: F2Matrix
    triples: list[GradedTriple]

    @property
    def barcode(self) -> Barcode:
        return barcode_of(self.triples)

    def of_degree(self, d: int) -> list[GradedTriple]:
        return [t for t in self.triples if t.degree == d]


def persistent_cohomology(X: FilteredComplex) -> PersistenceResult:
    D = build_antitransposed_coboundary(X)
    R, V = phcol(D)
    return PersistenceResult(X, D, R, V, extract_triples(R, V, X))


class StageCohomology:
    """Dense, reduction-free cocycle and coboundary spaces of prefixes ``X_i``.

    Vectors are rows indexed by the d-simplices of the whole complex in
    filtration order, so restriction is masking out late simplices.
    """

    def __init__(self, X: FilteredComplex):
        self.X = X
        self._cocycles: dict[tuple[int, int], np.ndarray] = {}
        self._coboundaries: dict[tuple[int, int], np.ndarray] = {}

    def simplices(self, d: int):
        return self.X.simplices_of_dim(d)

    def _width(self, d: int) -> int:
        return len(self.simplices(d))

    def _count(self, d: int, stage: int) -> int:
        """Number of d-simplices in ``X_stage`` (they form a prefix)."""
        return sum(1 for s in self.simplices(d) if self.X.index(s) <= stage)

    def cocycles(self, d: int, stage: int) -> np.ndarray:
        key = (d, stage)
        if key not in self._cocycles:
            Y = self.X.prefix(stage)
            A, lower, _ = _dense.coboundary_matrix(Y, d)
            basis = _dense.nullspace(A, ncols=len(lower))
            full = np.zeros((basis.shape[0], self._width(d)), dtype=np.uint8)
            full[:, : len(lower)] = basis
            self._cocycles[key] = full
        return self._cocycles[key]

    def coboundaries(self, d: int, stage: int) -> np.ndarray:
        key = (d, stage)
        if key not in self._coboundaries:
            Y = self.X.prefix(stage)
            width = self._width(d)
            if d == 0:
                rows = np.zeros((0, width), dtype=np.uint8)
            else:
                A, _, upper = _dense.coboundary_matrix(Y, d - 1)
                rows = np.zeros((A.shape[1], width), dtype=np.uint8)
                rows[:, : len(upper)] = A.T
            self._coboundaries[key] = rows
        return self._coboundaries[key]

    def restrict(self, vectors: np.ndarray, d: int, stage: int) -> np.ndarray:
        out = vectors.copy()
        out[:, self._count(d, stage) :] = 0
        return out

    def betti(self, d: int, stage: int) -> int:
        return _dense.relative_rank(self.cocycles(d, stage), self.coboundaries(d, stage))

    def restriction_rank(self, d: int, i: int, j: int) -> int:
        if self._width(d) == 0:
            return 0
        image = self.restrict(self.cocycles(d, j), d, i)
        return _dense.relative_rank(image, self.coboundaries(d, i))


_stage_cache: weakref.WeakKeyDictionary = weakref.WeakKeyDictionary()


def stage_cohomology(X: FilteredComplex) -> StageCohomology:
    sc = _stage_cache.get(X)
    if sc is None:
        sc = _stage_cache[X] = StageCohomology(X)
    return sc


def restriction_rank_oracle(X: FilteredComplex, d: int, i: int, j: int) -> int:
    """Rank of ``H^d(X_j) -> H^d(X_i)`` by direct elimination, no reduction."""
    if not 1 <= i <= j <= X.n:
        raise StageOutOfRange(f"need 1 <= i <= j <= {X.n}, got i={i}, j={j}")
    if d < 0:
        return 0
    return stage_cohomology(X).restriction_rank(d, i, j)
