"""Filtered simplicial complexes, cochains and the coboundary operator.

A simplex is a tuple of strictly ascending nonnegative vertex ids. The global
integer order on vertices supplies the total order on every simplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    DegreeMismatch,
    Duplicate,
    MalformedSimplex,
    NotClosed,
    NotMember,
    StageOutOfRange,
    UnsupportedCochain,
)

Simplex = tuple[int, ...]


def make_simplex(vertices: Iterable[int]) -> Simplex:
    """Validate ``vertices`` as a simplex without reordering them."""
    s = tuple(vertices)
    if not s:
        raise MalformedSimplex("empty simplex")
    for v in s:
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise MalformedSimplex(f"vertex {v!r} is not a nonnegative integer")
    for u, v in zip(s, s[1:]):
        if u == v:
            raise MalformedSimplex(f"repeated vertex {v} in {s}")
        if u > v:
            raise MalformedSimplex(f"vertices of {s} are not ascending")
    return s


def facets(s: Simplex) -> Iterator[Simplex]:
    """Codimension-one faces of ``s`` (nothing for a vertex)."""
    if len(s) == 1:
        return
    for i in range(len(s)):
        yield s[:i] + s[i + 1 :]


def position(v: int, s: Simplex) -> int:
    """Number of vertices of ``s`` strictly smaller than ``v``."""
    # s is sorted, so the tuple index is the position
    try:
        return s.index(v)
    except ValueError:
        raise NotMember(f"vertex {v} is not in {s}") from None


class FilteredComplex:
    """A simplexwise filtration ``a_1, ..., a_n``; every prefix is a subcomplex.

    Instances are immutable. Build them with :func:`build_filtered_complex`,
    which validates the input; the constructor trusts its arguments.
    """

    def __init__(self, simplices: tuple[Simplex, ...]):
        self.simplices = simplices
        self._index = {s: i for i, s in enumerate(simplices, start=1)}
        self._hash = hash(simplices)

    def __len__(self) -> int:
        return len(self.simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self.simplices)

    def __contains__(self, s) -> bool:
        return s in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, FilteredComplex) and self.simplices == other.simplices

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FilteredComplex(n={len(self)}, dim={self.dimension})"

    @property
    def n(self) -> int:
        return len(self.simplices)

    def index(self, s: Simplex) -> int:
        """1-based filtration index of ``s``."""
        try:
            return self._index[s]
        except KeyError:
            raise NotMember(f"{s} is not a simplex of the complex") from None

    def get_index(self, s: Simplex) -> int | None:
        return self._index.get(s)

    def simplex(self, i: int) -> Simplex:
        """The simplex ``a_i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise StageOutOfRange(f"index {i} outside 1..{self.n}")
        return self.simplices[i - 1]

    @cached_property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @cached_property
    def _by_dim(self) -> dict[int, tuple[Simplex, ...]]:
        out: dict[int, list[Simplex]] = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(s)
        return {d: tuple(ss) for d, ss in out.items()}

    def simplices_of_dim(self, d: int) -> tuple[Simplex, ...]:
        """The ``d``-simplices in filtration order."""
        return self._by_dim.get(d, ())

    @cached_property
    def _cofacets(self) -> dict[Simplex, tuple[Simplex, ...]]:
        out: dict[Simplex, list[Simplex]] = {s: [] for s in self.simplices}
        for c in self.simplices:
            for f in facets(c):
                out[f].append(c)
        return {s: tuple(cs) for s, cs in out.items()}

    def cofacets(self, s: Simplex) -> tuple[Simplex, ...]:
        """Simplices having ``s`` as a codimension-one face, in filtration order."""
        try:
            return self._cofacets[s]
        except KeyError:
            raise NotMember(f"{s} is not a simplex of the complex") from None

    def prefix(self, i: int) -> FilteredComplex:
        """The subcomplex ``X_i`` spanned by ``a_1, ..., a_i``."""
        if not 0 <= i <= self.n:
            raise StageOutOfRange(f"stage {i} outside 0..{self.n}")
        return FilteredComplex(self.simplices[:i])

    def euler_characteristic(self) -> int:
        return sum((-1) ** (len(s) - 1) for s in self.simplices)


def build_filtered_complex(sequence: Iterable[Iterable[int]]) -> FilteredComplex:
    """Validate an ordered simplex sequence as a simplexwise filtration.

    Raises MalformedSimplex, Duplicate, or NotClosed (a facet is missing or
    appears after its coface).
    """
    seen: set[Simplex] = set()
    out = []
    for pos, raw in enumerate(sequence, start=1):
        s = make_simplex(raw)
        if s in seen:
            raise Duplicate(f"simplex {s} appears twice (second time at index {pos})")
        for f in facets(s):
            if f not in seen:
                raise NotClosed(f"face {f} of {s} (index {pos}) is missing or appears later")
        seen.add(s)
        out.append(s)
    return FilteredComplex(tuple(out))


@dataclass(frozen=True)
class Cochain:
    """A homogeneous F2 cochain: the set of ``degree``-simplices valued 1.

    ``degree`` is explicit so empty cochains of different degrees differ.
    """

    degree: int
    support: frozenset[Simplex]

    def __post_init__(self):
        for s in self.support:
            if len(s) != self.degree + 1:
                raise DegreeMismatch(f"{s} does not have dimension {self.degree}")

    @classmethod
    def of(cls, degree: int, simplices: Iterable[Iterable[int]] = ()) -> Cochain:
        return cls(degree, frozenset(tuple(s) for s in simplices))

    @classmethod
    def zero(cls, degree: int) -> Cochain:
        return cls(degree, frozenset())

    def __add__(self, other: Cochain) -> Cochain:
        if self.degree != other.degree:
            raise DegreeMismatch(f"cannot add degrees {self.degree} and {other.degree}")
        return Cochain(self.degree, self.support ^ other.support)

    def __len__(self) -> int:
        return len(self.support)

    def __contains__(self, s) -> bool:
        return s in self.support

    def is_zero(self) -> bool:
        return not self.support

    def sorted_in(self, X: FilteredComplex) -> list[Simplex]:
        """Support listed in filtration order of ``X``."""
        return sorted(self.support, key=X.index)

    def restrict(self, Y: FilteredComplex) -> Cochain:
        """Restriction to a subcomplex: drop simplices not in ``Y``."""
        return Cochain(self.degree, frozenset(s for s in self.support if s in Y))


def check_supported(X: FilteredComplex, alpha: Cochain) -> None:
    for s in alpha.support:
        if s not in X:
            raise UnsupportedCochain(f"{s} is not a simplex of the complex")


def coboundary(X: FilteredComplex, alpha: Cochain) -> Cochain:
    """The coboundary of ``alpha``: each (d+1)-simplex gets the parity of its
    d-faces lying in the support."""
    check_supported(X, alpha)
    out: set[Simplex] = set()
    for a in alpha.support:
        for c in X.cofacets(a):
            if c in out:
                out.remove(c)
            else:
                out.add(c)
    return Cochain(alpha.degree + 1, frozenset(out))
