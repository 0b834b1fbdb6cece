"""Named complexes and random generators used by the self-check and tests."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterable, Sequence

from . import _dense
from .complex import Cochain, FilteredComplex, Simplex, build_filtered_complex, coboundary, facets

RP2_TRIANGLES = (
    (1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
    (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6),
)  # fmt: skip

# degree-1 cocycle on RP2_TRIANGLES generating H^1
RP2_COCYCLE = ((1, 4), (1, 5), (2, 3), (2, 4), (3, 5))


def closure(maximal: Iterable[Iterable[int]]) -> list[Simplex]:
    """All nonempty faces, ordered by dimension then lexicographically."""
    faces: set[Simplex] = set()
    for m in maximal:
        m = tuple(sorted(m))
        for r in range(1, len(m) + 1):
            faces.update(combinations(m, r))
    return sorted(faces, key=lambda s: (len(s), s))


def rp2() -> FilteredComplex:
    """Six-vertex real projective plane, vertices then edges then triangles."""
    return build_filtered_complex(closure(RP2_TRIANGLES))


def rp2_cocycle() -> Cochain:
    return Cochain.of(1, RP2_COCYCLE)


def torus() -> FilteredComplex:
    """Seven-vertex torus on vertices 0..6."""
    tris = []
    for i in range(7):
        tris.append((i, (i + 1) % 7, (i + 3) % 7))
        tris.append((i, (i + 2) % 7, (i + 3) % 7))
    return build_filtered_complex(closure(tris))


def suspension(X: FilteredComplex) -> FilteredComplex:
    """Unreduced suspension: join with two new vertices."""
    top = max(max(s) for s in X)
    north, south = top + 1, top + 2
    maximal = [s + (north,) for s in X] + [s + (south,) for s in X]
    return build_filtered_complex(closure(maximal))


def shuffled_filtration(simplices: Sequence[Simplex], rng: random.Random) -> FilteredComplex:
    """A uniformly random next-available ordering of a closed simplex set."""
    remaining = set(simplices)
    ready = sorted(s for s in remaining if len(s) == 1)
    order = []
    waiting: dict[Simplex, int] = {s: len(s) for s in remaining if len(s) > 1}
    cofaces: dict[Simplex, list[Simplex]] = {}
    for s in waiting:
        for f in facets(s):
            cofaces.setdefault(f, []).append(s)
    while ready:
        s = ready.pop(rng.randrange(len(ready)))
        order.append(s)
        for c in cofaces.get(s, ()):
            waiting[c] -= 1
            if waiting[c] == 0:
                ready.append(c)
    return build_filtered_complex(order)


def random_filtration(
    rng: random.Random,
    max_simplices: int = 40,
    max_dim: int = 3,
    n_vertices: int | None = None,
) -> FilteredComplex:
    """Closure of random simplices, shuffled, truncated to ``max_simplices``."""
    if n_vertices is None:
        n_vertices = rng.randint(3, 8)
    maximal = []
    for _ in range(rng.randint(2, 10)):
        size = rng.randint(1, min(max_dim + 1, n_vertices))
        maximal.append(tuple(sorted(rng.sample(range(n_vertices), size))))
    X = shuffled_filtration(closure(maximal), rng)
    return X.prefix(min(max_simplices, X.n))


def random_cochain(X: FilteredComplex, d: int, rng: random.Random, p: float = 0.5) -> Cochain:
    return Cochain(d, frozenset(s for s in X.simplices_of_dim(d) if rng.random() < p))


def random_cocycle(X: FilteredComplex, d: int, rng: random.Random) -> Cochain:
    """Uniform random element of the cocycle space in degree ``d``."""
    A, lower, _ = _dense.coboundary_matrix(X, d)
    basis = _dense.nullspace(A, ncols=len(lower))
    acc = set()
    for vec in basis:
        if rng.random() < 0.5:
            acc ^= {lower[c] for c in range(len(lower)) if vec[c]}
    return Cochain(d, frozenset(acc))


def random_coboundary(X: FilteredComplex, d: int, rng: random.Random) -> Cochain:
    if d == 0:
        return Cochain.zero(0)
    return coboundary(X, random_cochain(X, d - 1, rng))
