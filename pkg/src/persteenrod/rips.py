"""Vietoris-Rips filtrations of Euclidean point clouds."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex import FilteredComplex, build_filtered_complex
from .errors import InputError


@dataclass(frozen=True)
class RipsConfig:
    threshold: float
    max_dim: int

    def __post_init__(self):
        if not self.threshold >= 0:
            raise InputError(f"threshold must be nonnegative, got {self.threshold}")
        if self.max_dim < 0:
            raise InputError(f"max_dim must be nonnegative, got {self.max_dim}")


def point_cloud(points) -> np.ndarray:
    P = np.asarray(points, dtype=float)
    if P.ndim != 2 or P.shape[0] == 0:
        raise InputError("expected a nonempty 2-d array of points")
    if not np.all(np.isfinite(P)):
        raise InputError("coordinates must be finite")
    return P


def rips_filtration(points, cfg: RipsConfig) -> FilteredComplex:
    """All cliques of at most ``max_dim + 1`` points with pairwise distance
    within the threshold, sorted by (diameter, dimension, vertices).

    Vertices are the row indices of ``points``.
    """
    P = point_cloud(points)
    dist = np.sqrt(((P[:, None, :] - P[None, :, :]) ** 2).sum(axis=-1))
    m = len(P)
    adj = [set(np.nonzero(dist[v] <= cfg.threshold)[0].tolist()) - {v} for v in range(m)]
    entries = []
    layer = [((v,), 0.0) for v in range(m)]
    for dim in range(cfg.max_dim + 1):
        entries.extend((diam, dim, s) for s, diam in layer)
        if dim == cfg.max_dim:
            break
        nxt = []
        for s, diam in layer:
            common = set.intersection(*(adj[v] for v in s))
            for w in sorted(u for u in common if u > s[-1]):
                nxt.append((s + (w,), max(diam, max(dist[v, w] for v in s))))
        layer = nxt
    entries.sort()
    return build_filtered_complex(s for _, _, s in entries)
