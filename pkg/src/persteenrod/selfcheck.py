"""Oracle-agreement checks on a user-supplied complex, at small scale."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complex import FilteredComplex
from .persistence import persistent_cohomology, restriction_rank_oracle
from .rank_invariant import RankInvariant, RankQuery, all_windows, rank_inv_oracle
from .samples import random_cochain
from .steenrod import cup_square_oracle, stsq


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _windows(n: int, limit: int, rng: random.Random) -> list:
    ws = [w for w in all_windows(n)]
    if len(ws) > limit:
        ws = rng.sample(ws, limit)
    return ws


def check_stsq(X: FilteredComplex, rng: random.Random, trials: int) -> CheckResult:
    compared = 0
    for d in range(X.dimension + 1):
        for _ in range(trials):
            S = random_cochain(X, d, rng)
            for k in range(1, d + 2):
                if stsq(k, S, X) != cup_square_oracle(k, S, X):
                    return CheckResult("stsq-oracle", False, f"mismatch at d={d}, k={k}")
                compared += 1
    return CheckResult("stsq-oracle", True, f"{compared} squares compared")


def check_barcode(X: FilteredComplex, rng: random.Random, limit: int) -> CheckResult:
    bc = persistent_cohomology(X).barcode
    compared = 0
    for i, j in _windows(X.n, limit, rng):
        if isinstance(i, float):
            continue
        for d in range(X.dimension + 1):
            if bc.count_containing(d, i, j) != restriction_rank_oracle(X, d, i, j):
                return CheckResult("barcode-oracle", False, f"mismatch at d={d}, window ({i}, {j})")
            compared += 1
    return CheckResult("barcode-oracle", True, f"{compared} ranks compared")


def check_rank_invariant(X: FilteredComplex, rng: random.Random, limit: int) -> CheckResult:
    ri = RankInvariant(X)
    compared = 0
    windows = _windows(X.n, limit, rng)
    for k in (1, 2):
        for d in (0, 1, 2):
            for i, j in windows:
                q = RankQuery(k, d, i, j)
                if ri.rank(q) != rank_inv_oracle(X, q):
                    return CheckResult("rankinv-oracle", False, f"mismatch at {q}")
                compared += 1
    return CheckResult("rankinv-oracle", True, f"{compared} queries compared")


def run_selfcheck(X: FilteredComplex, seed: int = 0, trials: int = 5, windows: int = 300):
    rng = random.Random(seed)
    return [
        check_stsq(X, rng, trials),
        check_barcode(X, rng, windows),
        check_rank_invariant(X, rng, windows),
    ]
