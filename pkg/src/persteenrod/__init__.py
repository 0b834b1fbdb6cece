"""Persistent cohomology over F2 with Steenrod squares and their rank invariant."""

from .complex import (
    Cochain,
    FilteredComplex,
    build_filtered_complex,
    coboundary,
    position,
)
from .f2 import F2Column, F2Matrix, add_into, pivot, rank, solve_in_span
from .persistence import (
    NEG_INF,
    Barcode,
    ExtendedInterval,
    GradedTriple,
    barcode_of,
    build_antitransposed_coboundary,
    extract_triples,
    persistent_cohomology,
    phcol,
    restriction_rank_oracle,
)
from .rank_invariant import (
    RankInvariant,
    RankQuery,
    RankTable,
    rank_inv,
    rank_inv_oracle,
    rank_inv_table,
)
from .steenrod import (
    cohomologous,
    cup_product,
    cup_square_oracle,
    index_partition,
    is_cocycle,
    stsq,
)

__version__ = "0.1.0"
