"""Dense linear algebra over the two-element field.

Columns are bit-packed into Python integers: row ``r`` (1-based) is bit
``r - 1``. Column addition is a single XOR over the packed words, and the
pivot (largest nonzero row) is ``bit_length()``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import LengthMismatch


class F2Column:
    """Fixed-length column with rows indexed ``1..length``."""

    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if bits >> length:
            raise LengthMismatch(f"bits set beyond row {length}")
        self.length = length
        self.bits = bits

    @classmethod
    def from_rows(cls, length: int, rows: Iterable[int]) -> F2Column:
        bits = 0
        for r in rows:
            if not 1 <= r <= length:
                raise LengthMismatch(f"row {r} outside 1..{length}")
            bits ^= 1 << (r - 1)
        return cls(length, bits)

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> F2Column:
        """``entries[0]`` is row 1."""
        return cls.from_rows(len(entries), (r for r, e in enumerate(entries, 1) if e % 2))

    def to_list(self) -> list[int]:
        return [(self.bits >> r) & 1 for r in range(self.length)]

    def rows(self) -> list[int]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length())
            b ^= low
        return out

    def __getitem__(self, r: int) -> int:
        if not 1 <= r <= self.length:
            raise IndexError(r)
        return (self.bits >> (r - 1)) & 1

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, F2Column)
            and self.length == other.length
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.length, self.bits))

    def copy(self) -> F2Column:
        return F2Column(self.length, self.bits)

    def __repr__(self) -> str:
        return "F2Column(" + "".join(map(str, self.to_list())) + ")"


def pivot(c: F2Column) -> int | None:
    """Largest row index with a nonzero entry, or None for the zero column."""
    return c.bits.bit_length() or None


def add_into(src: F2Column, dst: F2Column) -> F2Column:
    """``dst += src`` in place; returns ``dst``."""
    if src.length != dst.length:
        raise LengthMismatch(f"column lengths {src.length} and {dst.length} differ")
    dst.bits ^= src.bits
    return dst


class F2Matrix:
    """An ``nrows x len(columns)`` matrix stored column-wise."""

    __slots__ = ("nrows", "columns")

    def __init__(self, nrows: int, columns: Iterable[F2Column] = ()):
        self.nrows = nrows
        self.columns = list(columns)
        for c in self.columns:
            if c.length != nrows:
                raise LengthMismatch(f"column of length {c.length} in a {nrows}-row matrix")

    @classmethod
    def from_bits(cls, nrows: int, bits: Iterable[int]) -> F2Matrix:
        return cls(nrows, (F2Column(nrows, b) for b in bits))

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> F2Matrix:
        """Build from a row-major 0/1 array."""
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if nrows else 0
        bits = [0] * ncols
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise LengthMismatch("ragged rows")
            for j, e in enumerate(row):
                if e % 2:
                    bits[j] |= 1 << r
        return cls.from_bits(nrows, bits)

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls.from_bits(n, (1 << j for j in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> F2Matrix:
        return cls.from_bits(nrows, [0] * ncols)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> F2Column:
        """Column ``j`` (1-based)."""
        return self.columns[j - 1]

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.columns[c - 1][r]

    def bits(self) -> list[int]:
        return [c.bits for c in self.columns]

    def to_dense(self) -> list[list[int]]:
        return [[(c.bits >> r) & 1 for c in self.columns] for r in range(self.nrows)]

    def copy(self) -> F2Matrix:
        return F2Matrix(self.nrows, (c.copy() for c in self.columns))

    def transpose(self) -> F2Matrix:
        return F2Matrix.from_dense(self.to_dense_t(), ncols=self.nrows)

    def to_dense_t(self) -> list[list[int]]:
        return [c.to_list() for c in self.columns]

    def __matmul__(self, other: F2Matrix) -> F2Matrix:
        if self.ncols != other.nrows:
            raise LengthMismatch(f"cannot multiply {self.shape} by {other.shape}")
        mine = self.bits()
        out = []
        for c in other.columns:
            acc = 0
            b = c.bits
            while b:
                low = b & -b
                acc ^= mine[low.bit_length() - 1]
                b ^= low
            out.append(acc)
        return F2Matrix.from_bits(self.nrows, out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, F2Matrix)
            and self.nrows == other.nrows
            and self.bits() == other.bits()
        )

    def is_upper_triangular(self, strict: bool = False) -> bool:
        for j, c in enumerate(self.columns, start=1):
            limit = j - 1 if strict else j
            if c.bits >> limit:
                return False
        return True

    def __repr__(self) -> str:
        return f"F2Matrix({self.nrows}x{self.ncols})"


class Echelon:
    """Pivot-indexed echelon form of a column set, with recorded transformations.

    Built once, then :meth:`solve` answers span-membership queries against the
    original columns in time linear in the number of pivots touched.
    """

    def __init__(self, basis: F2Matrix):
        self.nrows = basis.nrows
        self.ncols = basis.ncols
        # pivot row -> (reduced column bits, combination of original columns)
        self._table: dict[int, tuple[int, int]] = {}
        for j, col in enumerate(basis.columns):
            b, combo = col.bits, 1 << j
            while b:
                entry = self._table.get(b.bit_length())
                if entry is None:
                    self._table[b.bit_length()] = (b, combo)
                    break
                b ^= entry[0]
                combo ^= entry[1]

    @property
    def rank(self) -> int:
        return len(self._table)

    def solve_bits(self, w: int) -> int | None:
        x = 0
        table = self._table
        while w:
            entry = table.get(w.bit_length())
            if entry is None:
                return None
            w ^= entry[0]
            x ^= entry[1]
        return x

    def solve(self, w: F2Column) -> F2Column | None:
        if w.length != self.nrows:
            raise LengthMismatch(f"right-hand side has length {w.length}, expected {self.nrows}")
        x = self.solve_bits(w.bits)
        return None if x is None else F2Column(self.ncols, x)


def rank_of_bits(columns: Iterable[int]) -> int:
    """Rank of a set of bit-packed columns."""
    table: dict[int, int] = {}
    for b in columns:
        while b:
            p = b.bit_length()
            other = table.get(p)
            if other is None:
                table[p] = b
                break
            b ^= other
    return len(table)


def rank(M: F2Matrix) -> int:
    """Rank over F2 by column elimination; ``M`` is left untouched."""
    return rank_of_bits(M.bits())


def solve_in_span(B: F2Matrix, w: F2Column) -> F2Column | None:
    """A coefficient column ``x`` with ``B x = w``, or None when ``w`` is not in
    the column span of ``B``."""
    if w.length != B.nrows:
        raise LengthMismatch(f"right-hand side has length {w.length}, expected {B.nrows}")
    return Echelon(B).solve(w)
