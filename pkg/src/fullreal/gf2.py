"""Linear algebra over GF(2) with vectors packed into Python ints.

Bit ``i`` of a vector is coordinate ``i``.  Column order is index order, so
the leading (pivot) column of a row is its lowest set bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class DimensionError(ValueError):
    """Raised when operands have incompatible lengths."""


def bits_of(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return bin(x).count("1")


def low_bit(x: int) -> int:
    """Index of the lowest set bit (x must be nonzero)."""
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class Gf2Vec:
    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DimensionError("negative length")
        if self.bits < 0 or self.bits >> self.n:
            raise DimensionError(f"bits set beyond logical length {self.n}")

    @classmethod
    def zero(cls, n: int) -> "Gf2Vec":
        return cls(0, n)

    @classmethod
    def from_support(cls, support: Iterable[int], n: int) -> "Gf2Vec":
        bits = 0
        for i in support:
            if not 0 <= i < n:
                raise DimensionError(f"index {i} outside 0..{n - 1}")
            bits ^= 1 << i
        return cls(bits, n)

    @classmethod
    def from_string(cls, s: str) -> "Gf2Vec":
        """Parse ``"1010"``: character ``i`` is coordinate ``i``."""
        bits = 0
        for i, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"bad bit character {ch!r}")
        return cls(bits, len(s))

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __len__(self) -> int:
        return self.n

    def __xor__(self, other: "Gf2Vec") -> "Gf2Vec":
        _check_len(self.n, other.n)
        return Gf2Vec(self.bits ^ other.bits, self.n)

    def __and__(self, other: "Gf2Vec") -> "Gf2Vec":
        _check_len(self.n, other.n)
        return Gf2Vec(self.bits & other.bits, self.n)

    def __bool__(self) -> bool:
        return self.bits != 0

    def dot(self, other: "Gf2Vec") -> int:
        _check_len(self.n, other.n)
        return popcount(self.bits & other.bits) & 1

    def weight(self) -> int:
        return popcount(self.bits)

    def support(self) -> list[int]:
        return list(bits_of(self.bits))


def _check_len(a: int, b: int) -> None:
    if a != b:
        raise DimensionError(f"length mismatch: {a} != {b}")


class EchelonBuilder:
    """Mutable reduced-echelon accumulator used by the hot loops.

    Rows are kept fully reduced: every pivot bit appears in exactly one row.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Optional[dict[int, int]] = None):
        self.n = n
        self.rows: dict[int, int] = dict(rows) if rows else {}

    def reduce(self, v: int) -> int:
        for p, row in self.rows.items():
            if (v >> p) & 1:
                v ^= row
        return v

    def insert(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        p = low_bit(v)
        for q, row in self.rows.items():
            if (row >> p) & 1:
                self.rows[q] = row ^ v
        self.rows[p] = v
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def freeze(self) -> "Gf2Basis":
        pivots = tuple(sorted(self.rows))
        return Gf2Basis(self.n, tuple(self.rows[p] for p in pivots), pivots)


@dataclass(frozen=True)
class Gf2Basis:
    """A subspace of GF(2)^n in reduced row-echelon form.

    ``rows`` are ints; ``pivots[i]`` is the lowest set bit of ``rows[i]``.
    """

    ambient_dim: int
    rows: tuple[int, ...] = ()
    pivots: tuple[int, ...] = ()

    @classmethod
    def empty(cls, n: int) -> "Gf2Basis":
        return cls(n)

    @classmethod
    def spanning(cls, n: int, vectors: Iterable[int]) -> "Gf2Basis":
        b = EchelonBuilder(n)
        for v in vectors:
            b.insert(v)
        return b.freeze()

    @property
    def rank(self) -> int:
        return len(self.rows)

    def builder(self) -> EchelonBuilder:
        return EchelonBuilder(self.ambient_dim, dict(zip(self.pivots, self.rows)))

    def _coerce(self, v: "Gf2Vec | int") -> int:
        if isinstance(v, Gf2Vec):
            _check_len(v.n, self.ambient_dim)
            return v.bits
        if v < 0 or v >> self.ambient_dim:
            raise DimensionError(f"vector does not fit in {self.ambient_dim} bits")
        return v

    def insert(self, v: "Gf2Vec | int") -> tuple["Gf2Basis", bool]:
        b = self.builder()
        grew = b.insert(self._coerce(v))
        return (b.freeze() if grew else self), grew

    def reduce_bits(self, v: int) -> int:
        for p, row in zip(self.pivots, self.rows):
            if (v >> p) & 1:
                v ^= row
        return v

    def reduce(self, v: Gf2Vec) -> Gf2Vec:
        return Gf2Vec(self.reduce_bits(self._coerce(v)), self.ambient_dim)

    def contains(self, v: "Gf2Vec | int") -> bool:
        return self.reduce_bits(self._coerce(v)) == 0

    def free_columns(self) -> list[int]:
        piv = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in piv]

    def vectors(self) -> list[Gf2Vec]:
        return [Gf2Vec(r, self.ambient_dim) for r in self.rows]


@dataclass(frozen=True)
class Gf2Matrix:
    """Dense matrix over GF(2); row ``i`` is an int of ``n_cols`` bits."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n_rows:
            raise DimensionError("row count mismatch")
        for r in self.rows:
            if r < 0 or r >> self.n_cols:
                raise DimensionError("row wider than n_cols")

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "Gf2Matrix":
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "Gf2Matrix":
        n_rows = len(entries)
        n_cols = len(entries[0]) if n_rows else 0
        rows = []
        for r in entries:
            if len(r) != n_cols:
                raise DimensionError("ragged matrix")
            rows.append(sum((int(x) & 1) << j for j, x in enumerate(r)))
        return cls(n_rows, n_cols, tuple(rows))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n_cols)] for r in self.rows]

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def __add__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise DimensionError("shape mismatch")
        return Gf2Matrix(self.n_rows, self.n_cols,
                         tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __matmul__(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.n_cols != other.n_rows:
            raise DimensionError("inner dimension mismatch")
        out = []
        for r in self.rows:
            acc = 0
            for j in bits_of(r):
                acc ^= other.rows[j]
            out.append(acc)
        return Gf2Matrix(self.n_rows, other.n_cols, tuple(out))

    def apply(self, x: Gf2Vec) -> Gf2Vec:
        """Matrix-vector product ``M @ x``."""
        _check_len(x.n, self.n_cols)
        bits = 0
        for i, r in enumerate(self.rows):
            if popcount(r & x.bits) & 1:
                bits |= 1 << i
        return Gf2Vec(bits, self.n_rows)

    def transpose(self) -> "Gf2Matrix":
        cols = [0] * self.n_cols
        for i, r in enumerate(self.rows):
            for j in bits_of(r):
                cols[j] |= 1 << i
        return Gf2Matrix(self.n_cols, self.n_rows, tuple(cols))


def block_matrix(blocks: Sequence[Sequence[Gf2Matrix]]) -> Gf2Matrix:
    """Assemble a matrix from a grid of blocks (rows of blocks share heights)."""
    rows: list[int] = []
    n_cols = sum(b.n_cols for b in blocks[0])
    for block_row in blocks:
        height = block_row[0].n_rows
        if any(b.n_rows != height for b in block_row):
            raise DimensionError("blocks in a row must share height")
        if sum(b.n_cols for b in block_row) != n_cols:
            raise DimensionError("block rows must share total width")
        for i in range(height):
            acc, shift = 0, 0
            for b in block_row:
                acc |= b.rows[i] << shift
                shift += b.n_cols
            rows.append(acc)
    return Gf2Matrix(len(rows), n_cols, tuple(rows))


def insert(basis: Gf2Basis, v: Gf2Vec) -> tuple[Gf2Basis, bool]:
    return basis.insert(v)


def reduce(basis: Gf2Basis, v: Gf2Vec) -> Gf2Vec:
    return basis.reduce(v)


def rank_of_rows(rows: Iterable[int]) -> int:
    b = EchelonBuilder(0)
    return sum(1 for r in rows if b.insert(r))


def rank(m: Gf2Matrix) -> int:
    return rank_of_rows(m.rows)


def solve(m: Gf2Matrix, b: Gf2Vec) -> Optional[Gf2Vec]:
    """Return some ``x`` with ``m @ x == b``, or ``None`` if inconsistent.

    Free variables are set to zero.
    """
    _check_len(b.n, m.n_rows)
    n = m.n_cols
    aug_bit = 1 << n
    pivot_rows: dict[int, int] = {}
    for i, r in enumerate(m.rows):
        v = r | (aug_bit if (b.bits >> i) & 1 else 0)
        for p, row in pivot_rows.items():
            if (v >> p) & 1:
                v ^= row
        low = v & (aug_bit - 1)
        if not low:
            if v:
                return None  # 0 = 1
            continue
        p = low_bit(low)
        for q, row in pivot_rows.items():
            if (row >> p) & 1:
                pivot_rows[q] = row ^ v
        pivot_rows[p] = v
    x = 0
    for p, row in pivot_rows.items():
        if row & aug_bit:
            x |= 1 << p
    return Gf2Vec(x, n)


__all__ = [
    "DimensionError",
    "EchelonBuilder",
    "Gf2Basis",
    "Gf2Matrix",
    "Gf2Vec",
    "bits_of",
    "block_matrix",
    "insert",
    "low_bit",
    "popcount",
    "rank",
    "rank_of_rows",
    "reduce",
    "solve",
]
