"""The group algebra F2[G], its two-sided ideals and quotient rings.

A ring element is the bitmask of its support: bit ``g`` is the coefficient
of group element ``g``.  A quotient ``F2[G]/I`` is described by the reduced
echelon basis of ``I``; the non-pivot group elements form a basis of the
quotient, and quotient elements are handled as *coordinate* bitmasks over
that basis (bit ``i`` = coefficient of the ``i``-th free group element).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .endos import ResourceError, find_generating_set
from .gf2 import EchelonBuilder, Gf2Basis, Gf2Matrix, Gf2Vec, bits_of, popcount, solve
from .groups import GroupError, GroupTable, is_normal

log = logging.getLogger(__name__)

DEFAULT_CAP_DIM = 22


@dataclass(frozen=True)
class RingElem:
    group: GroupTable
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.group.order:
            raise ValueError("support outside the group")

    @classmethod
    def of(cls, G: GroupTable, *elems: int) -> "RingElem":
        """Sum of the listed group elements (repeats cancel)."""
        bits = 0
        for g in elems:
            bits ^= 1 << g
        return cls(G, bits)

    @classmethod
    def parse(cls, G: GroupTable, text: str) -> "RingElem":
        """Read ``1+x+y+xy``, ``{0,1,2,5}`` or ``0``."""
        text = text.strip()
        if text == "0":
            return cls(G, 0)
        if text.startswith("{") and text.endswith("}"):
            inner = text[1:-1].strip()
            idx = [int(t) for t in inner.split(",")] if inner else []
            for i in idx:
                if not 0 <= i < G.order:
                    raise ValueError(f"index {i} outside the group")
            return cls.of(G, *idx)
        try:
            return cls.of(G, *(G.index_of(t.strip()) for t in text.split("+")))
        except KeyError as exc:
            raise ValueError(str(exc.args[0])) from None

    def support(self) -> list[int]:
        return list(bits_of(self.bits))

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        return "+".join(self.group.label(g) for g in bits_of(self.bits))

    def __add__(self, other: "RingElem") -> "RingElem":
        _same_group(self, other)
        return RingElem(self.group, self.bits ^ other.bits)

    __xor__ = __add__

    def __mul__(self, other: "RingElem") -> "RingElem":
        return ring_mul(self, other)

    def __bool__(self) -> bool:
        return self.bits != 0

    def vec(self) -> Gf2Vec:
        return Gf2Vec(self.bits, self.group.order)


def _same_group(u: RingElem, v: RingElem) -> None:
    if u.group is not v.group and u.group != v.group:
        raise GroupError("ring elements belong to different groups")


def mul_bits(G: GroupTable, u: int, v: int) -> int:
    mul = G.mul
    vs = list(bits_of(v))
    out = 0
    for s in bits_of(u):
        row = mul[s]
        for t in vs:
            out ^= 1 << row[t]
    return out


def left_mul_bits(G: GroupTable, g: int, v: int) -> int:
    row = G.mul[g]
    out = 0
    for t in bits_of(v):
        out |= 1 << row[t]
    return out


def right_mul_bits(G: GroupTable, v: int, g: int) -> int:
    mul = G.mul
    out = 0
    for t in bits_of(v):
        out |= 1 << mul[t][g]
    return out


def ring_mul(u: RingElem, v: RingElem) -> RingElem:
    _same_group(u, v)
    return RingElem(u.group, mul_bits(u.group, u.bits, v.bits))


def augmentation(u: RingElem) -> int:
    return popcount(u.bits) & 1


def apply_hom_bits(image: Sequence[int], v: int) -> int:
    """Linear extension of a group map to the group algebra."""
    out = 0
    for g in bits_of(v):
        out ^= 1 << image[g]
    return out


# -- ideals -----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Ideal:
    group: GroupTable
    generators: tuple[RingElem, ...]
    basis: Gf2Basis

    @property
    def rank(self) -> int:
        return self.basis.rank

    def contains(self, u: "RingElem | int") -> bool:
        bits = u.bits if isinstance(u, RingElem) else u
        return self.basis.reduce_bits(bits) == 0

    def audit(self) -> Optional[tuple[int, int, str]]:
        """Full two-sidedness check against every group element.

        Returns ``(row_index, g, side)`` for the first failure, else ``None``.
        """
        G = self.group
        for r, row in enumerate(self.basis.rows):
            for g in range(G.order):
                if self.basis.reduce_bits(left_mul_bits(G, g, row)):
                    return r, g, "left"
                if self.basis.reduce_bits(right_mul_bits(G, row, g)):
                    return r, g, "right"
        return None


def closure_bits(G: GroupTable, gens: Iterable[int],
                 builder: Optional[EchelonBuilder] = None,
                 group_gens: Optional[Sequence[int]] = None) -> EchelonBuilder:
    """Grow ``builder`` to the two-sided ideal generated by its span and ``gens``."""
    if group_gens is None:
        group_gens = find_generating_set(G).gens if G.order > 1 else ()
    b = builder or EchelonBuilder(G.order)
    # rows already in ``builder`` are assumed closed; only new vectors expand
    queue = [w for w in gens if b.insert(w)]
    while queue:
        v = queue.pop()
        for g in group_gens:
            for prod in (left_mul_bits(G, g, v), right_mul_bits(G, v, g)):
                if b.insert(prod):
                    queue.append(prod)
    return b


def ideal_closure(G: GroupTable, gens: Sequence[RingElem], audit: bool = False) -> Ideal:
    for w in gens:
        if w.group != G:
            raise GroupError("generator over a different group")
    b = closure_bits(G, [w.bits for w in gens])
    ideal = Ideal(G, tuple(gens), b.freeze())
    if audit:
        bad = ideal.audit()
        if bad is not None:
            raise AssertionError(f"ideal closure is not two-sided: {bad}")
    return ideal


def parse_ideal_text(G: GroupTable, text: str) -> list[RingElem]:
    """One generator per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(RingElem.parse(G, line))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return out


def read_ideal_file(G: GroupTable, path: "str | Path") -> list[RingElem]:
    return parse_ideal_text(G, Path(path).read_text())


def write_ideal_file(path: "str | Path", gens: Sequence[RingElem]) -> None:
    Path(path).write_text("".join(f"{w}\n" for w in gens))


# -- quotient rings ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class QuotientRing:
    ideal: Ideal

    @property
    def group(self) -> GroupTable:
        return self.ideal.group

    @cached_property
    def free(self) -> tuple[int, ...]:
        return tuple(self.ideal.basis.free_columns())

    @property
    def dim(self) -> int:
        return self.group.order - self.ideal.rank

    @cached_property
    def _free_pos(self) -> dict[int, int]:
        return {c: i for i, c in enumerate(self.free)}

    def coords_of_bits(self, bits: int) -> int:
        """Coordinates of the class of ``bits``."""
        r = self.ideal.basis.reduce_bits(bits)
        out = 0
        pos = self._free_pos
        for c in bits_of(r):
            out |= 1 << pos[c]
        return out

    def bits_of_coords(self, coords: int) -> int:
        out = 0
        for i in bits_of(coords):
            out |= 1 << self.free[i]
        return out

    @cached_property
    def group_coords(self) -> tuple[int, ...]:
        """Coordinates of the class of each group element."""
        return tuple(self.coords_of_bits(1 << g) for g in range(self.group.order))

    @property
    def one(self) -> int:
        return self.group_coords[0]

    def rep(self, u: RingElem) -> RingElem:
        """Canonical representative of the class of ``u``."""
        return RingElem(self.group, self.ideal.basis.reduce_bits(u.bits))

    def coords(self, u: RingElem) -> int:
        return self.coords_of_bits(u.bits)

    def elem(self, coords: int) -> RingElem:
        return RingElem(self.group, self.bits_of_coords(coords))

    def mul_coords(self, x: int, y: int) -> int:
        gc = self.group_coords
        mul = self.group.mul
        free = self.free
        ys = [free[j] for j in bits_of(y)]
        out = 0
        for i in bits_of(x):
            row = mul[free[i]]
            for t in ys:
                out ^= gc[row[t]]
        return out

    def mul(self, u: RingElem, v: RingElem) -> RingElem:
        return self.rep(ring_mul(u, v))

    @cached_property
    def left_columns(self) -> tuple[tuple[int, ...], ...]:
        """``left_columns[i][k]`` = coords of ``free[i] * free[k]``."""
        gc = self.group_coords
        mul = self.group.mul
        return tuple(tuple(gc[mul[fi][fk]] for fk in self.free) for fi in self.free)

    def left_matrix(self, x: int) -> Gf2Matrix:
        """Matrix of left multiplication by the class with coordinates ``x``."""
        d = self.dim
        cols = [0] * d
        lc = self.left_columns
        for i in bits_of(x):
            row = lc[i]
            for k in range(d):
                cols[k] ^= row[k]
        rows = [0] * d
        for k, col in enumerate(cols):
            for r in bits_of(col):
                rows[r] |= 1 << k
        return Gf2Matrix(d, d, tuple(rows))

    def inverse_coords(self, x: int) -> Optional[int]:
        """Two-sided inverse of the class ``x``, or ``None``."""
        d = self.dim
        if d == 0:
            return 0
        sol = solve(self.left_matrix(x), Gf2Vec(self.one, d))
        if sol is None:
            return None
        y = sol.bits
        if self.mul_coords(x, y) != self.one or self.mul_coords(y, x) != self.one:
            raise AssertionError("one-sided inverse in a finite ring must be two-sided")
        return y


def quotient(ideal: Ideal) -> QuotientRing:
    return QuotientRing(ideal)


def unit_inverse(Q: QuotientRing, u: RingElem) -> Optional[RingElem]:
    y = Q.inverse_coords(Q.coords(u))
    return None if y is None else Q.elem(y)


def is_unit(Q: QuotientRing, u: RingElem) -> bool:
    return unit_inverse(Q, u) is not None


def is_unit_full_algebra(G: GroupTable, u: RingElem) -> bool:
    """Left multiplication by ``u`` on F2[G] is invertible."""
    cols = [mul_bits(G, u.bits, 1 << g) for g in range(G.order)]
    b = EchelonBuilder(G.order)
    return all(b.insert(c) for c in cols)


def coset_map_to_c3(G: GroupTable, H: Iterable[int]) -> tuple[int, ...]:
    """Map each element of ``G`` to its image in ``G/H = C3`` (0, 1, 2)."""
    H = frozenset(H)
    if 3 * len(H) != G.order:
        raise GroupError("subgroup must have index 3")
    if len(H) & (len(H) - 1):
        raise GroupError("subgroup must be a 2-group")
    if not is_normal(G, H):
        raise GroupError("subgroup must be normal")
    c = min(g for g in range(G.order) if g not in H)
    c2 = G.mul[c][c]
    cls = [0] * G.order
    for h in H:
        cls[G.mul[h][c]] = 1
        cls[G.mul[h][c2]] = 2
    return tuple(cls)


def c3_is_unit(p: int) -> bool:
    """Units of F2[C3] (bit i = coefficient of c^i) by direct search."""
    one = 1
    for q in range(8):
        prod = 0
        for i in bits_of(p):
            for j in bits_of(q):
                prod ^= 1 << ((i + j) % 3)
        if prod == one:
            return True
    return False


def is_unit_via_sylow3_quotient(G: GroupTable, H: Iterable[int], u: RingElem) -> bool:
    cls = coset_map_to_c3(G, H)
    image = 0
    for g in bits_of(u.bits):
        image ^= 1 << cls[g]
    return c3_is_unit(image)


def _batch_full_rank(cols: np.ndarray, d: int) -> np.ndarray:
    """Rows of ``cols`` (shape (B, d), bit-packed columns) that are invertible matrices."""
    cols = cols.copy()
    B = cols.shape[0]
    alive = np.ones(B, dtype=bool)
    ar = np.arange(B)
    one = np.uint64(1)
    for r in range(d):
        sh = np.uint64(r)
        has = ((cols[:, r:] >> sh) & one).astype(bool)
        found = has.any(axis=1)
        alive &= found
        idx = has.argmax(axis=1) + r
        piv = cols[ar, idx]
        cols[ar, idx] = cols[:, r]
        cols[:, r] = piv
        if r + 1 < d:
            rest = cols[:, r + 1:]
            hit = ((rest >> sh) & one).astype(bool)
            rest ^= np.where(hit, piv[:, None], np.uint64(0))
    return alive


def unit_coords(Q: QuotientRing, cap_dim: int = DEFAULT_CAP_DIM, block_bits: int = 14) -> list[int]:
    """Coordinates of every unit of ``Q``, ascending."""
    d = Q.dim
    if d > cap_dim:
        raise ResourceError(f"quotient dimension {d} above the cap {cap_dim}")
    if d == 0:
        return [0]
    if d > 64:
        raise ResourceError("unit census packs columns into 64-bit words")
    lc = np.array(Q.left_columns, dtype=np.uint64)
    b = min(d, block_bits)
    low = np.zeros((1 << b, d), dtype=np.uint64)
    for i in range(b):
        low[1 << i: 1 << (i + 1)] = low[: 1 << i] ^ lc[i]
    units: list[int] = []
    base = np.arange(1 << b, dtype=np.int64)
    for high in range(1 << (d - b)):
        shift = np.zeros(d, dtype=np.uint64)
        for i in bits_of(high):
            shift ^= lc[b + i]
        ok = _batch_full_rank(low ^ shift, d)
        units.extend(int(x) | (high << b) for x in base[ok])
    return units


def unit_group(Q: QuotientRing, cap_dim: int = DEFAULT_CAP_DIM) -> list[RingElem]:
    return [Q.elem(x) for x in unit_coords(Q, cap_dim)]


def embeds(ideal: Ideal) -> tuple[bool, Optional[tuple[int, int]]]:
    """Whether ``G`` injects into ``F2[G]/I``; on failure a colliding pair."""
    seen: dict[int, int] = {}
    for g in range(ideal.group.order):
        r = ideal.basis.reduce_bits(1 << g)
        if r in seen:
            return False, (seen[r], g)
        seen[r] = g
    return True, None


__all__ = [
    "DEFAULT_CAP_DIM",
    "Ideal",
    "QuotientRing",
    "RingElem",
    "apply_hom_bits",
    "augmentation",
    "closure_bits",
    "coset_map_to_c3",
    "embeds",
    "ideal_closure",
    "is_unit",
    "is_unit_full_algebra",
    "is_unit_via_sylow3_quotient",
    "left_mul_bits",
    "mul_bits",
    "parse_ideal_text",
    "quotient",
    "read_ideal_file",
    "right_mul_bits",
    "ring_mul",
    "unit_coords",
    "unit_group",
    "unit_inverse",
    "write_ideal_file",
]
