"""Finite groups as Cayley tables.

Elements are the integers ``0..n-1`` and the identity is always ``0``.
Products are lexicographic: the pair ``(a, b)`` of a direct or semidirect
product ``A x B`` has index ``a * |B| + b``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

ASSOCIATIVITY_CHECK_MAX = 256


class GroupError(ValueError):
    """A table, homomorphism or action failed validation."""


@dataclass(frozen=True, eq=False)
class GroupTable:
    mul: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None
    name: str = ""
    inv: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        n = len(self.mul)
        if n == 0:
            raise GroupError("a group needs at least one element")
        arr = np.asarray(self.mul, dtype=np.int64)
        if arr.shape != (n, n):
            raise GroupError("multiplication table must be square")
        if arr.min() < 0 or arr.max() >= n:
            raise GroupError("table entries out of range")
        idx = np.arange(n)
        if not (np.array_equal(arr[0], idx) and np.array_equal(arr[:, 0], idx)):
            raise GroupError("index 0 is not a two-sided identity")
        srt = np.sort(arr, axis=1)
        if not (np.all(srt == idx) and np.all(np.sort(arr, axis=0) == idx[:, None])):
            raise GroupError("table is not a Latin square")
        if n <= ASSOCIATIVITY_CHECK_MAX:
            left = arr[arr, :]            # left[a, b, c] = (ab)c
            right = arr[:, arr]           # right[a, b, c] = a(bc)
            if not np.array_equal(left, right):
                a, b, c = (int(t[0]) for t in np.nonzero(left != right))
                raise GroupError(f"associativity fails at ({a}, {b}, {c})")
        inv = np.argmin(arr, axis=1)      # the unique column holding 0
        if not np.all(arr[inv, idx] == 0):
            raise GroupError("left and right inverses differ")
        object.__setattr__(self, "inv", tuple(int(i) for i in inv))
        if self.labels is not None:
            if len(self.labels) != n:
                raise GroupError("label count must equal the group order")
            if len(set(self.labels)) != n:
                raise GroupError("labels must be distinct")

    # -- basic accessors ------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return len(self.mul)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupTable) and self.mul == other.mul

    def __hash__(self) -> int:
        return hash(self.mul)

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order}, name={self.name!r})"

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.mul, dtype=np.int64)

    def label(self, g: int) -> str:
        return self.labels[g] if self.labels else str(g)

    def index_of(self, label: str) -> int:
        """Element index for a label, or for a decimal index string."""
        if self.labels and label in self._label_index:
            return self._label_index[label]
        if label.isdigit() and int(label) < self.order:
            return int(label)
        raise KeyError(f"unknown element {label!r}")

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.labels or ())}

    def m(self, *elems: int) -> int:
        """Product of the given elements, left to right."""
        acc = 0
        for g in elems:
            acc = self.mul[acc][g]
        return acc

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        acc, base = 0, g
        while k:
            if k & 1:
                acc = self.mul[acc][base]
            base = self.mul[base][base]
            k >>= 1
        return acc

    def conj(self, g: int, t: int) -> int:
        """``g t g^-1``."""
        return self.mul[self.mul[g][t]][self.inv[g]]

    # -- structure ------------------------------------------------------

    @cached_property
    def orders(self) -> tuple[int, ...]:
        out = []
        for g in range(self.order):
            k, x = 1, g
            while x != 0:
                x = self.mul[x][g]
                k += 1
            out.append(k)
        return tuple(out)

    def element_order(self, g: int) -> int:
        if not 0 <= g < self.order:
            raise IndexError(g)
        return self.orders[g]

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.array, self.array.T))

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.orders)

    def subgroup_generated(self, gens: Iterable[int]) -> frozenset[int]:
        gens = list(gens)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for h in frontier:
                for s in gens:
                    p = self.mul[h][s]
                    if p not in seen:
                        seen.add(p)
                        nxt.append(p)
            frontier = nxt
        return frozenset(seen)

    def fingerprint(self) -> "Fingerprint":
        return Fingerprint(
            order=self.order,
            abelian=self.is_abelian,
            center_size=len(center(self)),
            order_histogram=tuple(sorted(Counter(self.orders).items())),
            exponent=self.exponent,
        )

    # -- text format ----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"group {self.order}"]
        lines += [" ".join(map(str, row)) for row in self.mul]
        if self.labels:
            lines.append("labels")
            lines += list(self.labels)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, name: str = "") -> "GroupTable":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise GroupError("empty group file")
        head = lines[0].split()
        if len(head) != 2 or head[0] != "group" or not head[1].isdigit():
            raise GroupError("first line must be 'group <n>'")
        n = int(head[1])
        if len(lines) < n + 1:
            raise GroupError(f"expected {n} table rows")
        try:
            rows = tuple(tuple(int(t) for t in ln.split()) for ln in lines[1:n + 1])
        except ValueError as exc:
            raise GroupError(f"non-integer table entry: {exc}") from None
        labels = None
        rest = lines[n + 1:]
        if rest:
            if rest[0] != "labels":
                raise GroupError(f"unexpected line {rest[0]!r}")
            labels = tuple(rest[1:])
        return cls(rows, labels, name)

    def save(self, path: "str | Path") -> None:
        Path(path).write_text(self.to_text())

    @classmethod
    def load(cls, path: "str | Path") -> "GroupTable":
        p = Path(path)
        return cls.from_text(p.read_text(), name=p.stem)


@dataclass(frozen=True)
class Fingerprint:
    order: int
    abelian: bool
    center_size: int
    order_histogram: tuple[tuple[int, int], ...]
    exponent: int

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "abelian": self.abelian,
            "center_size": self.center_size,
            "order_histogram": {str(k): v for k, v in self.order_histogram},
            "exponent": self.exponent,
        }


@dataclass(frozen=True, eq=False)
class GroupHom:
    domain: GroupTable
    codomain: GroupTable
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        img = np.asarray(self.image, dtype=np.int64)
        if img.shape != (self.domain.order,):
            raise GroupError("image table has the wrong length")
        if img.size and (img.min() < 0 or img.max() >= self.codomain.order):
            raise GroupError("image outside the codomain")
        if self.image[0] != 0:
            raise GroupError("identity must map to identity")
        lhs = img[self.domain.array]
        rhs = self.codomain.array[img[:, None], img[None, :]]
        if not np.array_equal(lhs, rhs):
            g, h = (int(t[0]) for t in np.nonzero(lhs != rhs))
            raise GroupError(f"not a homomorphism at ({g}, {h})")

    def __call__(self, g: int) -> int:
        return self.image[g]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupHom) and self.image == other.image
                and self.domain == other.domain and self.codomain == other.codomain)

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"GroupHom({list(self.image)})"

    @property
    def is_bijective(self) -> bool:
        return self.domain.order == self.codomain.order and len(set(self.image)) == len(self.image)

    def compose(self, other: "GroupHom") -> "GroupHom":
        """``self o other`` (apply ``other`` first)."""
        return GroupHom(other.domain, self.codomain,
                        tuple(self.image[other.image[g]] for g in range(other.domain.order)))

    def kernel(self) -> frozenset[int]:
        return frozenset(g for g, h in enumerate(self.image) if h == 0)

    @classmethod
    def identity_map(cls, g: GroupTable) -> "GroupHom":
        return cls(g, g, tuple(range(g.order)))


@dataclass(frozen=True, eq=False)
class GroupAction:
    """A homomorphism ``actor -> Aut(target)``; ``auto_of[b]`` is the image of ``b``."""

    actor: GroupTable
    target: GroupTable
    auto_of: tuple[GroupHom, ...]

    def __post_init__(self) -> None:
        if len(self.auto_of) != self.actor.order:
            raise GroupError("need one automorphism per actor element")
        for b, phi in enumerate(self.auto_of):
            if phi.domain != self.target or phi.codomain != self.target:
                raise GroupError(f"auto_of[{b}] is not an endomorphism of the target")
            if not phi.is_bijective:
                raise GroupError(f"auto_of[{b}] is not bijective")
        if self.auto_of[0].image != tuple(range(self.target.order)):
            raise GroupError("the actor identity must act trivially")
        imgs = [phi.image for phi in self.auto_of]
        for b1 in range(self.actor.order):
            for b2 in range(self.actor.order):
                prod = imgs[self.actor.mul[b1][b2]]
                f1, f2 = imgs[b1], imgs[b2]
                if any(prod[t] != f1[f2[t]] for t in range(self.target.order)):
                    raise GroupError(f"action does not respect the product {b1}*{b2}")

    def act(self, b: int, t: int) -> int:
        return self.auto_of[b].image[t]

    @classmethod
    def trivial(cls, actor: GroupTable, target: GroupTable) -> "GroupAction":
        ident = GroupHom.identity_map(target)
        return cls(actor, target, (ident,) * actor.order)

    @classmethod
    def from_generator(cls, actor: GroupTable, target: GroupTable,
                       generator: int, auto: GroupHom) -> "GroupAction":
        """Action of a cyclic ``actor`` generated by ``generator`` acting by ``auto``."""
        n = actor.order
        if actor.orders[generator] != n:
            raise GroupError("actor is not cyclic on the given generator")
        table: list[Optional[GroupHom]] = [None] * n
        cur = GroupHom.identity_map(target)
        g = 0
        for _ in range(n):
            table[g] = cur
            cur = auto.compose(cur)
            g = actor.mul[g][generator]
        return cls(actor, target, tuple(table))  # type: ignore[arg-type]


# -- constructors -------------------------------------------------------

def _join(la: str, lb: str) -> str:
    if la == "1":
        return lb
    if lb == "1":
        return la
    return la + lb


def _pair_labels(A: GroupTable, B: GroupTable) -> Optional[tuple[str, ...]]:
    if not (A.labels and B.labels):
        return None
    labels = tuple(_join(la, lb) for la in A.labels for lb in B.labels)
    if len(set(labels)) != len(labels):
        # prime the second factor's generator letters, x -> x'
        primed = ["1" if lb == "1" else "".join(ch + "'" if ch.isalpha() else ch for ch in lb)
                  for lb in B.labels]
        labels = tuple(_join(la, lb) for la in A.labels for lb in primed)
    if len(set(labels)) != len(labels):
        labels = tuple("1" if (la, lb) == ("1", "1") else f"({la},{lb})"
                       for la in A.labels for lb in B.labels)
    return labels


def _power_label(name: str, k: int) -> str:
    return "1" if k == 0 else name if k == 1 else f"{name}^{k}"


def build_cyclic(n: int, gen: str = "x") -> GroupTable:
    if n < 1:
        raise GroupError("cyclic group order must be at least 1")
    mul = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return GroupTable(mul, tuple(_power_label(gen, k) for k in range(n)), f"C{n}")


def elementary_abelian(names: Sequence[str]) -> GroupTable:
    """``C_2^k`` with element index = bitmask over the named generators."""
    k = len(names)
    n = 1 << k
    mul = tuple(tuple(i ^ j for j in range(n)) for i in range(n))
    labels = tuple("".join(names[b] for b in range(k) if (i >> b) & 1) or "1"
                   for i in range(n))
    return GroupTable(mul, labels, f"C2^{k}")


def build_dihedral(two_n: int) -> GroupTable:
    """``D_{2n}``: index ``i`` is ``r^i`` and index ``n + i`` is ``s r^i``."""
    if two_n < 2 or two_n % 2:
        raise GroupError("dihedral order must be even and at least 2")
    n = two_n // 2

    def mul(e: int, i: int, f: int, j: int) -> int:
        k = ((-i if f else i) + j) % n
        return ((e + f) % 2) * n + k

    table = tuple(tuple(mul(x // n, x % n, y // n, y % n) for y in range(two_n))
                  for x in range(two_n))
    labels = tuple(("s" if x >= n else "") + ("" if x % n == 0 else _power_label("r", x % n))
                   or "1" for x in range(two_n))
    return GroupTable(table, labels, f"D{two_n}")


def build_quaternion(four_n: int, gens: tuple[str, str] = ("x", "y")) -> GroupTable:
    """``Q_{4n} = <a, b | a^{2n}, b^4, a^n = b^2, b a b^-1 = a^-1>``.

    Index ``j * 2n + i`` is ``a^i b^j``.
    """
    if four_n < 8 or four_n % 4:
        raise GroupError("quaternion order must be a multiple of 4, at least 8")
    n = four_n // 4
    m = 2 * n

    def mul(i: int, j: int, k: int, l: int) -> int:
        e = (i + (-k if j else k) + (n if j and l else 0)) % m
        return ((j + l) % 2) * m + e

    table = tuple(tuple(mul(x % m, x // m, y % m, y // m) for y in range(four_n))
                  for x in range(four_n))
    a, b = gens
    labels = tuple(_join(_power_label(a, x % m), b if x >= m else "1")
                   for x in range(four_n))
    return GroupTable(table, labels, f"Q{four_n}")


def direct_product(A: GroupTable, B: GroupTable) -> GroupTable:
    nb = B.order
    table = tuple(
        tuple(A.mul[x // nb][y // nb] * nb + B.mul[x % nb][y % nb]
              for y in range(A.order * nb))
        for x in range(A.order * nb))
    return GroupTable(table, _pair_labels(A, B), f"{A.name}x{B.name}")


def semidirect_product(act: GroupAction) -> GroupTable:
    """``(a1, b1)(a2, b2) = (a1 * phi_b1(a2), b1 * b2)``."""
    A, B = act.target, act.actor
    na, nb = A.order, B.order
    imgs = [phi.image for phi in act.auto_of]
    rows = []
    for x in range(na * nb):
        a1, b1 = divmod(x, nb)
        f = imgs[b1]
        row_a = A.mul[a1]
        row_b = B.mul[b1]
        rows.append(tuple(row_a[f[y // nb]] * nb + row_b[y % nb] for y in range(na * nb)))
    return GroupTable(tuple(rows), _pair_labels(A, B), f"{A.name}:{B.name}")


# -- the module actions used for the semidirect product families ---------

MODULE_KINDS = ("Q_C2", "Y_C3", "YQ_C6", "Q_C4", "U_C4", "S_C4", "Y_C6", "F2_C6")

# kind -> (target generator names, actor order, actor generator name,
#          image of each target generator under the actor generator, as name strings)
_MODULES: dict[str, tuple[tuple[str, ...], int, str, tuple[str, ...]]] = {
    "Q_C2": (("a", "b"), 2, "x", ("ab", "b")),
    "Y_C3": (("a", "b"), 3, "c", ("ab", "a")),
    "YQ_C6": (("a", "b", "c", "d"), 6, "x", ("abcd", "bd", "ab", "b")),
    "Q_C4": (("a", "b"), 4, "x", ("ab", "b")),
    "U_C4": (("a", "b", "c"), 4, "x", ("ab", "bc", "c")),
    "S_C4": (("a", "b", "c", "d"), 4, "x", ("ab", "bc", "cd", "d")),
    # C6 acting through its C3 quotient on Y, and trivially on F2
    "Y_C6": (("a", "b"), 6, "x", ("ab", "a")),
    "F2_C6": (("a",), 6, "x", ("a",)),
}


def _word_to_mask(word: str, names: Sequence[str]) -> int:
    mask = 0
    for ch in word:
        mask ^= 1 << names.index(ch)
    return mask


def linear_automorphism(target: GroupTable, generator_images: Sequence[int]) -> GroupHom:
    """Automorphism of an elementary abelian table given the images of ``1 << i``."""
    n = target.order
    img = []
    for t in range(n):
        acc = 0
        for i, im in enumerate(generator_images):
            if (t >> i) & 1:
                acc ^= im
        img.append(acc)
    return GroupHom(target, target, tuple(img))


def module_action(kind: str) -> GroupAction:
    if kind not in _MODULES:
        raise GroupError(f"unknown module kind {kind!r}; expected one of {MODULE_KINDS}")
    names, m, gen, images = _MODULES[kind]
    target = elementary_abelian(names)
    actor = build_cyclic(m, gen)
    auto = linear_automorphism(target, [_word_to_mask(w, names) for w in images])
    return GroupAction.from_generator(actor, target, 1, auto)


def sdp_module(kind: str) -> GroupTable:
    G = semidirect_product(module_action(kind))
    return G


def iterated_family(base_kind: str, depth: int) -> GroupTable:
    """``A x| (A x| ... (A x| C))`` with ``depth`` copies of ``A``.

    Each new copy of ``A`` is acted on through the projection onto the top
    cyclic factor (the index modulo ``|C|``), using the base action.
    """
    if depth < 1:
        raise GroupError("depth must be at least 1")
    act = module_action(base_kind)
    G = semidirect_product(act)
    c = act.actor.order
    for _ in range(depth - 1):
        auto_of = tuple(act.auto_of[g % c] for g in range(G.order))
        G = semidirect_product(GroupAction(G, act.target, auto_of))
    return GroupTable(G.mul, G.labels, f"{base_kind}^{depth}")


# -- queries --------------------------------------------------------------

def element_order(G: GroupTable, g: int) -> int:
    return G.element_order(g)


def centralizer(G: GroupTable, S: Iterable[int]) -> frozenset[int]:
    S = list(S)
    arr = G.array
    if not S:
        return frozenset(range(G.order))
    cols = np.asarray(S, dtype=np.int64)
    ok = np.all(arr[:, cols] == arr[cols, :].T, axis=1)
    return frozenset(int(g) for g in np.nonzero(ok)[0])


def center(G: GroupTable) -> frozenset[int]:
    return centralizer(G, range(G.order))


def fixed_subgroup(act: GroupAction) -> frozenset[int]:
    return frozenset(t for t in range(act.target.order)
                     if all(phi.image[t] == t for phi in act.auto_of))


def is_subgroup(G: GroupTable, S: Iterable[int]) -> bool:
    S = set(S)
    return 0 in S and all(G.mul[a][b] in S for a in S for b in S)


def is_normal(G: GroupTable, S: Iterable[int]) -> bool:
    S = set(S)
    return is_subgroup(G, S) and all(G.conj(g, s) in S for g in range(G.order) for s in S)


__all__ = [
    "Fingerprint",
    "GroupAction",
    "GroupError",
    "GroupHom",
    "GroupTable",
    "MODULE_KINDS",
    "build_cyclic",
    "build_dihedral",
    "build_quaternion",
    "center",
    "centralizer",
    "direct_product",
    "element_order",
    "elementary_abelian",
    "fixed_subgroup",
    "is_normal",
    "is_subgroup",
    "iterated_family",
    "linear_automorphism",
    "module_action",
    "sdp_module",
    "semidirect_product",
]
