"""Bounded case analysis showing that no ideal fully realizes a group.

If ``I`` fully realizes ``G`` then every element ``w`` whose class is a unit
is congruent to some group element, so ``w + g`` lies in ``I`` for some
``g``.  Branching over ``g`` and closing under all endomorphism images
gives a finite tree.  A branch dies when the group stops embedding; an
embedding collapse survives any further enlargement of ``I``, so a tree in
which every branch dies is a proof.
"""

from __future__ import annotations

import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence, Union

from ..endos import enumerate_endos, find_generating_set
from ..gf2 import EchelonBuilder
from ..groupring import (
    Ideal,
    QuotientRing,
    RingElem,
    apply_hom_bits,
    closure_bits,
    is_unit_full_algebra,
    unit_coords,
)
from ..groups import GroupHom, GroupTable

log = logging.getLogger(__name__)

DEFAULT_REFUTE_CAP_DIM = 16
DEFAULT_SEED_LIMIT = 64
DEFAULT_ROOT_TRIES = 16


class LeafReason(str, enum.Enum):
    EMBED_FAIL = "EMBED_FAIL"
    UNITS_EXCEED = "UNITS_EXCEED"
    INVARIANCE_FAIL = "INVARIANCE_FAIL"
    DEPTH_EXHAUSTED = "DEPTH_EXHAUSTED"


@dataclass(frozen=True)
class Leaf:
    reason: LeafReason
    collision: Optional[tuple[int, int]] = None


@dataclass
class RefutationTree:
    root_unit: RingElem
    branches: dict[int, Union["RefutationTree", Leaf]] = field(default_factory=dict)

    def is_proof(self) -> bool:
        return all(b.is_proof() if isinstance(b, RefutationTree)
                   else b.reason != LeafReason.DEPTH_EXHAUSTED
                   for b in self.branches.values())

    def depth(self) -> int:
        return 1 + max((b.depth() for b in self.branches.values()
                        if isinstance(b, RefutationTree)), default=0)

    def leaf_count(self) -> int:
        return sum(b.leaf_count() if isinstance(b, RefutationTree) else 1
                   for b in self.branches.values())

    def to_dict(self) -> dict:
        out = {}
        for g, b in sorted(self.branches.items()):
            if isinstance(b, RefutationTree):
                out[str(g)] = b.to_dict()
            else:
                out[str(g)] = {"leaf": b.reason.value,
                               "collision": list(b.collision) if b.collision else None}
        return {"root_unit": self.root_unit.support(),
                "root_unit_text": str(self.root_unit),
                "branches": out}

    def render(self, indent: str = "") -> list[str]:
        G = self.root_unit.group
        lines = [f"{indent}{self.root_unit} is congruent to:"]
        for g, b in sorted(self.branches.items()):
            if isinstance(b, RefutationTree):
                lines.append(f"{indent}  {G.label(g)}:")
                lines.extend(b.render(indent + "    "))
            else:
                pair = ""
                if b.collision:
                    pair = f" ({G.label(b.collision[0])} = {G.label(b.collision[1])})"
                lines.append(f"{indent}  {G.label(g)}: {b.reason.value}{pair}")
        return lines


def default_seeds(G: GroupTable, limit: Optional[int] = None) -> list[RingElem]:
    """Units ``1 + g + h`` of ``F2[G]``, ordered by support (the first ``limit``)."""
    out = []
    for g, h in combinations(range(1, G.order), 2):
        if limit is not None and len(out) >= limit:
            break
        w = RingElem.of(G, 0, g, h)
        if is_unit_full_algebra(G, w):
            out.append(w)
    return out


def _collision(b: EchelonBuilder, n: int) -> Optional[tuple[int, int]]:
    seen: dict[int, int] = {}
    for g in range(n):
        r = b.reduce(1 << g)
        if r in seen:
            return seen[r], g
        seen[r] = g
    return None


class _Refuter:
    def __init__(self, G: GroupTable, seeds: Sequence[int], endo_images: Sequence[Sequence[int]],
                 max_depth: int, cap_dim: int):
        self.G = G
        self.seeds = list(seeds)
        self.endo_images = [tuple(t) for t in endo_images]
        self.max_depth = max_depth
        self.cap_dim = cap_dim
        self.group_gens = find_generating_set(G).gens if G.order > 1 else ()

    def close(self, b: EchelonBuilder, vs: Sequence[int]) -> EchelonBuilder:
        return closure_bits(self.G, vs, EchelonBuilder(b.n, b.rows), self.group_gens)

    def pick_seed(self, J: EchelonBuilder) -> Optional[int]:
        """Next element whose class is a unit not already pinned to ``G``.

        Listed seeds come first.  Once they are used up and the quotient is
        small, an interloper unit of the quotient is taken instead; if there
        is none, ``J`` itself fully realizes ``G`` and ``None`` is returned.
        """
        n = self.G.order
        reps = {J.reduce(1 << g) for g in range(n)}
        for w in self.seeds:
            if J.reduce(w) not in reps:
                return w
        if n - J.rank > self.cap_dim:
            return None
        Q = QuotientRing(Ideal(self.G, (), J.freeze()))
        pinned = set(Q.group_coords)
        for u in unit_coords(Q, self.cap_dim):
            if u not in pinned:
                return Q.bits_of_coords(u)
        log.info("found an ideal that fully realizes %s; no refutation exists", self.G.name)
        return None

    def branch(self, J: EchelonBuilder, w: int, g: int, depth: int):
        h = w ^ (1 << g)
        Jg = self.close(J, [h])
        col = _collision(Jg, self.G.order)
        if col:
            return Leaf(LeafReason.EMBED_FAIL, col)
        Js = self.close(Jg, [apply_hom_bits(img, h) for img in self.endo_images])
        col = _collision(Js, self.G.order)
        if col:
            return Leaf(LeafReason.INVARIANCE_FAIL, col)
        if depth >= self.max_depth:
            return Leaf(LeafReason.DEPTH_EXHAUSTED)
        return self.node(Js, depth + 1)

    def node(self, J: EchelonBuilder, depth: int) -> Union[RefutationTree, Leaf]:
        w = self.pick_seed(J)
        if w is None:
            return Leaf(LeafReason.DEPTH_EXHAUSTED)
        tree = RefutationTree(RingElem(self.G, w))
        for g in range(self.G.order):
            sub = self.branch(J, w, g, depth)
            if isinstance(sub, Leaf) and sub.reason == LeafReason.DEPTH_EXHAUSTED:
                return sub
            tree.branches[g] = sub
        return tree


def _root_branch(args):
    ref, w, g = args
    return ref.branch(EchelonBuilder(ref.G.order), w, g, 1)


def refute_full(G: GroupTable, seed_units: Optional[Sequence[RingElem]] = None,
                max_depth: int = 1, endos: Optional[Sequence[GroupHom]] = None,
                cap_dim: int = DEFAULT_REFUTE_CAP_DIM, jobs: int = 1,
                root_tries: int = DEFAULT_ROOT_TRIES) -> Optional[RefutationTree]:
    """A complete refutation tree of depth at most ``max_depth``, or ``None``.

    ``None`` means inconclusive.  Endomorphism images of every branch
    hypothesis are added before testing, since a fully realizing ideal must
    contain them.  The first ``root_tries`` seeds are each tried at the root.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    if seed_units is None:
        seed_units = default_seeds(G, DEFAULT_SEED_LIMIT)
    for w in seed_units:
        if w.group != G:
            raise ValueError("seed over a different group")
        if not is_unit_full_algebra(G, w):
            raise ValueError(f"seed {w} is not a unit of the group algebra")
    if endos is None:
        endos = enumerate_endos(G, jobs=jobs)
    seeds = [w.bits for w in seed_units]
    images = [f.image for f in endos]
    # the root tries each listed seed in turn; deeper nodes take the first useful one
    for k in range(max(1, min(len(seeds), root_tries))):
        ref = _Refuter(G, seeds[k:] + seeds[:k], images, max_depth, cap_dim)
        result = _run(ref, jobs)
        if result is not None:
            assert result.is_proof()
            return result
    return None


def _run(ref: _Refuter, jobs: int) -> Optional[RefutationTree]:
    G = ref.G
    if jobs <= 1:
        result = ref.node(EchelonBuilder(G.order), 1)
        return None if isinstance(result, Leaf) else result
    w = ref.pick_seed(EchelonBuilder(G.order))
    if w is None:
        return None
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        subs = list(ex.map(_root_branch, [(ref, w, g) for g in range(G.order)]))
    if any(isinstance(s, Leaf) and s.reason == LeafReason.DEPTH_EXHAUSTED for s in subs):
        return None
    return RefutationTree(RingElem(G, w), dict(enumerate(subs)))


def verify_refutation(G: GroupTable, doc: dict, endo_images: Sequence[Sequence[int]]) -> list[str]:
    """Replay a refutation document.

    Every listed map must be an endomorphism; completeness of the list is
    not needed, since a fully realizing ideal contains the images under any
    endomorphism.  Each node's unit must be a unit modulo the ideal
    accumulated above it, every group element must have a branch, and every
    leaf must carry a real collision.
    """
    problems: list[str] = []
    imgs = []
    for t in endo_images:
        try:
            imgs.append(GroupHom(G, G, tuple(t)).image)
        except ValueError as exc:
            problems.append(f"listed map is not an endomorphism: {exc}")
    gens = find_generating_set(G).gens if G.order > 1 else ()

    def close(b: EchelonBuilder, vs) -> EchelonBuilder:
        return closure_bits(G, vs, EchelonBuilder(b.n, b.rows), gens)

    def walk(node: dict, J: EchelonBuilder, path: str) -> None:
        w = RingElem.of(G, *node["root_unit"])
        Q = QuotientRing(Ideal(G, (), J.freeze()))
        if Q.inverse_coords(Q.coords(w)) is None:
            problems.append(f"{path}: {w} is not a unit modulo the branch ideal")
        if sorted(int(k) for k in node["branches"]) != list(range(G.order)):
            problems.append(f"{path}: branches do not cover the group")
        for key, sub in node["branches"].items():
            g = int(key)
            h = w.bits ^ (1 << g)
            Jg = close(J, [h])
            here = f"{path}/{G.label(g)}"
            if "leaf" in sub:
                reason = sub["leaf"]
                target = Jg if reason == LeafReason.EMBED_FAIL.value else None
                if reason == LeafReason.INVARIANCE_FAIL.value:
                    target = close(Jg, [apply_hom_bits(img, h) for img in imgs])
                if target is None:
                    problems.append(f"{here}: leaf {reason} is not a proof step")
                    continue
                pair = sub.get("collision")
                if not pair or pair[0] == pair[1] or target.reduce(1 << pair[0]) != target.reduce(1 << pair[1]):
                    problems.append(f"{here}: recorded collision does not hold")
            else:
                Js = close(Jg, [apply_hom_bits(img, h) for img in imgs])
                walk(sub, Js, here)

    walk(doc, EchelonBuilder(G.order), "root")
    return problems


__all__ = [
    "DEFAULT_REFUTE_CAP_DIM",
    "DEFAULT_ROOT_TRIES",
    "DEFAULT_SEED_LIMIT",
    "Leaf",
    "LeafReason",
    "RefutationTree",
    "default_seeds",
    "refute_full",
    "verify_refutation",
]
