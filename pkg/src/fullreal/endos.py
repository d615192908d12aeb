"""Enumerate homomorphisms between Cayley-table groups by backtracking on
generator images."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .groups import GroupError, GroupHom, GroupTable

log = logging.getLogger(__name__)

DEFAULT_CAP = 128


class ResourceError(RuntimeError):
    """A configured size cap would be exceeded."""


@dataclass(frozen=True, eq=False)
class GeneratingSet:
    """Generators plus a spanning tree of the group they generate.

    ``closure_order`` lists ``(element, parent, gen_index)`` with
    ``element = parent * gens[gen_index]``.  Entries are grouped by stage:
    ``stage_ends[k]`` is ``|<gens[:k+1]>|``, and the entries before index
    ``stage_ends[k] - 1`` generate exactly that subgroup.
    """

    group: GroupTable
    gens: tuple[int, ...]
    closure_order: tuple[tuple[int, int, int], ...]
    stage_ends: tuple[int, ...]

    @classmethod
    def from_gens(cls, G: GroupTable, gens: Sequence[int]) -> "GeneratingSet":
        gens = tuple(gens)
        order: list[tuple[int, int, int]] = []
        known = [0]
        seen = {0}
        ends = []
        for k in range(len(gens)):
            frontier = list(known)
            while frontier:
                nxt = []
                for h in frontier:
                    for i in range(k + 1):
                        p = G.mul[h][gens[i]]
                        if p not in seen:
                            seen.add(p)
                            order.append((p, h, i))
                            known.append(p)
                            nxt.append(p)
                frontier = nxt
            ends.append(len(known))
        if len(seen) != G.order:
            raise GroupError("the given elements do not generate the group")
        return cls(G, gens, tuple(order), tuple(ends))


def find_generating_set(G: GroupTable) -> GeneratingSet:
    """Greedy: keep adding the highest-order element outside the current closure."""
    gens: list[int] = []
    closure = frozenset([0])
    while len(closure) < G.order:
        best = max((g for g in range(G.order) if g not in closure),
                   key=lambda g: (G.orders[g], -g))
        gens.append(best)
        closure = G.subgroup_generated(gens)
    return GeneratingSet.from_gens(G, gens)


def _propagate(gs: GeneratingSet, H: GroupTable, images: Sequence[int]) -> list[int]:
    img = [0] * gs.group.order
    for p, h, i in gs.closure_order:
        img[p] = H.mul[img[h]][images[i]]
    return img


def extend_hom(gs: GeneratingSet, H: GroupTable, images: Sequence[int]) -> Optional[GroupHom]:
    """The homomorphism sending ``gs.gens[i]`` to ``images[i]``, if one exists."""
    if len(images) != len(gs.gens):
        raise ValueError("need one image per generator")
    img = _propagate(gs, H, images)
    try:
        return GroupHom(gs.group, H, tuple(img))
    except GroupError:
        return None


class _Search:
    """Depth-first search over generator images with subgroup-wise checks."""

    def __init__(self, gs: GeneratingSet, H: GroupTable):
        self.gs = gs
        self.H = H
        G = gs.group
        self.n = G.order
        gens = gs.gens
        self.candidates = [
            [h for h in range(H.order) if G.orders[g] % H.orders[h] == 0]
            for g in gens
        ]
        # elements of <gens[:k+1]>, and the slice of closure_order added at stage k
        starts = (0,) + tuple(e - 1 for e in gs.stage_ends[:-1])
        self.stage_entries = [gs.closure_order[s:e - 1] for s, e in zip(starts, gs.stage_ends)]
        self.stage_members = []
        members = [0]
        for entries in self.stage_entries:
            old = list(members)
            members = members + [p for p, _, _ in entries]
            self.stage_members.append((old, [p for p, _, _ in entries], list(members)))

    def run(self, first: Optional[Sequence[int]] = None) -> list[tuple[int, ...]]:
        img = [0] * self.n
        images: list[int] = []
        out: list[tuple[int, ...]] = []
        self._descend(0, img, images, out, first)
        return out

    def _descend(self, k: int, img: list[int], images: list[int],
                 out: list[tuple[int, ...]], first: Optional[Sequence[int]]) -> None:
        if k == len(self.gs.gens):
            out.append(tuple(img))
            return
        Gm = self.gs.group.mul
        Hm = self.H.mul
        gens = self.gs.gens
        old, new, members = self.stage_members[k]
        cands = first if (k == 0 and first is not None) else self.candidates[k]
        for c in cands:
            images.append(c)
            for p, h, i in self.stage_entries[k]:
                img[p] = Hm[img[h]][images[i]]
            ok = True
            # old members were already closed under gens[:k]; only gens[k] is new for them
            for h in old:
                if img[Gm[h][gens[k]]] != Hm[img[h]][c]:
                    ok = False
                    break
            if ok:
                for h in new:
                    row = Gm[h]
                    ih = Hm[img[h]]
                    for i in range(k + 1):
                        if img[row[gens[i]]] != ih[images[i]]:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                self._descend(k + 1, img, images, out, first)
            images.pop()


def _search_chunk(args: tuple[GeneratingSet, GroupTable, list[int]]) -> list[tuple[int, ...]]:
    gs, H, first = args
    return _Search(gs, H).run(first)


def enumerate_homs(G: GroupTable, H: GroupTable, cap: int = DEFAULT_CAP,
                   jobs: int = 1, gs: Optional[GeneratingSet] = None) -> list[GroupHom]:
    """All homomorphisms ``G -> H`` in lexicographic order of generator images."""
    if G.order > cap or H.order > cap:
        raise ResourceError(f"group order above the enumeration cap {cap}")
    gs = gs or find_generating_set(G)
    search = _Search(gs, H)
    if jobs > 1 and len(search.candidates[0]) > 1:
        firsts = search.candidates[0]
        chunks = [firsts[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_search_chunk, [(gs, H, c) for c in chunks]))
        tables = [t for part in parts for t in part]
        gen_key = gs.gens
        tables.sort(key=lambda t: tuple(t[g] for g in gen_key))
    else:
        tables = search.run()
    log.debug("%d homomorphisms %s -> %s", len(tables), G.name, H.name)
    # the search only checks generator products; the constructor re-checks all |G|^2
    return [GroupHom(G, H, t) for t in tables]


def enumerate_endos(G: GroupTable, cap: int = DEFAULT_CAP, jobs: int = 1) -> list[GroupHom]:
    return enumerate_homs(G, G, cap=cap, jobs=jobs)


def enumerate_autos(G: GroupTable, cap: int = DEFAULT_CAP, jobs: int = 1) -> list[GroupHom]:
    return [f for f in enumerate_endos(G, cap=cap, jobs=jobs) if f.is_bijective]


__all__ = [
    "DEFAULT_CAP",
    "GeneratingSet",
    "ResourceError",
    "enumerate_autos",
    "enumerate_endos",
    "enumerate_homs",
    "extend_hom",
    "find_generating_set",
]
