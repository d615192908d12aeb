"""Certificates for "the ideal I fully realizes G".

An ideal fully realizes ``G`` when ``G`` embeds in ``F2[G]/I``, the unit
group of the quotient is exactly the image of ``G``, and ``I`` is mapped
into itself by the linear extension of every endomorphism of ``G``.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..endos import enumerate_endos
from ..gf2 import bits_of
from ..groupring import (
    DEFAULT_CAP_DIM,
    Ideal,
    RingElem,
    apply_hom_bits,
    embeds,
    ideal_closure,
    quotient,
    unit_coords,
)
from ..groups import Fingerprint, GroupHom, GroupTable

log = logging.getLogger(__name__)

SCHEMA = 1


class Verdict(str, enum.Enum):
    FULLY_REALIZES = "FULLY_REALIZES"
    REALIZES_NOT_INVARIANT = "REALIZES_NOT_INVARIANT"
    NOT_REALIZED = "NOT_REALIZED"
    NOT_EMBEDDED = "NOT_EMBEDDED"


@dataclass(frozen=True)
class InvarianceViolation:
    endo: GroupHom
    generator: RingElem
    image: RingElem


def check_invariance(ideal: Ideal, endos: Sequence[GroupHom]) -> tuple[bool, Optional[InvarianceViolation]]:
    """Whether every endomorphism maps the ideal into itself.

    The linear extension of a group endomorphism is a ring map, so testing
    the generators is enough.  When the ideal has fewer basis rows than
    generators the rows are tested instead and a violating generator is
    located afterwards.  The first violating endomorphism in list order is
    reported.
    """
    G = ideal.group
    red = [ideal.basis.reduce_bits(1 << g) for g in range(G.order)]
    gens = [w.bits for w in ideal.generators if w.bits]
    probes = list(ideal.basis.rows) if len(ideal.basis.rows) < len(gens) else gens
    for phi in endos:
        if phi.domain != G or phi.codomain != G:
            raise ValueError("not an endomorphism of the ideal's group")
        img = phi.image
        if all(_reduced_image(red, img, v) == 0 for v in probes):
            continue
        for w in ideal.generators:
            if _reduced_image(red, img, w.bits):
                return False, InvarianceViolation(phi, w, RingElem(G, apply_hom_bits(img, w.bits)))
        raise AssertionError("basis row escapes but no generator does")
    return True, None


def _reduced_image(red: Sequence[int], image: Sequence[int], v: int) -> int:
    out = 0
    for g in bits_of(v):
        out ^= red[image[g]]
    return out


@dataclass
class Certificate:
    group: GroupTable
    ideal_generators: tuple[RingElem, ...]
    quotient_dim: int
    embeds: bool
    collision: Optional[tuple[int, int]]
    unit_count: int
    units_are_group: bool
    interloper: Optional[RingElem]
    invariant: bool
    violation: Optional[InvarianceViolation]
    unit_inverses: list[tuple[RingElem, RingElem]] = field(default_factory=list)
    endo_count: int = 0
    recipe: str = ""

    @property
    def fingerprint(self) -> Fingerprint:
        return self.group.fingerprint()

    @property
    def verdict(self) -> Verdict:
        return verdict_of(self.embeds, self.units_are_group, self.unit_count,
                          self.group.order, self.invariant)

    def to_dict(self, include_table: bool = True) -> dict:
        G = self.group
        doc: dict = {
            "schema": SCHEMA,
            "kind": "certificate",
            "recipe": self.recipe,
            "group_fingerprint": self.fingerprint.as_dict(),
            "ideal_generators": [w.support() for w in self.ideal_generators],
            "ideal_generators_text": [str(w) for w in self.ideal_generators],
            "quotient_dim": self.quotient_dim,
            "embeds": self.embeds,
            "collision": list(self.collision) if self.collision else None,
            "unit_count": self.unit_count,
            "units_are_group": self.units_are_group,
            "interloper": self.interloper.support() if self.interloper is not None else None,
            "invariant": self.invariant,
            "endo_count": self.endo_count,
            "violation": None,
            "unit_inverses": [[u.support(), v.support()] for u, v in self.unit_inverses],
            "verdict": self.verdict.value,
        }
        if self.violation is not None:
            doc["violation"] = {
                "endo_image": list(self.violation.endo.image),
                "generator": self.violation.generator.support(),
                "image": self.violation.image.support(),
                "text": f"{self.violation.generator} -> {self.violation.image}",
            }
        if include_table:
            doc["group_table"] = [list(r) for r in G.mul]
            doc["labels"] = list(G.labels) if G.labels else None
        return doc


def verdict_of(embeds: bool, units_are_group: bool, unit_count: int,
               order: int, invariant: bool) -> Verdict:
    if not embeds:
        return Verdict.NOT_EMBEDDED
    if not (units_are_group and unit_count == order):
        return Verdict.NOT_REALIZED
    if not invariant:
        return Verdict.REALIZES_NOT_INVARIANT
    return Verdict.FULLY_REALIZES


def check_full(G: GroupTable, gens: Sequence[RingElem],
               endos: Optional[Sequence[GroupHom]] = None,
               cap_dim: int = DEFAULT_CAP_DIM, jobs: int = 1,
               recipe: str = "") -> Certificate:
    ideal = ideal_closure(G, gens)
    Q = quotient(ideal)
    ok_embed, collision = embeds(ideal)

    units = unit_coords(Q, cap_dim)
    image = {}
    for g, c in enumerate(Q.group_coords):
        image.setdefault(c, g)
    interloper = next((u for u in units if u not in image), None)
    inverses = []
    for u in units:
        if u in image:
            v = Q.group_coords[G.inv[image[u]]]
        else:
            v = Q.inverse_coords(u)
            assert v is not None
        inverses.append((Q.elem(u), Q.elem(v)))

    if endos is None:
        endos = enumerate_endos(G, jobs=jobs)
    invariant, violation = check_invariance(ideal, endos)
    cert = Certificate(
        group=G,
        ideal_generators=tuple(gens),
        quotient_dim=Q.dim,
        embeds=ok_embed,
        collision=collision,
        unit_count=len(units),
        units_are_group=interloper is None,
        interloper=None if interloper is None else Q.elem(interloper),
        invariant=invariant,
        violation=violation,
        unit_inverses=inverses,
        endo_count=len(endos),
        recipe=recipe,
    )
    log.info("%s: dim %d, %d units, verdict %s", recipe or G.name, Q.dim, len(units), cert.verdict.value)
    return cert


def verify_certificate(doc: dict) -> list[str]:
    """Re-check every witness recorded in a certificate document.

    Needs only the stored table and generators: the ideal closure is
    recomputed, but no unit census or endomorphism search is repeated.
    Returns a list of problems; an empty list means the document checks out.
    """
    problems: list[str] = []
    if doc.get("schema") != SCHEMA:
        return [f"unsupported schema {doc.get('schema')!r}"]
    labels = doc.get("labels")
    G = GroupTable(tuple(tuple(r) for r in doc["group_table"]),
                   tuple(labels) if labels else None)
    if G.fingerprint().as_dict() != doc["group_fingerprint"]:
        problems.append("fingerprint does not match the stored table")
    gens = [RingElem.of(G, *s) for s in doc["ideal_generators"]]
    ideal = ideal_closure(G, gens)
    Q = quotient(ideal)
    if Q.dim != doc["quotient_dim"]:
        problems.append(f"quotient dimension is {Q.dim}, document says {doc['quotient_dim']}")

    reps = [ideal.basis.reduce_bits(1 << g) for g in range(G.order)]
    if doc["embeds"]:
        if len(set(reps)) != G.order:
            problems.append("document claims an embedding but two elements collide")
    else:
        pair = doc.get("collision")
        if not pair or pair[0] == pair[1] or reps[pair[0]] != reps[pair[1]]:
            problems.append("collision witness does not collide")

    rep_set = set(reps)
    for u_s, v_s in doc["unit_inverses"]:
        u = RingElem.of(G, *u_s)
        v = RingElem.of(G, *v_s)
        one = reps[0]
        if Q.rep(u * v).bits != one or Q.rep(v * u).bits != one:
            problems.append(f"inverse witness fails for {u}")
        if doc["units_are_group"] and Q.rep(u).bits not in rep_set:
            problems.append(f"listed unit {u} is not congruent to a group element")
    if len(doc["unit_inverses"]) != doc["unit_count"]:
        problems.append("unit_count differs from the number of inverse witnesses")
    if not doc["units_are_group"]:
        inter = doc.get("interloper")
        if inter is None:
            problems.append("missing interloper witness")
        else:
            u = RingElem.of(G, *inter)
            if Q.rep(u).bits in rep_set:
                problems.append("interloper is congruent to a group element")
            if not any(sorted(pair[0]) == sorted(inter) for pair in doc["unit_inverses"]):
                problems.append("interloper has no inverse witness")

    viol = doc.get("violation")
    if doc["invariant"]:
        if viol is not None:
            problems.append("invariant certificate carries a violation")
    elif viol is None:
        problems.append("missing invariance violation witness")
    else:
        try:
            phi = GroupHom(G, G, tuple(viol["endo_image"]))
        except ValueError as exc:
            problems.append(f"violating map is not an endomorphism: {exc}")
        else:
            w = RingElem.of(G, *viol["generator"])
            if w.bits not in {x.bits for x in gens}:
                problems.append("violating element is not an ideal generator")
            img = apply_hom_bits(phi.image, w.bits)
            if sorted(bits_of(img)) != sorted(viol["image"]):
                problems.append("recorded image differs from the recomputed image")
            if ideal.contains(img):
                problems.append("recorded image lies in the ideal")

    expected = verdict_of(doc["embeds"], doc["units_are_group"], doc["unit_count"],
                          G.order, doc["invariant"]).value
    if doc["verdict"] != expected:
        problems.append(f"verdict {doc['verdict']} disagrees with its conditions ({expected})")
    return problems


__all__ = [
    "Certificate",
    "InvarianceViolation",
    "SCHEMA",
    "Verdict",
    "check_full",
    "check_invariance",
    "verdict_of",
    "verify_certificate",
]
