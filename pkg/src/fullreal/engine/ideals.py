"""Generator lists for the ideals attached to the standard constructions.

For a semidirect product built by ``semidirect_product(act)`` the element
``(a, b)`` has index ``a * |B| + b``; :func:`target_elem` and
:func:`actor_elem` translate.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional, Sequence

from ..groupring import RingElem
from ..groups import GroupAction, GroupError, GroupTable, centralizer, direct_product, semidirect_product

IDEAL_KINDS = ("V4", "SDP_C3", "SDP_C4", "C6", "PRODUCT")


def target_elem(act: GroupAction, a: int) -> int:
    return a * act.actor.order


def actor_elem(act: GroupAction, b: int) -> int:
    return b


def square_term(G: GroupTable, s: int, t: int) -> RingElem:
    """``1 + s + t + st`` (possibly zero)."""
    return RingElem.of(G, 0, s, t, G.mul[s][t])


def _dedup(elems: Iterable[RingElem]) -> list[RingElem]:
    seen: set[int] = set()
    out = []
    for w in elems:
        if w.bits and w.bits not in seen:
            seen.add(w.bits)
            out.append(w)
    return out


def v4_ideal(G: GroupTable) -> list[RingElem]:
    """``1 + s + t + st`` over all pairs; for ``V4`` this is ``(1 + a + b + ab)``."""
    if not G.is_abelian or G.exponent > 2:
        raise GroupError("expected an elementary abelian 2-group")
    return _dedup(square_term(G, s, t) for s, t in combinations(range(1, G.order), 2))


def _cyclic_generator(act: GroupAction, order: int) -> int:
    B = act.actor
    if B.order != order or B.orders[1] != order:
        raise GroupError(f"actor must be cyclic of order {order} generated by index 1")
    return 1


def _check_elementary(act: GroupAction) -> None:
    A = act.target
    if not A.is_abelian or A.exponent > 2:
        raise GroupError("target must be an elementary abelian 2-group")


def sdp_c3_ideal(act: GroupAction, basis: Optional[Sequence[int]] = None) -> list[RingElem]:
    """``1 + a_i + c + a_i c`` for a basis ``a_i`` of the C3-module.

    ``basis`` holds target indices and defaults to the standard basis.
    """
    _check_elementary(act)
    c = actor_elem(act, _cyclic_generator(act, 3))
    G = semidirect_product(act)
    basis = _basis(act, basis)
    return [square_term(G, target_elem(act, a), c) for a in basis]


def sdp_c4_ideal(act: GroupAction, basis: Optional[Sequence[int]] = None) -> list[RingElem]:
    """``1 + a_i + x + a_i x``, ``1 + a_i + a_j + a_i a_j`` and ``1 + x + x^2 + x^3``.

    ``basis`` defaults to the standard basis vectors moved by the action.
    """
    _check_elementary(act)
    x = actor_elem(act, _cyclic_generator(act, 4))
    G = semidirect_product(act)
    if basis is None:
        gen_auto = act.auto_of[1].image
        basis = [1 << i for i in range(_rank(act.target)) if gen_auto[1 << i] != 1 << i]
    basis = _basis(act, basis)
    gens = [square_term(G, target_elem(act, a), x) for a in basis]
    gens += [square_term(G, target_elem(act, a), target_elem(act, b))
             for a, b in combinations(basis, 2)]
    x2 = G.mul[x][x]
    gens.append(RingElem.of(G, 0, x, x2, G.mul[x2][x]))
    return gens


def c6_ideal(act: GroupAction) -> list[RingElem]:
    """``1 + v + w x^{3e} + v^{x^{3e}} w x^{3e}`` for ``e`` in {0, 1}.

    ``v`` runs over ``A x| <x^3>``, ``w`` over ``A x| <x^2>`` and
    ``v^t = t v t^-1``.
    """
    _check_elementary(act)
    _cyclic_generator(act, 6)
    G = semidirect_product(act)
    nb = 6
    V = [a * nb + k for a in range(act.target.order) for k in (0, 3)]
    W = [a * nb + k for a in range(act.target.order) for k in (0, 2, 4)]
    x3 = 3
    gens = []
    for t in (0, x3):
        for v in V:
            vt = G.conj(t, v)
            for w in W:
                wt = G.mul[w][t]
                gens.append(RingElem.of(G, 0, v, wt, G.mul[vt][wt]))
    return _dedup(gens)


def c2c4_ideal(H: GroupTable) -> list[RingElem]:
    """``1 + u + v + uv`` with at most one of ``u``, ``v`` of order 4.

    ``H`` must be abelian of exponent dividing 4 with at most one cyclic
    factor of order 4.
    """
    if not H.is_abelian or H.exponent not in (1, 2, 4):
        raise GroupError("expected an abelian group of exponent at most 4")
    fours = sum(1 for o in H.orders if o == 4)
    twos = sum(1 for o in H.orders if o == 2)
    if fours and fours != twos + 1:
        raise GroupError("expected C2^L x C4 (a single cyclic factor of order 4)")
    return _dedup(square_term(H, u, v) for u, v in combinations(range(1, H.order), 2)
                  if not (H.orders[u] == 4 and H.orders[v] == 4))


def product_ideal(G: GroupTable, J: Sequence[RingElem], H: GroupTable,
                  K: Sequence[RingElem]) -> tuple[GroupTable, list[RingElem]]:
    """``J``, ``K`` and ``T = {1 + g + h + gh}`` inside ``F2[G x H]``."""
    P = direct_product(G, H)
    nh = H.order
    gens = []
    for w in J:
        gens.append(RingElem.of(P, *(g * nh for g in w.support())))
    for w in K:
        gens.append(RingElem.of(P, *w.support()))
    for g in range(1, G.order):
        for h in range(1, nh):
            gens.append(RingElem.of(P, 0, g * nh, h, g * nh + h))
    return P, _dedup(gens)


def centralizer_ideal(G: GroupTable, V: Iterable[int]) -> list[RingElem]:
    """``1 + s + t + st`` for ``s`` centralizing ``V`` and ``t`` in ``G``."""
    V = list(V)
    sub = G.subgroup_generated(V)
    if any(G.mul[a][b] != G.mul[b][a] for a in sub for b in sub):
        raise GroupError("V must generate an abelian subgroup")
    C = sorted(centralizer(G, V))
    return _dedup(square_term(G, s, t) for s in C for t in range(G.order))


def paper_ideal(kind: str, *args, **kwargs):
    """Dispatch to the builder named by ``kind`` (one of ``IDEAL_KINDS``)."""
    builders = {
        "V4": v4_ideal,
        "SDP_C3": sdp_c3_ideal,
        "SDP_C4": sdp_c4_ideal,
        "C6": c6_ideal,
        "PRODUCT": product_ideal,
    }
    if kind not in builders:
        raise ValueError(f"unknown ideal kind {kind!r}; expected one of {IDEAL_KINDS}")
    return builders[kind](*args, **kwargs)


def _rank(A: GroupTable) -> int:
    return A.order.bit_length() - 1


def _basis(act: GroupAction, basis: Optional[Sequence[int]]) -> list[int]:
    k = _rank(act.target)
    if basis is None:
        return [1 << i for i in range(k)]
    basis = list(basis)
    span = {0}
    for a in basis:
        if not 0 < a < act.target.order or a in span:
            raise GroupError(f"basis element {a} is zero, out of range or dependent")
        span |= {s ^ a for s in span}
    return basis


__all__ = [
    "IDEAL_KINDS",
    "actor_elem",
    "c2c4_ideal",
    "c6_ideal",
    "centralizer_ideal",
    "paper_ideal",
    "product_ideal",
    "sdp_c3_ideal",
    "sdp_c4_ideal",
    "square_term",
    "target_elem",
    "v4_ideal",
]
