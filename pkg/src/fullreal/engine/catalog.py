"""Named reproduction cases with their expected outcomes.

Expected verdicts are recorded here and nowhere else in the engine.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from ..endos import enumerate_endos
from ..groupring import DEFAULT_CAP_DIM, RingElem
from ..groups import (
    GroupAction,
    GroupHom,
    GroupTable,
    build_cyclic,
    build_dihedral,
    build_quaternion,
    elementary_abelian,
    module_action,
    semidirect_product,
)
from .certificate import Verdict, check_full
from .ideals import c6_ideal, sdp_c3_ideal, sdp_c4_ideal, v4_ideal
from .matrices import verify_matrix_decomposition
from .refute import refute_full
from .witness import self_centralizing_witness

REFUTED = "REFUTED"
WITNESS = "WITNESS"
ALL_HOLD = "ALL_HOLD"


@dataclass
class CaseResult:
    name: str
    expected: str
    observed: str
    seconds: float = 0.0
    details: list[str] = field(default_factory=list)
    payload: Any = None

    @property
    def passed(self) -> bool:
        return self.expected == self.observed

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "observed": self.observed,
                "passed": self.passed, "seconds": round(self.seconds, 3), "details": self.details}


@dataclass(frozen=True)
class _Options:
    jobs: int = 1
    cap_dim: int = DEFAULT_CAP_DIM


def c4_sdp_c4() -> GroupTable:
    """``C4 x| C4`` with the generator acting by inversion."""
    A = build_cyclic(4, "a")
    inv = GroupHom(A, A, tuple((-i) % 4 for i in range(4)))
    return semidirect_product(GroupAction.from_generator(build_cyclic(4, "x"), A, 1, inv))


def _cert(G: GroupTable, gens: list[RingElem], opt: _Options, recipe: str):
    cert = check_full(G, gens, cap_dim=opt.cap_dim, jobs=opt.jobs, recipe=recipe)
    details = [f"order {G.order}, {cert.endo_count} endomorphisms, quotient dim {cert.quotient_dim}, "
               f"{cert.unit_count} units"]
    return cert.verdict.value, details, cert


def _case_v4(opt: _Options):
    G = elementary_abelian("ab")
    return _cert(G, v4_ideal(G), opt, "product(cyclic:2,cyclic:2)")


def _case_a4(opt: _Options):
    act = module_action("Y_C3")
    u = 1
    basis = [u, act.act(1, u)]
    return _cert(semidirect_product(act), sdp_c3_ideal(act, basis), opt, "sdp:Y_C3")


def _case_q8(opt: _Options):
    Q = build_quaternion(8)
    x, y = Q.index_of("x"), Q.index_of("y")
    endos = enumerate_endos(Q)
    details = []
    verdicts = {}
    certs = {}
    for u in range(Q.order):
        c = check_full(Q, [RingElem.of(Q, 0, x, y, u)], endos=endos, cap_dim=opt.cap_dim)
        verdicts[u] = c.verdict
        certs[Q.label(u)] = c
        line = f"u = {Q.label(u)}: {c.verdict.value}"
        if c.violation is not None and c.embeds:
            f = c.violation.endo
            line += (f" (x -> {Q.label(f(x))}, y -> {Q.label(f(y))} sends "
                     f"{c.violation.generator} to {c.violation.image})")
        details.append(line)
    xy = Q.mul[x][y]
    cxy = certs[Q.label(xy)]
    witness_ok = (
        cxy.violation is not None
        and cxy.violation.endo(x) == x and cxy.violation.endo(y) == xy
        and cxy.violation.image == RingElem.parse(Q, "1+x+xy+x^2y")
    )
    ok = (all(v != Verdict.FULLY_REALIZES for v in verdicts.values())
          and verdicts[xy] == Verdict.REALIZES_NOT_INVARIANT and witness_ok)
    return ("NONE_FULLY" if ok else "MISMATCH"), details, certs


def _case_16_3(opt: _Options):
    act = module_action("Q_C4")
    return _cert(semidirect_product(act), sdp_c4_ideal(act), opt, "sdp:Q_C4")


def _refute(G: GroupTable, depth: int, opt: _Options):
    tree = refute_full(G, max_depth=depth, jobs=opt.jobs)
    if tree is None:
        return "INCONCLUSIVE", [f"no proof up to depth {depth}"], None
    return REFUTED, [f"proof of depth {tree.depth()} with {tree.leaf_count()} leaves"], tree


def _case_32_6(opt: _Options):
    return _refute(semidirect_product(module_action("U_C4")), 2, opt)


def _case_c4c4(opt: _Options):
    return _refute(c4_sdp_c4(), 2, opt)


def _case_d8(opt: _Options):
    return _refute(build_dihedral(8), 2, opt)


def _case_64_32(opt: _Options):
    G = semidirect_product(module_action("S_C4"))
    g = self_centralizing_witness(G, 8)
    if g is None:
        return "NO_WITNESS", ["no self-centralizing element of order at least 8"], None
    return WITNESS, [
        f"{G.label(g)} has order {G.orders[g]} and centralizer <{G.label(g)}>",
        "not realizable in characteristic 2 by the cited external criterion "
        "(only the witness is checked here)",
    ], g


def _c6(kind: str, recipe: str):
    def run(opt: _Options):
        act = module_action(kind)
        return _cert(semidirect_product(act), c6_ideal(act), opt, recipe)
    return run


def _case_matrix(opt: _Options):
    reports = [verify_matrix_decomposition(n) for n in range(3, 11)]
    details = [f"n = {r.n}: A + B = I {r.sum_is_identity}, ranks {r.rank_a}/{r.rank_b}, "
               f"AB = I {r.product_is_identity}" for r in reports]
    return (ALL_HOLD if all(r.ok for r in reports) else "FAILED"), details, reports


_CASES: dict[str, tuple[str, str, Callable[[_Options], tuple]]] = {
    "V4": ("V4 with (1+a+b+ab)", Verdict.FULLY_REALIZES.value, _case_v4),
    "A4": ("A4 = F4 x| C3 with the orbit basis", Verdict.FULLY_REALIZES.value, _case_a4),
    "Q8_ALL_U": ("Q8 with (1+x+y+u) for every u", "NONE_FULLY", _case_q8),
    "SG_16_3": ("Q x| C4", Verdict.FULLY_REALIZES.value, _case_16_3),
    "SG_32_6_REFUTE": ("U x| C4, no fully realizing ideal", REFUTED, _case_32_6),
    "SG_64_32_WITNESS": ("S x| C4, self-centralizing element of order 8", WITNESS, _case_64_32),
    "SG_96_70": ("(Y (x) Q) x| C6", Verdict.FULLY_REALIZES.value, _c6("YQ_C6", "sdp:YQ_C6")),
    "C2xC6": ("F2 x| C6 (trivial action)", Verdict.FULLY_REALIZES.value, _c6("F2_C6", "sdp:F2_C6")),
    "C2xA4": ("Y x| C6 (through C3)", Verdict.FULLY_REALIZES.value, _c6("Y_C6", "sdp:Y_C6")),
    "C4sdpC4": ("C4 x| C4 by inversion, no fully realizing ideal", REFUTED, _case_c4c4),
    "MATRIX_N3_N10": ("sums of two invertible matrices, 3 <= n <= 10", ALL_HOLD, _case_matrix),
    "D8_REFUTE": ("D8, no fully realizing ideal", REFUTED, _case_d8),
}

CASE_NAMES = tuple(_CASES)


def describe(name: str) -> str:
    return _CASES[name][0]


def expected_outcome(name: str) -> str:
    return _CASES[name][1]


def run_paper_case(name: str, jobs: int = 1, cap_dim: int = DEFAULT_CAP_DIM) -> CaseResult:
    if name not in _CASES:
        raise KeyError(f"unknown case {name!r}; known cases: {', '.join(CASE_NAMES)}")
    _, expected, fn = _CASES[name]
    t = time.perf_counter()
    observed, details, payload = fn(_Options(jobs=jobs, cap_dim=cap_dim))
    return CaseResult(name, expected, observed, time.perf_counter() - t, details, payload)


def run_all(names: Optional[list[str]] = None, jobs: int = 1,
            cap_dim: int = DEFAULT_CAP_DIM) -> list[CaseResult]:
    return [run_paper_case(n, jobs=jobs, cap_dim=cap_dim) for n in (names or CASE_NAMES)]


__all__ = [
    "ALL_HOLD",
    "CASE_NAMES",
    "CaseResult",
    "REFUTED",
    "WITNESS",
    "c4_sdp_c4",
    "describe",
    "expected_outcome",
    "run_all",
    "run_paper_case",
]
