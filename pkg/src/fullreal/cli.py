"""Command-line front end.

Group recipes::

    cyclic:n  dihedral:2n  quaternion:4n  sdp:KIND  file:PATH
    product(EXPR,EXPR)  iterate(KIND,DEPTH)

Ideal recipes for ``check``::

    builtin:V4 | builtin:SDP_C3 | builtin:SDP_C4 | builtin:C6   (the last three need sdp:KIND)
    centralizer:g,h,...    zero    file:PATH    "1+x+y+xy;1+x^2"
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .endos import ResourceError, enumerate_endos
from .groupring import DEFAULT_CAP_DIM, RingElem, parse_ideal_text, read_ideal_file
from .groups import (
    MODULE_KINDS,
    GroupAction,
    GroupError,
    GroupTable,
    build_cyclic,
    build_dihedral,
    build_quaternion,
    direct_product,
    iterated_family,
    module_action,
    semidirect_product,
)
from .engine import (
    CASE_NAMES,
    centralizer_ideal,
    check_full,
    default_seeds,
    refute_full,
    run_paper_case,
    verify_certificate,
    verify_refutation,
)
from .engine.certificate import SCHEMA, Verdict
from .engine.ideals import c6_ideal, sdp_c3_ideal, sdp_c4_ideal, v4_ideal
from .engine.refute import DEFAULT_REFUTE_CAP_DIM, DEFAULT_SEED_LIMIT

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class RecipeError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}\n  {text}\n  {' ' * pos}^")
        self.pos = pos


@dataclass
class Built:
    group: GroupTable
    action: Optional[GroupAction] = None
    recipe: str = ""


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str, pos: Optional[int] = None):
        raise RecipeError(msg, self.text, self.pos if pos is None else pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def word(self) -> str:
        start = self.pos
        while self.peek() and (self.peek().isalnum() or self.peek() == "_"):
            self.pos += 1
        if start == self.pos:
            self.error("expected a name")
        return self.text[start:self.pos]

    def number(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a number")
        return int(self.text[start:self.pos])

    def kind(self) -> str:
        start = self.pos
        k = self.word()
        if k not in MODULE_KINDS:
            self.error(f"unknown module kind {k!r} (known: {', '.join(MODULE_KINDS)})", start)
        return k

    def expr(self) -> Built:
        start = self.pos
        head = self.word()
        if head == "product":
            self.expect("(")
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect(")")
            return Built(direct_product(a.group, b.group))
        if head == "iterate":
            self.expect("(")
            k = self.kind()
            self.expect(",")
            d = self.number()
            self.expect(")")
            return Built(self._wrap(lambda: iterated_family(k, d), start))
        self.expect(":")
        if head == "file":
            path = self.text[self.pos:]
            self.pos = len(self.text)
            return Built(self._wrap(lambda: GroupTable.load(path), start))
        if head == "sdp":
            k = self.kind()
            act = module_action(k)
            return Built(semidirect_product(act), act)
        builders = {"cyclic": build_cyclic, "dihedral": build_dihedral, "quaternion": build_quaternion}
        if head not in builders:
            self.error(f"unknown constructor {head!r}", start)
        n = self.number()
        return Built(self._wrap(lambda: builders[head](n), start))

    def _wrap(self, fn, pos: int):
        try:
            return fn()
        except (GroupError, OSError) as exc:
            self.error(str(exc), pos)

    def parse(self) -> Built:
        b = self.expr()
        if self.pos != len(self.text):
            self.error("unexpected trailing text")
        b.recipe = self.text
        return b


def parse_group(text: str) -> Built:
    return _Parser(text.strip()).parse()


def build_ideal(built: Built, text: str) -> list[RingElem]:
    G, act = built.group, built.action
    text = text.strip()
    if text == "zero":
        return []
    if text.startswith("file:"):
        return read_ideal_file(G, text[5:])
    if text.startswith("centralizer:"):
        items = [t.strip() for t in text[12:].split(",") if t.strip()]
        return centralizer_ideal(G, [G.index_of(t) for t in items])
    if text.startswith("builtin:"):
        kind = text[len("builtin:"):]
        if kind == "V4":
            return v4_ideal(G)
        builders = {"SDP_C3": sdp_c3_ideal, "SDP_C4": sdp_c4_ideal, "C6": c6_ideal}
        if kind not in builders:
            raise ValueError(f"unknown ideal kind {kind!r}; expected V4, SDP_C3, SDP_C4 or C6")
        if act is None:
            raise ValueError(f"builtin:{kind} needs a group given as sdp:KIND")
        return builders[kind](act)
    return parse_ideal_text(G, text.replace(";", "\n"))


def _emit(doc: dict, args, human: Sequence[str]) -> None:
    if args.out:
        Path(args.out).write_text(json.dumps(doc, indent=1) + "\n")
    if args.json:
        print(json.dumps(doc, indent=1))
    else:
        print("\n".join(human))


def cmd_group(args) -> int:
    built = parse_group(args.expr)
    G = built.group
    if args.out:
        G.save(args.out)
    fp = G.fingerprint()
    if args.json:
        print(json.dumps({"schema": SCHEMA, "recipe": built.recipe, **fp.as_dict()}, indent=1))
    elif args.info or not args.out:
        hist = ", ".join(f"{k}: {v}" for k, v in fp.order_histogram)
        print(f"order {fp.order}")
        print(f"abelian {'yes' if fp.abelian else 'no'}")
        print(f"center size {fp.center_size}")
        print(f"exponent {fp.exponent}")
        print(f"element orders {{{hist}}}")
    return EXIT_OK


def cmd_check(args) -> int:
    built = parse_group(args.group)
    gens = build_ideal(built, args.ideal)
    cert = check_full(built.group, gens, cap_dim=args.cap_dim, jobs=args.jobs, recipe=built.recipe)
    G = built.group
    lines = [
        f"group {built.recipe}: order {G.order}",
        f"ideal generators: {', '.join(str(w) for w in gens) or '(none)'}",
        f"quotient dim {cert.quotient_dim}",
        f"embeds: {cert.embeds}" + (f" ({G.label(cert.collision[0])} = {G.label(cert.collision[1])})"
                                    if cert.collision else ""),
        f"units: {cert.unit_count}, all congruent to group elements: {cert.units_are_group}"
        + (f" (interloper {cert.interloper})" if cert.interloper is not None else ""),
        f"invariant under {cert.endo_count} endomorphisms: {cert.invariant}",
    ]
    if cert.violation is not None:
        f = cert.violation.endo
        shown = ", ".join(f"{G.label(g)} -> {G.label(f(g))}" for g in _gen_labels(G))
        lines.append(f"  violation: [{shown}] sends {cert.violation.generator} to {cert.violation.image}")
    if args.full:
        lines.append("units and inverses:")
        lines.extend(f"  {u} * {v} = 1" for u, v in cert.unit_inverses)
    lines.append(f"verdict {cert.verdict.value}")
    _emit(cert.to_dict(), args, lines)
    return EXIT_OK if cert.verdict == Verdict.FULLY_REALIZES else EXIT_FAIL


def _gen_labels(G: GroupTable) -> list[int]:
    from .endos import find_generating_set
    return list(find_generating_set(G).gens) if G.order > 1 else []


def cmd_refute(args) -> int:
    built = parse_group(args.group)
    G = built.group
    seeds = default_seeds(G, DEFAULT_SEED_LIMIT)
    if args.seed is not None:
        random.Random(args.seed).shuffle(seeds)
    endos = enumerate_endos(G, jobs=args.jobs)
    tree = refute_full(G, seeds, max_depth=args.depth, endos=endos,
                       cap_dim=args.cap_dim or DEFAULT_REFUTE_CAP_DIM, jobs=args.jobs)
    doc = {"schema": SCHEMA, "kind": "refutation", "recipe": built.recipe,
           "depth": args.depth, "proof": tree is not None}
    if tree is None:
        lines = [f"inconclusive: no refutation of {built.recipe} up to depth {args.depth}"]
    else:
        doc["tree"] = tree.to_dict()
        doc["group_table"] = [list(r) for r in G.mul]
        doc["labels"] = list(G.labels) if G.labels else None
        doc["endo_images"] = [list(f.image) for f in endos]
        lines = [f"proof: {built.recipe} is not fully realizable "
                 f"(depth {tree.depth()}, {tree.leaf_count()} leaves, "
                 f"{len(tree.branches)} branches at the root)"]
        lines.extend(tree.render())
    _emit(doc, args, lines)
    return EXIT_OK if tree is not None else EXIT_FAIL


def cmd_repro(args) -> int:
    names = list(CASE_NAMES) if args.all or not args.cases else args.cases
    unknown = [n for n in names if n not in CASE_NAMES]
    if unknown:
        print(f"unknown case(s): {', '.join(unknown)}", file=sys.stderr)
        print(f"known cases: {', '.join(CASE_NAMES)}", file=sys.stderr)
        return EXIT_USAGE
    results = []
    width = max(len(n) for n in names)
    for n in names:
        r = run_paper_case(n, jobs=args.jobs, cap_dim=args.cap_dim)
        results.append(r)
        if not args.json:
            print(f"{'PASS' if r.passed else 'FAIL'}  {n:<{width}}  expected {r.expected:<22} "
                  f"observed {r.observed:<22} {r.seconds:7.2f}s")
            if args.verbose:
                for d in r.details:
                    print(f"      {d}")
    passed = sum(r.passed for r in results)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "kind": "repro",
                          "cases": [r.to_dict() for r in results],
                          "passed": passed, "total": len(results)}, indent=1))
    else:
        print(f"{passed}/{len(results)} PASS")
    return EXIT_OK if passed == len(results) else EXIT_FAIL


def cmd_verify(args) -> int:
    doc = json.loads(Path(args.file).read_text())
    kind = doc.get("kind")
    if kind == "certificate":
        problems = verify_certificate(doc)
    elif kind == "refutation":
        if not doc.get("proof"):
            problems = ["document records an inconclusive search, nothing to verify"]
        else:
            labels = doc.get("labels")
            G = GroupTable(tuple(tuple(r) for r in doc["group_table"]),
                           tuple(labels) if labels else None)
            problems = verify_refutation(G, doc["tree"], doc["endo_images"])
    else:
        problems = [f"unknown document kind {kind!r}"]
    for p in problems:
        print(f"problem: {p}")
    print("verified" if not problems else f"{len(problems)} problem(s)")
    return EXIT_OK if not problems else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON document")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    common.add_argument("--cap-dim", type=int, default=DEFAULT_CAP_DIM,
                        help=f"largest quotient dimension for a unit census (default {DEFAULT_CAP_DIM})")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="fullreal", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("group", parents=[common], help="build a group, print or save it")
    g.add_argument("expr")
    g.add_argument("--out", help="write the Cayley table here")
    g.add_argument("--info", action="store_true", help="print the fingerprint")
    g.set_defaults(func=cmd_group)

    c = sub.add_parser("check", parents=[common], help="certify an ideal")
    c.add_argument("group")
    c.add_argument("ideal")
    c.add_argument("--full", action="store_true", help="list every unit with its inverse")
    c.add_argument("--out", help="write the certificate document here")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("refute", parents=[common], help="search for a proof of non-full-realizability")
    r.add_argument("group")
    r.add_argument("--depth", type=int, default=1)
    r.add_argument("--seed", type=int, default=None, help="shuffle the seed units with this seed")
    r.add_argument("--out", help="write the refutation document here")
    r.set_defaults(func=cmd_refute)

    rp = sub.add_parser("repro", parents=[common], help="run the reproduction catalog")
    rp.add_argument("cases", nargs="*")
    rp.add_argument("--all", action="store_true")
    rp.set_defaults(func=cmd_repro)

    v = sub.add_parser("verify", help="re-check the witnesses in a document")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except RecipeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
