"""Command line front end.

Exit status: 0 when the verdict is pass, 1 on an axiom failure, 2 on bad
input or usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from esnkit.algebra import (PartialTable, UnaryStructure, UNARY_KINDS, antichain, chain_semilattice,
                            check_associativity, check_inverse, check_local_meet_semilattice,
                            check_unary_axioms, gen_relation_semigroup, group_z2)
from esnkit.category import (BiorderedCategory, FiniteCategory, check_category, check_lbec,
                             check_locally_inductive)
from esnkit.enumeration import CLASSES, enumerate_structures
from esnkit.errors import AxiomFailure, InputError, InternalInconsistency, TheoremViolation
from esnkit.esn import build_category, build_semigroupoid, classify, roundtrip_verify
from esnkit.fileio import parse_map, parse_structure, serialize, write_structure
from esnkit.morphisms import CarrierMap, check_cat_functor, check_sgpd_map, verify_correspondence
from esnkit.report import Report

SGPD_VERIFY = ("semigroupoid", "inverse", "local-meet-semilattice") + UNARY_KINDS
CAT_VERIFY = ("category", "lbec", "lic", "lig")
MAP_KINDS = ("211", "vee", "wedge", "ifunctor", "ofunctor", "iprefunctor", "correspondence")


class Fail(Exception):
    """Axiom failure carrying the report to print."""

    def __init__(self, report: Report):
        super().__init__(report.summary())
        self.report = report


def emit(report: Report, args) -> int:
    if args.machine:
        print(report.to_json())
    else:
        print(report.render())
    return 0 if report.verdict else 1


def _default_kind(x) -> str:
    if isinstance(x, PartialTable):
        return "semigroupoid"
    if isinstance(x, UnaryStructure):
        return "left-ehresmann" if x.star is None else "two-sided-ehresmann"
    if isinstance(x, FiniteCategory):
        return "category"
    return "lbec"


def verify(x, kind: str) -> Report:
    if kind in SGPD_VERIFY:
        if isinstance(x, (FiniteCategory, BiorderedCategory)):
            raise InputError(f"kind {kind} applies to semigroupoid files")
        table = x if isinstance(x, PartialTable) else x.base
        if kind == "semigroupoid":
            return check_associativity(table)
        if kind == "local-meet-semilattice":
            return check_local_meet_semilattice(table)[0]
        if kind == "inverse":
            assoc = check_associativity(table)
            return assoc if not assoc.verdict else check_inverse(table)[0]
        if isinstance(x, PartialTable):
            raise InputError(f"kind {kind} needs plus (and star) lines")
        return check_unary_axioms(x, kind)
    if kind not in CAT_VERIFY:
        raise InputError(f"unknown kind {kind!r}")
    if not isinstance(x, (FiniteCategory, BiorderedCategory)):
        raise InputError(f"kind {kind} applies to category files")
    cat = x if isinstance(x, FiniteCategory) else x.cat
    if kind == "category":
        return check_category(cat)
    if isinstance(x, FiniteCategory):
        raise InputError(f"kind {kind} needs order lines")
    if kind == "lbec":
        return check_lbec(x)
    if x.leq_l != x.leq_r:
        rep = Report(f"locally inductive {'category' if kind == 'lic' else 'groupoid'}")
        rep.add("single-order", "leq_l differs from leq_r")
        return rep
    return check_locally_inductive(cat, x.leq_l, "category" if kind == "lic" else "groupoid")


def _require_ehresmann(x) -> UnaryStructure:
    if not isinstance(x, UnaryStructure) or x.star is None:
        raise InputError("expected a semigroupoid file with plus and star lines")
    rep = check_unary_axioms(x, "two-sided-ehresmann")
    if not rep.verdict:
        raise Fail(rep)
    return x


def _require_lbec(x) -> BiorderedCategory:
    if not isinstance(x, BiorderedCategory):
        raise InputError("expected a category file with order lines")
    if not x.is_lbec():
        raise Fail(x.lbec_report)
    return x


# -- subcommands -----------------------------------------------------------

def cmd_verify(args) -> int:
    x = parse_structure(args.file)
    return emit(verify(x, args.kind or _default_kind(x)), args)


def cmd_classify(args) -> int:
    s = _require_ehresmann(parse_structure(args.file))
    flags = classify(s)
    rep = Report("classification")
    rep.data.update(flags.as_dict())
    return emit(rep, args)


def cmd_to_cat(args) -> int:
    c = build_category(_require_ehresmann(parse_structure(args.file)))
    return _write(c, args)


def cmd_to_sgpd(args) -> int:
    s = build_semigroupoid(_require_lbec(parse_structure(args.file)))
    return _write(s, args)


def _write(x, args) -> int:
    if args.output in (None, "-"):
        sys.stdout.write(serialize(x))
    else:
        write_structure(x, args.output)
    return 0


def cmd_roundtrip(args) -> int:
    x = parse_structure(args.file)
    if isinstance(x, UnaryStructure):
        _require_ehresmann(x)
    elif isinstance(x, BiorderedCategory):
        _require_lbec(x)
    else:
        raise InputError("roundtrip needs an Ehresmann semigroupoid or an lbec file")
    return emit(roundtrip_verify(x), args)


def _as_sgpd(x):
    if isinstance(x, BiorderedCategory):
        return build_semigroupoid(_require_lbec(x))
    return _require_ehresmann(x)


def _as_cat(x):
    if isinstance(x, UnaryStructure):
        return build_category(_require_ehresmann(x))
    return _require_lbec(x)


def cmd_check_map(args) -> int:
    src, dst, send = parse_map(args.map)
    kind = args.kind
    if kind in ("211", "vee", "wedge"):
        rep = check_sgpd_map(CarrierMap(_as_sgpd(src), _as_sgpd(dst), send), kind,
                             lax_unary=args.lax_unary)
    elif kind == "correspondence":
        rep = verify_correspondence(CarrierMap(_as_sgpd(src), _as_sgpd(dst), send))
    else:
        rep = check_cat_functor(CarrierMap(_as_cat(src), _as_cat(dst), send), kind)
    return emit(rep, args)


def cmd_enumerate(args) -> int:
    items = list(enumerate_structures(args.cls, args.size, args.dedup))
    if args.output:
        os.makedirs(args.output, exist_ok=True)
        for i, x in enumerate(items):
            write_structure(x, os.path.join(args.output, f"{args.cls}-{args.size}-{i:04d}.txt"))
    if args.machine:
        print(json.dumps({"class": args.cls, "size": args.size, "dedup": args.dedup, "count": len(items),
                          "structures": [] if args.output else [serialize(x) for x in items]}, indent=2))
    else:
        if not args.output:
            for x in items:
                print(serialize(x))
        print(f"# {len(items)} structure(s) of class {args.cls}, size {args.size}"
              + (" up to isomorphism" if args.dedup else ""))
    return 0


def cmd_example(args) -> int:
    if args.bx is not None:
        x = gen_relation_semigroup(args.bx)
    elif args.chain is not None:
        x = chain_semilattice(args.chain)
    elif args.antichain is not None:
        x = antichain(args.antichain)
    else:
        x = group_z2()
    return _write(x, args)


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="print reports as JSON")
    p = argparse.ArgumentParser(prog="esnkit", parents=[common],
                                description="Check and convert finite Ehresmann semigroupoids and categories.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("verify", parents=[common], help="check an axiom system")
    q.add_argument("file", nargs="?", default="-")
    q.add_argument("--kind", choices=SGPD_VERIFY + CAT_VERIFY)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("classify", parents=[common], help="class flags of an Ehresmann semigroupoid")
    q.add_argument("file", nargs="?", default="-")
    q.set_defaults(func=cmd_classify)

    for name, func, what in (("to-cat", cmd_to_cat, "semigroupoid to category"),
                             ("to-sgpd", cmd_to_sgpd, "category to semigroupoid")):
        q = sub.add_parser(name, parents=[common], help=what)
        q.add_argument("file", nargs="?", default="-")
        q.add_argument("-o", "--output")
        q.set_defaults(func=func)

    q = sub.add_parser("roundtrip", parents=[common], help="check S(C(S)) = S or C(S(C)) = C")
    q.add_argument("file", nargs="?", default="-")
    q.set_defaults(func=cmd_roundtrip)

    q = sub.add_parser("check-map", parents=[common], help="check a map file against a morphism class")
    q.add_argument("--map", required=True)
    q.add_argument("--kind", required=True, choices=MAP_KINDS)
    q.add_argument("--lax-unary", action="store_true", help="inequality form of vm2")
    q.set_defaults(func=cmd_check_map)

    q = sub.add_parser("enumerate", parents=[common], help="list all small structures of a class")
    q.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    q.add_argument("--size", type=int, required=True)
    q.add_argument("--dedup", action="store_true", help="one structure per isomorphism class")
    q.add_argument("-o", "--output", help="directory to write one file per structure")
    q.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("example", parents=[common], help="print a built-in structure")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--bx", type=int, metavar="N", help="all relations on an N-set")
    g.add_argument("--chain", type=int, metavar="N", help="N-element chain semilattice")
    g.add_argument("--antichain", type=int, metavar="N", help="N unrelated idempotents")
    g.add_argument("--z2", action="store_true", help="the two-element group")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_example)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Fail as exc:
        emit(exc.report, args)
        return 1
    except AxiomFailure as exc:
        emit(exc.report, args)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TheoremViolation, InternalInconsistency) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
