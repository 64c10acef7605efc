"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when a checked law fails, 2 on
malformed input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from .actions import is_derived_action, is_derived_action_reduced
from .core import CheckReport, StructureError, is_reduced, validate_gwa
from .enumeration import FILTERS, audit_theorem_3_3, audit_theorem_4_3, enumerate_ideals, \
    enumerate_self_actions
from .semidirect import build_semidirect, roundtrip_check, validate_candidate

OK, FAIL, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(report: CheckReport, as_json: bool, out):
    if as_json:
        print(io.dumps(report.to_dict()), file=out)
    else:
        print(report.to_text(), file=out)


def cmd_validate(args, out) -> int:
    g = io.load_algebra(args.file)
    report = validate_gwa(g)
    if args.reduced and report.ok:
        report.merge(is_reduced(g))
    _emit(report, args.json, out)
    return OK if report.ok else FAIL


def _load_triple(args):
    actor = io.load_algebra(args.actor)
    target = io.load_algebra(args.target)
    return actor, target, io.load_triple(args.triple, actor, target)


def _require_reduced(*algebras):
    for g in algebras:
        if not is_reduced(g).ok:
            raise UsageError(f"{g.name} is not reduced")


def cmd_check_action(args, out) -> int:
    actor, target, t = _load_triple(args)
    for g in (actor, target):
        if not validate_gwa(g).ok:
            raise UsageError(f"{g.name} is not a valid group with action")
    if args.reduced:
        _require_reduced(actor, target)
        report = is_derived_action_reduced(t)
    else:
        report = is_derived_action(t)
    _emit(report, args.json, out)
    return OK if report.ok else FAIL


def cmd_semidirect(args, out) -> int:
    actor, target, t = _load_triple(args)
    if args.reduced:
        _require_reduced(actor, target)
    c = build_semidirect(actor, target, t)
    report = validate_candidate(c, reduced=args.reduced)
    if report.ok:
        report.merge(roundtrip_check(actor, target, t))
    if not report.ok:
        _emit(report, args.json, out)
        return FAIL
    io.save_algebra(c.product, args.out)
    if args.json:
        print(io.dumps({"ok": True, "name": c.product.name, "order": c.product.order,
                        "out": str(args.out)}), file=out)
    else:
        print(f"wrote {c.product.name} (order {c.product.order}) to {args.out}", file=out)
    return OK


def cmd_audit(args, out) -> int:
    actor = io.load_algebra(args.actor)
    target = io.load_algebra(args.target)
    auditor = audit_theorem_3_3 if args.theorem == "3.3" else audit_theorem_4_3
    if args.theorem == "4.3":
        _require_reduced(actor, target)
    try:
        summary = auditor(actor, target, filter=args.filter, seed=args.seed, samples=args.samples)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.json:
        print(io.dumps(summary.to_dict()), file=out)
    else:
        print(f"theorem {args.theorem}: agree {summary.agree}/{summary.total}"
              + (f" (seed {summary.seed})" if summary.seed is not None else ""), file=out)
        for triple, side_a, side_b in summary.disagreements:
            print(f"disagree laws={side_a} product={side_b} {io.dumps(triple)}", file=out)
    return OK if summary.ok else FAIL


def cmd_enumerate(args, out) -> int:
    g = io.load_algebra(args.file)
    if args.what == "self-actions":
        for x in enumerate_self_actions(g):
            print(io.dumps(io.algebra_to_dict(x)), file=out)
    else:
        if not validate_gwa(g).ok:
            raise UsageError(f"{g.name} is not a valid group with action")
        for s in enumerate_ideals(g):
            print(io.dumps(io.subset_to_dict(s)), file=out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gwa", description="Finite groups with action on themselves.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="check the group and self-action axioms")
    v.add_argument("file")
    v.add_argument("--reduced", action="store_true", help="also require reducedness")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_validate)

    for name, func, helptext in (("check-action", cmd_check_action, "check a derived action"),
                                 ("semidirect", cmd_semidirect, "build and verify B ⋉ A")):
        c = sub.add_parser(name, help=helptext)
        c.add_argument("actor")
        c.add_argument("target")
        c.add_argument("triple")
        c.add_argument("--reduced", action="store_true")
        c.add_argument("--json", action="store_true")
        if name == "semidirect":
            c.add_argument("--out", required=True)
        c.set_defaults(func=func)

    a = sub.add_parser("audit", help="audit the derived-action / semi-direct product equivalence")
    a.add_argument("actor")
    a.add_argument("target")
    a.add_argument("--theorem", choices=["3.3", "4.3"], default="3.3")
    a.add_argument("--seed", type=int)
    a.add_argument("--samples", type=int, default=100_000)
    a.add_argument("--filter", action="append", default=[], choices=sorted(FILTERS),
                   help="pin the entries a unit/zero law fixes (repeatable)")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_audit)

    e = sub.add_parser("enumerate", help="list self-actions of a group or ideals of an algebra")
    e.add_argument("file")
    e.add_argument("--what", choices=["self-actions", "ideals"], required=True)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (StructureError, UsageError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
