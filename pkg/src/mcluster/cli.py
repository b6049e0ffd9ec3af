"""Command line interface.

Commands: check-tilting, present, roll, cluster-present, relext, pipeline,
enumerate, iso.  Exit codes: 0 success / true verdict, 1 false verdict,
2 parse error, 3 precondition failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebras import present_algebra
from .cluster import cluster_endo, relation_extension
from .derived import CapExceededError, PreconditionError, endo_algebra, in_fundamental_domain, is_tilting_complex, roll
from .enumeration import enumerate_tilting
from .io import SchemaError, emit_derived_sum, emit_presentation, parse_derived_sum, parse_presentation
from .pipeline import run_pipeline
from .presentations import ISOMORPHIC, presentation_iso
from .reps import Orientation

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError("$", f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON in {path}: {exc}")


def _load_sum(path: str):
    dsum, warnings = parse_derived_sum(_read_json(path))
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    return dsum


def _write_out(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _presentation_text(pres) -> str:
    lines = ["vertices: " + " ".join(str(v) for v in sorted(pres.quiver.vertices))]
    for a, s, t in sorted(pres.quiver.arrows, key=lambda x: x[0]):
        grade = f"  (grade {pres.grades[a]})" if pres.grades is not None else ""
        lines.append(f"arrow {a}: {s} -> {t}{grade}")
    for rel in pres.relations:
        lines.append("relation: " + " + ".join(f"{c} * {'.'.join(p)}" for c, p in rel.terms))
    return "\n".join(lines) + "\n"


def _emit_presentation(pres, fmt: str, out: str | None):
    if fmt == "text":
        doc = _presentation_text(pres)
    else:
        doc = emit_presentation(pres, fmt)
    _write_out(doc, out)


def cmd_check_tilting(args) -> int:
    T = _load_sum(args.input)
    ok, cert = is_tilting_complex(T)
    doc = {"tilting": ok, "violations": [list(v) for v in cert]}
    _write_out(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_present(args) -> int:
    T = _load_sum(args.input)
    ok, cert = is_tilting_complex(T)
    if not ok:
        print(f"precondition failed: not a tilting complex: {cert[:5]}", file=sys.stderr)
        return EXIT_PRECONDITION
    pres = present_algebra(endo_algebra(T, check_tilting=False))
    _emit_presentation(pres, args.format, args.out)
    return EXIT_OK


def cmd_roll(args) -> int:
    T = _load_sum(args.input)
    try:
        rolled = roll(T, args.m)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _write_out(emit_derived_sum(rolled), args.out)
    in_s_m = all(in_fundamental_domain(T.orient, s, args.m) for s in rolled.summands)
    print(f"in fundamental domain S_{args.m}: {in_s_m}", file=sys.stderr)
    return EXIT_OK


def cmd_cluster_present(args) -> int:
    T = _load_sum(args.input)
    try:
        pres = present_algebra(cluster_endo(T, args.m))
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit_presentation(pres, args.format, args.out)
    return EXIT_OK


def cmd_relext(args) -> int:
    T = _load_sum(args.input)
    try:
        pres = present_algebra(relation_extension(T, args.m))
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _emit_presentation(pres, args.format, args.out)
    return EXIT_OK


def cmd_pipeline(args) -> int:
    T = _load_sum(args.input)
    try:
        report = run_pipeline(T, args.m, bound=args.bound, max_steps=args.max_steps)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CapExceededError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.format == "text":
        _write_out(report.to_text(), args.out)
    else:
        _write_out(report.to_json(), args.out)
    return EXIT_OK if report.final_verdict == ISOMORPHIC else EXIT_FALSE


def cmd_enumerate(args) -> int:
    orient = Orientation(args.n, args.orientation) if args.orientation else None
    try:
        report = enumerate_tilting(args.n, args.m, orient=orient, max_n=args.max_n)
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _write_out(json.dumps(report.to_json_dict(), indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_iso(args) -> int:
    p1, w1 = parse_presentation(_read_json(args.left))
    p2, w2 = parse_presentation(_read_json(args.right))
    for w in w1 + w2:
        print(f"warning: {w}", file=sys.stderr)
    verdict, mapping = presentation_iso(p1, p2)
    doc = {"verdict": verdict}
    if mapping is not None:
        vmap, amap = mapping
        doc["vertex_map"] = {str(k): v for k, v in sorted(vmap.items())}
        doc["arrow_map"] = dict(sorted(amap.items()))
    _write_out(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK if verdict == ISOMORPHIC else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcluster", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_m=True, fmt=True):
        p.add_argument("--input", required=True, help="DerivedSum JSON file")
        if needs_m:
            p.add_argument("--m", type=int, required=True, help="the m of the m-cluster category")
        if fmt:
            p.add_argument("--format", choices=["json", "dot", "text"], default="json")
        p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("check-tilting", help="verify the tilting-complex conditions")
    add_common(p, needs_m=False, fmt=False)
    p.set_defaults(func=cmd_check_tilting)

    p = sub.add_parser("present", help="quiver with relations of End(T)")
    add_common(p, needs_m=False)
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("roll", help="one m-rolling step")
    add_common(p, fmt=False)
    p.set_defaults(func=cmd_roll)

    p = sub.add_parser("cluster-present", help="presentation of the m-cluster endomorphism algebra")
    add_common(p)
    p.set_defaults(func=cmd_cluster_present)

    p = sub.add_parser("relext", help="presentation of the m-relation extension")
    add_common(p)
    p.set_defaults(func=cmd_relext)

    p = sub.add_parser("pipeline", help="full check: C_m(B) vs R_m(B') through rolling")
    add_common(p)
    p.add_argument("--bound", type=int, default=None, help="global dimension search bound (default 2m+4)")
    p.add_argument("--max-steps", type=int, default=None, help="rolling step cap")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("enumerate", help="enumerate m-cluster tilting objects in S_m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--orientation", default=None, help="orientation word (default linear)")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("iso", help="compare two presentation JSON files")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
