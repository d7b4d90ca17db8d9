"""Command-line surface: validate, classify, enumerate, verify, report.

Exit codes: 0 success / verified / all rows agree, 1 counterexample or
disagreement found, 2 malformed input (single-line diagnostic naming the
violated invariant and witness).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gensets, separation
from .enumeration import (
    BoundExceeded,
    enumerate_topologies,
    homeomorphism_classes,
    labeled_topologies,
)
from .fixtures import paper_report
from .maps import (
    MAP_PROPERTY_TAGS,
    MapValidationError,
    classify_map,
    map_property,
    parse_map_doc,
)
from .registry import (
    THEOREM_IDS,
    UnknownTheorem,
    check_implication,
    verify_theorem,
)
from .spaces import SpaceDocError, TopologyError, load_space, space_doc


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("table", "json"), default="table")


def _parse_labels(raw: str) -> list[str]:
    if raw == "":
        return []
    return raw.split(",")


def _cmd_validate(args) -> int:
    space = load_space(args.space)
    if args.format == "json":
        print(json.dumps(space_doc(space), separators=(",", ":")))
    else:
        print(f"valid: {space.name or args.space}: {space.n} points, {len(space.opens)} open sets")
    return 0


def _cmd_classify_set(args) -> int:
    space = load_space(args.space)
    mask = space.subset_of(_parse_labels(args.set))
    if args.klass is not None:
        if args.klass not in gensets.SET_CLASS_TAGS:
            print(f"error: unknown set-class tag {args.klass!r}", file=sys.stderr)
            return 2
        value = gensets.set_class(space, mask, args.klass)
        print("true" if value else "false")
        return 0
    vector = gensets.classify_set(space, mask)
    if args.format == "json":
        print(
            json.dumps(
                {"set": list(space.labels_of(mask)), "classes": vector},
                separators=(",", ":"),
            )
        )
    else:
        for tag, value in vector.items():
            print(f"{tag:16s} {'true' if value else 'false'}")
    return 0


def _cmd_classify_space(args) -> int:
    space = load_space(args.space)
    vector = separation.classify_space(space)
    if args.format == "json":
        print(json.dumps(vector, separators=(",", ":")))
    else:
        for tag, value in vector.items():
            print(f"{tag:26s} {'true' if value else 'false'}")
    return 0


def _cmd_check_map(args) -> int:
    import os

    with open(args.map, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    f = parse_map_doc(doc, base_dir=os.path.dirname(os.path.abspath(args.map)))
    if args.property is not None:
        if args.property not in MAP_PROPERTY_TAGS:
            print(f"error: unknown map property tag {args.property!r}", file=sys.stderr)
            return 2
        print("true" if map_property(f, args.property) else "false")
        return 0
    vector = classify_map(f)
    if args.format == "json":
        print(json.dumps(vector, separators=(",", ":")))
    else:
        for tag, value in vector.items():
            print(f"{tag:28s} {'true' if value else 'false'}")
    return 0


def _cmd_enumerate(args) -> int:
    if args.count_only:
        spaces = (
            homeomorphism_classes(args.points, args.route)
            if args.up_to_homeo
            else labeled_topologies(args.points, args.route)
        )
        print(len(spaces))
        return 0
    for space in enumerate_topologies(args.points, args.up_to_homeo, args.route):
        if args.format == "json":
            print(json.dumps(space_doc(space), separators=(",", ":")))
        else:
            opens = " ".join("{" + ",".join(space.labels_of(u)) + "}" for u in space.opens)
            print(f"{space.name}: {opens}")
    return 0


def _cmd_implication(args) -> int:
    report = check_implication(
        tuple(_parse_labels(args.hypothesis)),
        args.conclusion,
        bound=args.points,
        workers=args.workers,
    )
    print(report.to_json() if args.format == "json" else report.to_table())
    return 0 if report.verdict == "verified" else 1


def _cmd_verify(args) -> int:
    report = verify_theorem(
        args.theorem,
        bound=args.points,
        workers=args.workers,
        hausdorff=args.hausdorff,
    )
    print(report.to_json(timing=args.timing) if args.format == "json" else report.to_table())
    return 0 if report.verdict == "verified" else 1


def _cmd_paper_report(args) -> int:
    report = paper_report(monitor_bound=args.monitor_bound)
    if args.format == "json":
        sys.stdout.write(report.to_json_lines())
    else:
        print(report.to_table())
    return 1 if report.has_disagreement else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topolab",
        description="Exact laboratory for finite point-set topology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a space document against the topology axioms")
    p.add_argument("space")
    _add_format(p)
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("classify-set", help="set-class vector (or one class) for a subset")
    p.add_argument("space")
    p.add_argument("--set", required=True, help="comma-separated point labels; '' is the empty set")
    p.add_argument("--class", dest="klass", default=None)
    _add_format(p)
    p.set_defaults(handler=_cmd_classify_set)

    p = sub.add_parser("classify-space", help="axiom vector for a space")
    p.add_argument("space")
    _add_format(p)
    p.set_defaults(handler=_cmd_classify_space)

    p = sub.add_parser("check-map", help="property vector (or one property) for a map document")
    p.add_argument("map")
    p.add_argument("--property", default=None)
    _add_format(p)
    p.set_defaults(handler=_cmd_check_map)

    p = sub.add_parser("enumerate", help="enumerate topologies on n points")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--up-to-homeo", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--route", choices=("preorder", "naive"), default="preorder")
    _add_format(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("implication", help="exhaustively test hypothesis tags => conclusion tag")
    p.add_argument("--from", dest="hypothesis", required=True)
    p.add_argument("--to", dest="conclusion", required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    _add_format(p)
    p.set_defaults(handler=_cmd_implication)

    p = sub.add_parser("verify", help="sweep one registered claim")
    p.add_argument("--theorem", required=True, metavar=f"ID ({', '.join(THEOREM_IDS[:4])}, ...)")
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--hausdorff", choices=("scstar-t2", "t2"), default="scstar-t2")
    p.add_argument("--timing", action="store_true")
    _add_format(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("paper-report", help="replay the bundled claim catalog and monitors")
    p.add_argument("--monitor-bound", type=int, default=4)
    _add_format(p)
    p.set_defaults(handler=_cmd_paper_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (
        TopologyError,
        SpaceDocError,
        MapValidationError,
        UnknownTheorem,
        BoundExceeded,
        FileNotFoundError,
        json.JSONDecodeError,
        ValueError,
    ) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
