"""Command-line interface: ``ifpsoft <command> ...``.

Exit status is 0 on success, 1 on a domain or validation error, and 2 on
a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from functools import reduce

from .decision import GROUP_OPS, aggregate_group, decide
from .document import load, serialize_ifps
from .ifs_core import DomainError
from .ifps_core import BINARY_OPS, align, ifps_complement
from .lawcheck import run_suite
from .reduction import ReductionRangeWarning, range_warnings, reduce_fuzzy, reduce_intuitionistic, score_warnings

OP_NAMES = ["complement", *BINARY_OPS]


def _num(v: float) -> str:
    return repr(round(v, 9) + 0.0)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _warn(found) -> None:
    for w in found:
        print(f"warning: {w}", file=sys.stderr)


def cmd_validate(args) -> int:
    k = load(args.file)
    print(f"ok: {len(k.universe)} alternatives, {len(k.params)} parameters, {len(k.entries)} entries")
    return 0


def cmd_op(args, parser) -> int:
    if args.name == "complement":
        if len(args.files) != 1:
            parser.error("op complement takes exactly one file")
        result = ifps_complement(load(args.files[0]))
    else:
        if len(args.files) < 2:
            parser.error(f"op {args.name} takes at least two files")
        result = reduce(BINARY_OPS[args.name], [load(f) for f in args.files])
    _emit(serialize_ifps(result), args.output)
    return 0


def cmd_aggregate(args) -> int:
    result = aggregate_group([load(f) for f in args.files], args.op)
    _emit(serialize_ifps(result), args.output)
    return 0


def cmd_align(args) -> int:
    os.makedirs(args.out_dir, exist_ok=True)
    for path, k in zip(args.files, align(load(f) for f in args.files)):
        target = os.path.join(args.out_dir, os.path.basename(path))
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(serialize_ifps(k))
        print(target)
    return 0


def cmd_reduce(args) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ReductionRangeWarning)
        rif = reduce_intuitionistic(load(args.file))
        rf = reduce_fuzzy(rif)
    _warn(range_warnings(rif) + (score_warnings(rf) if args.stage == "rf" else []))
    width = max(len(u) for u in rif.ground)
    if args.stage == "rif":
        if args.json:
            pairs = {u: {"alpha": round(d.alpha, 9), "beta": round(d.beta, 9)} for u, d in rif.items()}
            print(json.dumps(pairs, indent=2))
        else:
            for u, d in rif.items():
                print(f"{u:<{width}} {_num(d.alpha)} {_num(d.beta)}")
    else:
        if args.json:
            print(json.dumps({u: round(v, 9) for u, v in rf.items()}, indent=2))
        else:
            for u, v in rf.items():
                print(f"{u:<{width}} {_num(v)}")
    return 0


def cmd_decide(args) -> int:
    result = decide(load(args.file))
    _warn(result.warnings)
    if args.json:
        doc = result.as_dict()
        for row in doc["ranking"]:
            row["score"] = round(row["score"], 9) + 0.0
        print(json.dumps(doc, indent=2))
        return 0
    width = max(len(u) for u, _ in result.ranking)
    for u, s in result.ranking:
        print(f"{u:<{width}} {s:.4f}")
    print("argmax: " + " ".join(result.argmax))
    return 0


def cmd_laws(args) -> int:
    report = run_suite(args.trials, args.seed)
    print("\n".join(report.lines()))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifpsoft",
        description="Intuitionistic fuzzy-parametrized soft sets: operations and decision making.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check that a file holds a valid IFPS set")
    p.add_argument("file")

    p = sub.add_parser("op", help="apply an operation to one or more sets")
    p.add_argument("name", choices=OP_NAMES)
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output")

    p = sub.add_parser("reduce", help="print the reduced pairs (rif) or scores (rf)")
    p.add_argument("file")
    p.add_argument("--stage", choices=["rif", "rf"], default="rf")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("decide", help="rank alternatives and report the best")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("aggregate", help="combine several experts' sets into one")
    p.add_argument("--op", required=True, choices=sorted(GROUP_OPS))
    p.add_argument("files", nargs="+")
    p.add_argument("-o", "--output")

    p = sub.add_parser("align", help="rewrite sets over the union of their universes and parameters")
    p.add_argument("files", nargs="+")
    p.add_argument("-d", "--out-dir", required=True)

    p = sub.add_parser("laws", help="run the randomized algebraic law suite")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run_command(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "validate": cmd_validate,
        "op": lambda a: cmd_op(a, parser),
        "reduce": cmd_reduce,
        "decide": cmd_decide,
        "aggregate": cmd_aggregate,
        "align": cmd_align,
        "laws": cmd_laws,
    }
    try:
        return handlers[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> None:
    sys.exit(run_command(argv))
