"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 budget
exhaustion, 4 not constructible.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import Signature
from .colouring import EdgeColouring, Level, verify
from .constructions import (DelegatedToSearch, NotConstructible, construct,
                            walecki, walecki_witness)
from .search import certify_summary_row, enumerate_representations, search

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_BUDGET = 3
EXIT_NOT_CONSTRUCTIBLE = 4


def _parse_s(text: str) -> frozenset:
    if text.strip() in ("", "empty", "0"):
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad triangle-type set {text!r}")


def _parse_level(text: str) -> Level:
    try:
        return Level(text.lower())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad level {text!r}")


def _default_budget():
    raw = os.environ.get("CHROMATIC_BUDGET_NODES")
    return int(raw) if raw else None


def _add_signature_args(p):
    p.add_argument("--s", type=_parse_s, required=True,
                   help="consistent triangle types, e.g. 1,3 (or 'empty')")
    p.add_argument("--n", type=int, required=True,
                   help="number of proper colours")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromarep",
        description="Edge-colouring representations of chromatic algebras.",
        epilog="Exit codes: 0 ok, 1 usage, 2 verification failure, "
               "3 budget exhausted, 4 not constructible.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a representation")
    _add_signature_args(p)
    p.add_argument("--level", type=_parse_level, required=True)
    p.add_argument("--out", help="write colouring JSON here")
    p.add_argument("--dot", help="write DOT export here")
    p.add_argument("--budget-nodes", type=int, default=None,
                   help="search budget when construction delegates")

    p = sub.add_parser("verify", help="verify a colouring JSON file")
    _add_signature_args(p)
    p.add_argument("--level", type=_parse_level, required=True)
    p.add_argument("--in", dest="infile", required=True)

    p = sub.add_parser("search", help="exhaustive representation search")
    _add_signature_args(p)
    p.add_argument("--level", type=_parse_level, required=True)
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--budget-nodes", type=int, default=None)
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; the search runs "
                        "sequentially")
    p.add_argument("--strict-determinism", action="store_true",
                   help="no-op: results are deterministic already")
    p.add_argument("--out", help="write a found colouring JSON here")

    p = sub.add_parser("enumerate",
                       help="all representations on m vertices, up to "
                            "isomorphism")
    _add_signature_args(p)
    p.add_argument("--level", type=_parse_level, default=Level.QUALITATIVE)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget-nodes", type=int, default=None)

    p = sub.add_parser("witness",
                       help="triangle witness inside a Walecki colouring")
    p.add_argument("--walecki-n", type=int, required=True)
    p.add_argument("--triple", required=True,
                   help="colour triple i,j,k with i < j")

    p = sub.add_parser("table", help="recompute the representability table")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--budget-nodes", type=int, default=None)
    return parser


def _budget(args):
    return args.budget_nodes if getattr(args, "budget_nodes", None) \
        else _default_budget()


def _emit_colouring(col, sig, args, stream):
    text = col.to_json(sig)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        stream.write(text + "\n")
    if getattr(args, "dot", None):
        with open(args.dot, "w") as fh:
            fh.write(col.to_dot() + "\n")


def cmd_construct(args, out):
    sig = Signature(args.s, args.n)
    result = construct(sig, args.level)
    if isinstance(result, NotConstructible):
        out.write(f"not constructible: {result.reason}\n")
        return EXIT_NOT_CONSTRUCTIBLE
    if isinstance(result, DelegatedToSearch):
        out.write(f"delegated to search: {result.reason}\n")
        outcome = search(sig, args.level, node_budget=_budget(args))
        if outcome.status == "found":
            _emit_colouring(outcome.colouring, sig, args, out)
            return EXIT_OK
        if outcome.status == "aborted":
            out.write("search budget exhausted\n")
            return EXIT_BUDGET
        out.write(f"no representation up to m={outcome.m_max}"
                  f"{' (certified)' if outcome.complete_certificate else ''}\n")
        return EXIT_NOT_CONSTRUCTIBLE
    _emit_colouring(result, sig, args, out)
    return EXIT_OK


def cmd_verify(args, out):
    sig = Signature(args.s, args.n)
    with open(args.infile) as fh:
        col = EdgeColouring.from_json(fh.read())
    report = verify(col, sig, args.level)
    out.write(report.summary() + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_search(args, out):
    sig = Signature(args.s, args.n)
    m_range = (2, args.max_m) if args.max_m else None
    outcome = search(sig, args.level, m_range=m_range,
                     node_budget=_budget(args))
    for line in outcome.transcript_lines():
        out.write(line + "\n")
    if outcome.status == "found":
        out.write(f"found on m={outcome.colouring.m}\n")
        _emit_colouring(outcome.colouring, sig, args, out)
        return EXIT_OK
    if outcome.status == "aborted":
        out.write("budget exhausted\n")
        return EXIT_BUDGET
    kind = ("certified nonexistent" if outcome.complete_certificate
            else "none found (range-limited)")
    out.write(f"{kind} up to m={outcome.m_max}\n")
    return EXIT_OK


def cmd_enumerate(args, out):
    sig = Signature(args.s, args.n)
    results, partial = enumerate_representations(sig, args.level, args.m,
                                                 node_budget=_budget(args))
    doc = {"count": len(results), "partial": partial,
           "colourings": [json.loads(c.to_json(sig)) for c in results]}
    out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return EXIT_BUDGET if partial else EXIT_OK


def cmd_witness(args, out):
    try:
        i, j, k = (int(x) for x in args.triple.split(","))
    except ValueError:
        out.write("triple must be three comma-separated colours\n")
        return EXIT_USAGE
    n = args.walecki_n
    col = walecki(n)
    x, y, z = walecki_witness(n, i, j, k)
    doc = {"vertices": [x, y, z],
           "colours": {"xy": col.colour(x, y), "xz": col.colour(x, z),
                       "yz": col.colour(y, z)}}
    out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


SIGNATURE_ORDER = [(1, 2, 3), (2, 3), (1, 3), (1, 2), (3,), (2,), (1,), ()]


def cmd_table(args, out):
    budget = _budget(args)
    rows = {}
    for s in SIGNATURE_ORDER:
        cells = certify_summary_row(frozenset(s), range(1, args.max_n + 1),
                                    node_budget=budget)
        label = "{" + ",".join(str(x) for x in s) + "}"
        rows[label] = {
            f"n={n}": {level.value: {"status": cell.status,
                                     "detail": cell.detail}
                       for (nn, level), cell in cells.items() if nn == n}
            for n in range(1, args.max_n + 1)}
    out.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "verify": cmd_verify,
    "search": cmd_search,
    "enumerate": cmd_enumerate,
    "witness": cmd_witness,
    "table": cmd_table,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (ValueError, OSError) as exc:
        out.write(f"error: {exc}\n")
        return EXIT_USAGE


def main():  # console entry point
    sys.exit(run())


if __name__ == "__main__":
    main()
