"""Command line entry point: ``looplab analyze|verify|enumerate|search|catalog``.

Exit status: 0 on success, 1 when an applicable claim is falsified, 2 on bad
input (unparsable table, non-loop, unsupported order or filter).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog, enumerator, theorems
from .errors import LoopLabError, ParseError
from .report import analyze
from .table import Loop
from .textformat import format_table, parse

EXIT_OK, EXIT_FALSIFIED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def load(source: str) -> tuple[Loop, str, bytes]:
    """Resolve ``catalog:<name>``, ``-`` (stdin) or a file path to a validated loop."""
    if source.startswith("catalog:"):
        entry = catalog.get(source[len("catalog:"):])
        return entry.table, source, format_table(entry.table).encode()
    if source == "-":
        raw = sys.stdin.buffer.read()
        label = "<stdin>"
    else:
        try:
            raw = Path(source).read_bytes()
        except OSError as exc:
            raise InputError(f"{source}: {exc.strerror}") from None
        label = source
    try:
        parsed = parse(raw.decode())
    except UnicodeDecodeError:
        raise InputError(f"{label}: not a text file") from None
    except ParseError as exc:
        raise InputError(f"{label}: {exc}") from None
    if parsed.loop is None:
        v = parsed.validation
        where = ""
        if v.defect_row is not None:
            where = f"line {parsed.row_lines[v.defect_row]}: "
        raise InputError(f"{label}: {where}{v.defect} (table is a {v.classification.value}, not a loop)")
    return parsed.loop, label, raw


def _claims(text: str | None) -> tuple[str, ...]:
    if not text:
        return theorems.CLAIMS
    claims = tuple(c.strip().upper() for c in text.split(",") if c.strip())
    unknown = [c for c in claims if c not in theorems.VERIFIERS]
    if unknown:
        raise InputError(f"unknown claim(s) {', '.join(unknown)}; known: {', '.join(theorems.CLAIMS)}")
    return claims


def cmd_analyze(args) -> int:
    t, label, raw = load(args.input)
    report = analyze(t, label, raw, _claims(args.claims))
    if args.json:
        json.dump(report.to_json(), sys.stdout, indent=2, ensure_ascii=False)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    t, label, _ = load(args.input)
    status = EXIT_OK
    for v in theorems.verify(t, _claims(args.claims)):
        if not v.applicable:
            print(f"{v.claim}: not applicable ({v.reason})")
        elif v.verified:
            note = ""
            if v.evidence.get("relation") == "equal":
                note = f" (equality: p_assoc = {v.evidence['p_assoc']} attains the bound)"
            print(f"{v.claim}: verified{note}")
        else:
            status = EXIT_FALSIFIED
            print(f"{v.claim}: FALSIFIED counterexample {json.dumps(v.to_json()['counterexample'])}")
    return status


def _filters(text: str | None) -> tuple[str, ...]:
    return tuple(f.strip() for f in text.split(",") if f.strip()) if text else ()


def cmd_enumerate(args) -> int:
    job = enumerator.EnumerationJob(args.order, _filters(args.filter), args.up_to_iso, args.limit,
                                    args.workers or enumerator.default_workers())
    stats = enumerator.EnumerationStats()
    first = True
    for t in enumerator.enumerate_loops(job, stats):
        if not first:
            sys.stdout.write("\n")
        sys.stdout.write(format_table(t))
        sys.stdout.flush()
        first = False
    print(stats.summary(), file=sys.stderr)
    return EXIT_OK


def cmd_search(args) -> int:
    bound = Fraction(args.bound)
    hits = enumerator.counterexample_search(args.order, bound,
                                            args.workers or enumerator.default_workers())
    for hit in hits:
        sys.stdout.write(format_table(hit.loop, comment=f"p_assoc = {hit.p_assoc}") + "\n")
    if not hits:
        print(f"no nonassociative Moufang loop of order {args.order} with p_assoc > {bound}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.names():
            print(name)
        return EXIT_OK
    if not args.name:
        raise InputError("catalog emit needs an entry name")
    entry = catalog.get(args.name)
    sys.stdout.write(format_table(entry.table, comment=f"{entry.name}: {entry.provenance}"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="looplab", description="Finite loop analysis from Cayley tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report identities, nuclei, probabilities and claims")
    p.add_argument("input", help="table file, '-' for stdin, or catalog:<name>")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--claims", help="comma-separated claim ids (default: all)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check theorem claims; exit 1 if one is falsified")
    p.add_argument("input")
    p.add_argument("--claims", help=f"comma-separated subset of {','.join(theorems.CLAIMS)}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="stream every loop of a given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--filter", help=f"comma-separated subset of {','.join(sorted(enumerator.FILTERS))}")
    p.add_argument("--up-to-iso", action="store_true", help="one table per isomorphism class")
    p.add_argument("--limit", type=int)
    p.add_argument("--workers", type=int, help="worker processes (default: $LOOPLAB_THREADS or CPU count)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", help="nonassociative Moufang loops with p_assoc above a bound")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--bound", default="43/64")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("catalog", help="list or emit built-in loops")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, LoopLabError, ValueError) as exc:
        print(f"looplab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
