"""Command-line front end.

Every command prints one JSON document per line (``gen`` prints a graph6
line). Exit status: 0 when the query was answered and nothing contradicts
the characterisation, 2 when a counterexample or violated property was
found, 1 for usage, input and limit errors (reported on stderr).
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from typing import Optional, Sequence, TextIO

from . import verification
from .errors import ClaimViolation, GraphError, IngestError, NotApplicableError
from .families import (
    complete,
    complete_bipartite,
    cube,
    cycle,
    cycle_square,
    petersen,
    prism,
    squared_cycle_embedding,
)
from .graph import Graph
from .graph6 import emit_graph6, parse_graph6
from .minors import find_complete_bipartite_minor, find_minor
from .theorem import classify, lemma1_check, lemma2_check, lemma3_check, lemma4_witness

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for counterexamples here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def parse_family(spec: str) -> Graph:
    """``c:n``, ``c2:n``, ``k:n``, ``k:s,t``, ``petersen``, ``prism`` or ``q3``."""
    fixed = {"petersen": petersen, "prism": prism, "q3": cube}
    text = spec.strip().lower()
    if text in fixed:
        return fixed[text]()
    m = re.fullmatch(r"(c|c2|k):(\d+)(?:,(\d+))?", text)
    if not m:
        raise UsageError(f"unknown family spec {spec!r}")
    kind, a, b = m.group(1), int(m.group(2)), m.group(3)
    if b is not None:
        if kind != "k":
            raise UsageError(f"family {kind!r} takes one parameter")
        return complete_bipartite(a, int(b))
    if kind == "c":
        return cycle(a)
    if kind == "c2":
        return cycle_square(a)
    return complete(a)


def parse_pattern(spec: str) -> tuple[Graph, Optional[tuple[int, int]]]:
    """``k<n>`` or ``k<s>,<t>``; the part sizes are returned for bipartite patterns."""
    m = re.fullmatch(r"k(\d+)(?:,(\d+))?", spec.strip().lower())
    if not m:
        raise UsageError(f"unknown pattern {spec!r}; expected k<n> or k<s>,<t>")
    if m.group(2) is None:
        return complete(int(m.group(1))), None
    s, t = sorted((int(m.group(1)), int(m.group(2))))
    return complete_bipartite(s, t), (s, t)


def read_edge_list(path: str) -> Graph:
    """One ``u v`` pair per line, 0-based; the vertex count is the largest label plus one."""
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            fields = line.split()
            if not fields:
                continue
            if len(fields) != 2 or not all(f.isdigit() for f in fields):
                raise IngestError(f"expected two nonnegative integers, got {line.strip()!r}", lineno)
            u, v = int(fields[0]), int(fields[1])
            if u == v:
                raise IngestError(f"self-loop at vertex {u}", lineno)
            pairs.append((u, v))
    n = 1 + max((max(p) for p in pairs), default=-1)
    return Graph.from_edges(n, pairs)


def _input_graph(args) -> Graph:
    given = [x is not None for x in (args.graph6, args.edges, args.family)]
    if sum(given) != 1:
        raise UsageError("give exactly one of --graph6, --edges, --family")
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.edges is not None:
        return read_edge_list(args.edges)
    return parse_family(args.family)


def _emit(out: TextIO, doc) -> None:
    out.write((doc if isinstance(doc, str) else json.dumps(doc, separators=(",", ":"))) + "\n")


def cmd_check(args, out: TextIO) -> int:
    report = classify(_input_graph(args))
    _emit(out, report.to_json())
    return EXIT_OK if report.hypotheses == report.conclusion else EXIT_VIOLATION


def cmd_minor(args, out: TextIO) -> int:
    if args.pattern is None:
        raise UsageError("minor needs --pattern")
    pattern, parts = parse_pattern(args.pattern)
    host = _input_graph(args)
    if parts is not None and parts[0] in (2, 3):
        model = find_complete_bipartite_minor(host, *parts)
    else:
        model = find_minor(host, pattern)
    _emit(out, {"found": False} if model is None else {"found": True, **model.to_json()})
    return EXIT_OK


def cmd_gen(args, out: TextIO) -> int:
    if args.family is None:
        raise UsageError("gen needs --family")
    _emit(out, emit_graph6(parse_family(args.family)))
    return EXIT_OK


def cmd_embed(args, out: TextIO) -> int:
    m = re.fullmatch(r"c2:(\d+)", (args.family or "").strip().lower())
    if not m:
        raise UsageError("embed needs --family c2:<even n>")
    _emit(out, squared_cycle_embedding(int(m.group(1))).to_json())
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if (args.max_n is None) == (args.stream is None):
        raise UsageError("verify needs exactly one of --max-n, --stream")
    report = verification.verify_main_theorem(n_max=args.max_n, stream=args.stream, jobs=args.jobs)
    _emit(out, report.to_json())
    return EXIT_OK if report.verified else EXIT_VIOLATION


def cmd_lemma(args, out: TextIO) -> int:
    g = _input_graph(args)
    if args.number == 1:
        report = lemma1_check(g)
        _emit(out, report.to_json())
        return EXIT_OK if report.holds else EXIT_VIOLATION
    if args.number in (2, 3):
        doc = (lemma2_check if args.number == 2 else lemma3_check)(g)
        _emit(out, doc)
        return EXIT_OK if doc["holds"] else EXIT_VIOLATION
    try:
        witness = lemma4_witness(g)
    except NotApplicableError as exc:
        _emit(out, {"lemma": 4, "graph6": emit_graph6(g), "applicable": False, "reason": str(exc)})
        return EXIT_OK
    _emit(out, witness.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="k25free", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(p):
        p.add_argument("--graph6", help="graph6 string")
        p.add_argument("--edges", help="edge-list file, one 'u v' pair per line")
        p.add_argument("--family", help="c:n, c2:n, k:n, k:s,t, petersen, prism, q3")
        p.add_argument("--out", help="write output here instead of stdout")
        return p

    with_input(sub.add_parser("check", help="classify one graph")).set_defaults(run=cmd_check)
    p = with_input(sub.add_parser("minor", help="search for a minor"))
    p.add_argument("--pattern", help="k<n> or k<s>,<t>")
    p.set_defaults(run=cmd_minor)
    with_input(sub.add_parser("gen", help="print a family member as graph6")).set_defaults(run=cmd_gen)
    with_input(sub.add_parser("embed", help="face list of an even squared cycle")).set_defaults(run=cmd_embed)
    p = sub.add_parser("verify", help="check the characterisation exhaustively or on a stream")
    p.add_argument("--max-n", type=int, help="enumerate all graphs up to this order")
    p.add_argument("--stream", help="graph6 file, one graph per line")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", help="write output here instead of stdout")
    p.set_defaults(run=cmd_verify)
    p = with_input(sub.add_parser("lemma", help="run one lemma checker"))
    p.add_argument("number", type=int, choices=(1, 2, 3, 4))
    p.set_defaults(run=cmd_lemma)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                return args.run(args, fh)
        return args.run(args, sys.stdout)
    except ClaimViolation as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (UsageError, GraphError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
