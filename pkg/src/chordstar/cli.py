"""Command-line front end.

Reports go to standard output (or ``--out``) as JSON; progress goes to
standard error.  Exit codes: 0 all checks pass, 1 check failure, 2 input
error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from .constructions import DEFAULT_SEED, construct_chordal_star
from .errors import (BudgetExceeded, ConstructionError, DomainError,
                     InputError, PreconditionError, UnsupportedError)
from .graph import Graph
from .graph6 import parse_graph6, write_graph6
from .harness import (BUILTIN, GRAPH6_FILE, CorpusReport, analyze,
                      classification_report, spectrum, verify_corpus)
from .stanley_reisner import FIELDS, GF2, betti_table_hochster, has_linear_resolution, proj_dim

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def parse_graph_literal(text: str, n: int | None = None) -> Graph:
    """A graph6 string, or an edge list ``u-v,u-v,...`` (vertex count from ``n`` or the edges)."""
    text = text.strip()
    if "-" in text or "," in text or text.isdigit() or text == "":
        edges = []
        for item in filter(None, text.split(",")):
            try:
                u, v = (int(x) for x in item.split("-"))
            except ValueError:
                raise InputError(f"bad edge {item!r}; expected u-v") from None
            edges.append((u, v))
        if n is None:
            if not edges:
                raise InputError("an empty edge list needs --n")
            n = max(max(e) for e in edges) + 1
        return Graph.from_edges(n, edges)
    return parse_graph6(text)


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def write_csv_summary(report: CorpusReport, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["id", "description", "applies_to", "applicable", "passed", "status", "counterexamples"])
        for c in report.checks:
            w.writerow([c["id"], c["description"], c["applies_to"], c["applicable"], c["passed"],
                        c["status"], len(c["counterexamples"])])


def _source(args) -> tuple[str, str | None]:
    if args.input:
        return GRAPH6_FILE, args.input
    if args.n is None:
        raise InputError("give --n for the built-in corpus or --input for a graph6 file")
    return BUILTIN, None


def cmd_analyze(args) -> int:
    g = parse_graph_literal(args.graph, args.n)
    _emit(analyze(g, with_betti=args.betti, field=args.field).to_dict(), args.out)
    return EXIT_OK


def cmd_betti(args) -> int:
    g = parse_graph_literal(args.graph, args.n)
    t = betti_table_hochster(g, args.field)
    _emit({"graph6": write_graph6(g), "n": g.n, "field": t.field, "entries": t.as_rows(),
           "projdim": proj_dim(t), "linear_resolution": has_linear_resolution(t)}, args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.n is None or args.kappa is None:
        raise InputError("construct needs --n and --kappa")
    g, recipe = construct_chordal_star(args.n, args.kappa, args.seed)
    _emit({"n": args.n, "kappa": args.kappa, "recipe": recipe.to_dict(), "graph6": write_graph6(g)}, args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    if args.n is None:
        raise InputError("spectrum needs --n")
    report = spectrum(args.n, args.seed, corpus_check=not args.no_corpus_check)
    _emit(report, args.out)
    check = report["corpus_check"]
    return EXIT_FAIL if check is not None and not check["agrees"] else EXIT_OK


def cmd_verify(args) -> int:
    source, path = _source(args)
    report = verify_corpus(args.n, source, path, field=args.field, jobs=args.jobs, timing=args.timing)
    _emit(report.to_dict(), args.out)
    csv_path = args.csv or (str(Path(args.out).with_suffix(".csv")) if args.out else None)
    if csv_path:
        write_csv_summary(report, csv_path)
    if not report.all_passed:
        print("failing checks: " + ", ".join(report.failing_ids), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_classify(args) -> int:
    source, path = _source(args)
    report = classification_report(args.n, source, path, jobs=args.jobs)
    _emit(report, args.out)
    return EXIT_FAIL if report["unique"] is False else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="vertex count")
    common.add_argument("--input", help="graph6 file, one graph per line")
    common.add_argument("--field", choices=FIELDS, default=GF2, help="coefficient field for Betti numbers")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized constructions")
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    parser = argparse.ArgumentParser(prog="chordstar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="invariants of one graph")
    p.add_argument("graph", help="graph6 string or edge list u-v,u-v,...")
    p.add_argument("--betti", action="store_true", help="include the Betti table")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("betti", parents=[common], help="Betti table of S/I(G^c)")
    p.add_argument("graph", help="graph6 string or edge list u-v,u-v,...")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("construct", parents=[common], help="chordal* graph with given connectivity")
    p.add_argument("--kappa", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("spectrum", parents=[common], help="witness for every admissible connectivity")
    p.add_argument("--no-corpus-check", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify-corpus", parents=[common], help="run checks K1-K7 over a corpus")
    p.add_argument("--csv", help="CSV summary path (default: next to --out)")
    p.add_argument("--timing", action="store_true", help="record wall time in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify-extremal", parents=[common], help="chordal* graphs meeting the bound")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (InputError, DomainError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (UnsupportedError, BudgetExceeded) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
