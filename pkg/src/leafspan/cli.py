"""Command line front end.

    leafspan invariants --g6 Bw
    leafspan invariants --named g1 --n 10 --witness
    leafspan gen --family f6 --s 4
    leafspan enumerate --n 7
    leafspan check --enumerate 7 --rules thm4,lem5,lem6

Exit codes: 0 ok, 1 counterexample found (check), 2 usage/parse/budget
error, 3 budget-skipped outcomes with ``check --strict-budget``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from . import constructions
from .enumeration import CorpusError, check_budget, enumerate_connected, read_corpus
from .graph import BudgetError, Graph, GraphError, parse_graph6, write_graph6
from .verifier import InvariantReport, RULES, resolve_rules, run_suite

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

TSV_FIELDS = ("graph6", "n", "size", "delta", "Delta", "connected", "kappa", "alpha", "sigma3",
              "leaf_number", "circumference", "longest_path", "hamiltonian", "traceable",
              "triangle_free", "regular", "two_connected", "family")


class UsageError(Exception):
    pass


def _open_lines(path: str):
    if path == "-":
        return sys.stdin
    return open(path, encoding="ascii")


def _graphs_from_args(args, strict: bool = True) -> Iterator[Graph]:
    if getattr(args, "named", None):
        yield constructions.named(args.named, args.n)
    for text in getattr(args, "g6", None) or []:
        yield parse_graph6(text)
    path = getattr(args, "file", None) or getattr(args, "g6_file", None)
    if path:
        with _open_lines(path) as fh:
            for entry in read_corpus(fh, strict=strict):
                yield entry.graph


def _parse_range(text: str) -> range:
    if "-" in text:
        lo, hi = text.split("-", 1)
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    return str(value)


def cmd_invariants(args, out) -> int:
    graphs = list(_graphs_from_args(args))
    if not graphs:
        raise UsageError("no input graph (use --g6, --file or --named)")
    if args.format == "tsv":
        out.write("\t".join(TSV_FIELDS) + "\n")
    for g in graphs:
        row = InvariantReport(g).to_dict(witness=args.witness)
        if args.format == "tsv":
            out.write("\t".join(_fmt(row.get(k)) for k in TSV_FIELDS) + "\n")
        else:
            out.write(json.dumps(row, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_gen(args, out) -> int:
    if args.named:
        graphs = [constructions.named(args.named, args.n)]
    elif args.family:
        fam = args.family
        required = {"f3": "abc", "f4": "ab", "f5": "s", "f6": "s"}.get(fam, "")
        missing = [f"--{x}" for x in required if getattr(args, x) is None]
        if missing:
            raise UsageError(f"{fam} needs {' '.join(missing)}")
        if fam == "f3":
            graphs = [constructions.family_f3(args.a, args.b, args.c)]
        elif fam == "f4":
            graphs = [constructions.family_f4(args.a, args.b)]
        elif fam == "f5":
            graphs = [constructions.family_f5(args.s)]
        elif fam == "f6":
            graphs = [constructions.family_f6(args.s)]
        else:
            if not (args.part_a and args.part_b):
                raise UsageError(f"{fam} needs --part-a and --part-b graph6 strings")
            compose = constructions.compose_f1 if fam == "f1" else constructions.compose_f2
            graphs = [compose(parse_graph6(args.part_a), parse_graph6(args.part_b))]
    else:
        raise UsageError("gen needs --family or --named")
    for g in graphs:
        out.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    for g in enumerate_connected(args.n, allow_large=args.allow_large, method=args.method):
        out.write(write_graph6(g) + "\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    rules = resolve_rules(args.rules)
    if args.enumerate:
        try:
            orders = _parse_range(args.enumerate)
        except ValueError:
            raise UsageError(f"bad --enumerate value {args.enumerate!r}") from None
        # fail on budget before producing any output
        for n in orders:
            check_budget(n, args.allow_large)
        source = (g for n in orders for g in enumerate_connected(n, allow_large=args.allow_large))
        corpus = f"connected graphs of order {args.enumerate}"
    else:
        source = _graphs_from_args(args, strict=args.strict)
        corpus = args.g6_file or "inline"
    report = run_suite(source, rules, jobs=args.jobs, corpus=corpus)
    if args.format == "tsv":
        out.write(report.to_tsv())
    else:
        out.write(report.to_json(timing=not args.no_timing) + "\n")
    return report.exit_status(strict_budget=args.strict_budget)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="leafspan", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_inputs(p, file_flag):
        p.add_argument("--g6", action="append", help="inline graph6 string (repeatable)")
        p.add_argument(file_flag, help="graph6 file, '-' for stdin")
        p.add_argument("--named", choices=sorted(constructions.NAMED))
        p.add_argument("--n", type=int, help="order for named graphs that need one")

    p = sub.add_parser("invariants", help="compute invariants per graph")
    add_inputs(p, "--file")
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.add_argument("--witness", action="store_true", help="include certificates")

    p = sub.add_parser("gen", help="generate a named graph or family template")
    p.add_argument("--family", choices=["f1", "f2", "f3", "f4", "f5", "f6"])
    p.add_argument("--named", choices=sorted(constructions.NAMED))
    p.add_argument("--n", type=int)
    for name in ("a", "b", "c", "s"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--part-a")
    p.add_argument("--part-b")

    p = sub.add_parser("enumerate", help="all connected graphs of one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--allow-large", action="store_true", help="permit order 10")
    p.add_argument("--method", choices=["parent", "global"], default="parent")

    p = sub.add_parser("check", help="run theorem/lemma rules over a corpus")
    add_inputs(p, "--g6-file")
    p.add_argument("--enumerate", metavar="N or LO-HI")
    p.add_argument("--allow-large", action="store_true")
    p.add_argument("--rules", default="all",
                   help="comma list of rule ids or 'all'; known: " + ",".join(RULES))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.add_argument("--strict", action="store_true", help="abort on the first bad corpus line")
    p.add_argument("--strict-budget", action="store_true",
                   help="exit 3 when any outcome was budget-skipped")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms from JSON")
    return parser


COMMANDS = {"invariants": cmd_invariants, "gen": cmd_gen, "enumerate": cmd_enumerate,
            "check": cmd_check}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, GraphError, BudgetError, CorpusError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"leafspan: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
