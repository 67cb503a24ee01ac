"""Command-line front end.

Exit status: 0 when nothing fails, 1 when some instance fails (or a hunt
finds a counterexample), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Sequence

from .checks import CHECKS, HUNTS, Instance
from .complexes import independence_complex, parse_complex
from .corpus import CorpusError
from .domination import GRAPH_INVARIANTS, h_side
from .formats import FormatError, parse_graph_text, to_edge_list
from .graphs import FAMILIES, BipartiteGraph, build_family
from .homology import BOTH_FIELDS, FieldTag, betti_table, proj_dim, regularity
from .primes import GAP_FAMILIES
from .runner import DEFAULT_TIMEOUT, run

log = logging.getLogger("pdreg")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FIELD_INVARIANTS = ("pd", "reg")
ALL_INVARIANTS = tuple(GRAPH_INVARIANTS) + FIELD_INVARIANTS + ("h_side",)


class UsageError(Exception):
    pass


def parse_fields(text: str) -> list[FieldTag]:
    if text == "both":
        return list(BOTH_FIELDS)
    try:
        return [FieldTag.parse(text)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load_graph(spec: str):
    path = Path(spec)
    text = path.read_text() if path.exists() else spec
    return parse_graph_text(text)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


# --- subcommands -------------------------------------------------------------------------

def cmd_check(args: argparse.Namespace, mode: str) -> int:
    fields = parse_fields(args.field)
    extra: list[Instance] = []
    if getattr(args, "complex", None):
        d = parse_complex(Path(args.complex).read_text())
        extra.append(Instance("complex", args.complex, d))
    if not args.corpus and not extra and not args.random_clutters:
        raise UsageError("give --corpus, --complex or --random-clutters")
    rep = run(args.id, args.corpus or "", fields, mode=mode, jobs=args.jobs, timeout=args.timeout_secs,
              random_count=args.random_clutters, seed=args.seed, budget_secs=args.budget_secs, extra=extra)
    for bad in rep.bad_records:
        log.warning("skipped malformed record %s: %s", bad.origin, bad.message)
    if args.out:
        _write(rep.dumps(), args.out)
    print(rep.summary())
    if mode == "hunt":
        first = rep.failures[:1]
        if first:
            print("counterexample:", json.dumps(first[0].to_json(), ensure_ascii=False))
        else:
            print("none found within corpus/budget")
    else:
        for v in rep.failures[: args.show]:
            print("fails:", json.dumps(v.to_json(), ensure_ascii=False))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_invariants(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    selection = [s.strip() for s in args.select.split(",") if s.strip()]
    if not selection:
        raise UsageError("--select needs at least one invariant")
    unknown = [s for s in selection if s not in ALL_INVARIANTS]
    if unknown:
        raise UsageError(f"unknown invariant(s) {', '.join(unknown)}; choose from {', '.join(ALL_INVARIANTS)}")
    fields = parse_fields(args.field)
    values: dict = {}
    errors: dict[str, str] = {}
    timing: dict[str, float] = {}
    for name in selection:
        start = time.perf_counter()
        try:
            if name in GRAPH_INVARIANTS:
                values[name] = GRAPH_INVARIANTS[name](g)
            elif name == "h_side":
                b = BipartiteGraph.from_graph(g)
                values[name] = {"X": h_side(b, 0), "Y": h_side(b, 1)}
            else:
                fn = proj_dim if name == "pd" else regularity
                values[name] = {f.value: fn(g, f) for f in fields}
        except ValueError as exc:
            errors[name] = str(exc)
        timing[name] = round(time.perf_counter() - start, 6)
    out: dict = {"graph": {"n": g.n, "edges": [list(e) for e in g.sorted_edges]}, "values": values,
                 "seconds": timing}
    if errors:
        out["errors"] = errors
    if args.betti:
        out["betti"] = [betti_table(independence_complex(g), f).to_json() for f in fields]
    _write(json.dumps(out, indent=1, ensure_ascii=False), args.out)
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"parameters must be comma-separated integers, got {text!r}") from None


def cmd_family(args: argparse.Namespace) -> int:
    params = _int_list(args.params)
    try:
        if args.name in GAP_FAMILIES:
            gap = GAP_FAMILIES[args.name](*params)
            g, meta = gap.graph, gap.metadata()
        else:
            g, meta = build_family(args.name, params), {"family": args.name, "params": params}
    except TypeError:
        raise UsageError(f"wrong number of parameters for family {args.name!r}") from None
    _write(to_edge_list(g), args.out)
    if args.meta:
        _write(json.dumps(meta, indent=1), args.meta)
    return EXIT_OK


def cmd_list(args: argparse.Namespace) -> int:
    for table in (CHECKS, HUNTS):
        for s in table.values():
            tag = "field-sensitive" if s.field_sensitive else "combinatorial"
            print(f"{s.id:4} {s.kind:8} {tag:16} {s.text}")
    return EXIT_OK


# --- parser ---------------------------------------------------------------------------------

def _add_run_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("id")
    p.add_argument("--corpus", default="", help="corpus descriptor, e.g. 'labeled:n<=5, connected'")
    p.add_argument("--field", default="both", help="gf2, q or both (default both)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timeout-secs", type=float, default=DEFAULT_TIMEOUT, help="per-instance wall clock limit")
    p.add_argument("--budget-secs", type=float, default=None, help="stop dispatching after this long")
    p.add_argument("--random-clutters", type=int, default=0, help="add this many seeded random clutters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--complex", help="extra complex instance: file with 'ground k' then k facet lines")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--show", type=int, default=5, help="failures echoed to stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pdreg", description="Exact regularity, projective dimension and "
                                 "domination invariants of small graphs and complexes.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)
    _add_run_options(sub.add_parser("check", help="run a registered statement over a corpus"))
    _add_run_options(sub.add_parser("hunt", help="search a corpus for a counterexample to an open question"))
    inv = sub.add_parser("invariants", help="compute selected invariants of one graph")
    inv.add_argument("--graph", required=True, help="graph6 string, or a file holding graph6 or an edge list")
    inv.add_argument("--select", required=True, help=f"comma list from: {', '.join(ALL_INVARIANTS)}")
    inv.add_argument("--field", default="gf2")
    inv.add_argument("--betti", action="store_true", help="include the Betti table of Ind(G)")
    inv.add_argument("--out")
    fam = sub.add_parser("family", help="write a named graph as an edge list")
    fam.add_argument("name", choices=sorted(GAP_FAMILIES) + list(FAMILIES))
    fam.add_argument("--params", default="", help="comma-separated integers, e.g. 3,1,1")
    fam.add_argument("--out")
    fam.add_argument("--meta", help="write family metadata (closed forms, numbering) as JSON here")
    sub.add_parser("list", help="list check and hunt identifiers")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        if args.command in ("check", "hunt"):
            return cmd_check(args, args.command)
        if args.command == "invariants":
            return cmd_invariants(args)
        if args.command == "family":
            return cmd_family(args)
        return cmd_list(args)
    except (UsageError, CorpusError, FormatError, KeyError, OSError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"pdreg: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
