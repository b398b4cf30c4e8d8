"""critlab: stream graph6 graphs through solve / check / prune / discharge
pipelines with machine-readable output.

One record per input graph, order-stable regardless of --jobs; reruns are
byte-identical (timing fields only appear behind --timing).  Exit codes:
0 completed, 1 violation or certificate found, 2 input error, 3 budget
exhausted somewhere.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import multiprocessing
import os
import sys
import time
from fractions import Fraction

from . import bounds, discharge as discharge_mod, fans, lemmas
from .coloring import PartialEdgeColoring
from .graph6 import Graph6Error, iter_graph6, parse_graph6, write_graph6
from .solver import (
    BudgetExhausted,
    SolveBudget,
    chromatic_index,
    color_minus_edge,
    is_edge_delta_critical,
    is_k_edge_colorable,
)

EXIT_OK, EXIT_FOUND, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _budget(args) -> SolveBudget:
    return SolveBudget(
        node_limit=args.budget_nodes if args.budget_nodes else None,
        wall_limit=args.budget_secs if args.budget_secs else None,
    )


def _parse_q(text: str):
    if text == "auto":
        return "auto"
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(text)


def _q_for(graph, qspec):
    if qspec == "auto":
        return bounds.q_of(graph.delta).value
    return qspec


# -- per-graph workers (must be picklable for multiprocessing) ---------------


def _work(task):
    index, line, command, opts = task
    rec: dict = {"index": index, "graph6": line}
    start = time.monotonic()
    try:
        g = parse_graph6(line)
    except Graph6Error as exc:
        rec["error"] = str(exc)
        return rec
    budget = SolveBudget(opts.get("budget_nodes") or None, opts.get("budget_secs") or None)
    try:
        if command == "chi":
            chi = chromatic_index(g, budget)
            rec.update(n=g.n, m=g.m, delta=g.delta, chi_prime=chi,
                       graph_class=(1 if chi <= g.delta else 2) if g.m else None)
        elif command == "critical":
            if g.m == 0:
                rec.update(delta=0, chi_prime=0, critical=False, nodes=0)
            else:
                v = is_edge_delta_critical(g, budget)
                rec.update(delta=g.delta, chi_prime=v.chi_prime, critical=v.is_critical,
                           nodes=v.nodes)
        elif command == "filter":
            rec.update(keep=g.m > 0 and is_edge_delta_critical(g, budget).is_critical)
        elif command == "lemmas":
            which = opts["which"]
            q = opts.get("q")
            verdicts = []
            if "val" in which:
                verdicts.append(lemmas.check_val(g))
            if "w22" in which:
                verdicts.append(lemmas.check_w22(g))
            if "w23" in which:
                verdicts.append(lemmas.check_w23(g))
            if "ppp" in which:
                verdicts.append(lemmas.check_ppp(g, _q_for(g, q)))
            if "pp" in which:
                verdicts.append(lemmas.check_pp(g, _q_for(g, q)))
            rec.update(delta=g.delta,
                       verdicts=[v.to_json_obj() for v in verdicts],
                       violation=any(not v.holds for v in verdicts))
        elif command == "prune":
            r = lemmas.prune(
                g, budget,
                coloring_samples=opts.get("coloring_samples", 4),
                flip_samples=opts.get("flip_samples", 8),
                claim4=opts.get("claim4", False),
                seed=opts.get("seed", 0),
            )
            rec.update(
                delta=g.delta,
                certificate=r.certificate.to_json_obj() if r.certificate else None,
                stages=r.stages,
                inconclusive=r.inconclusive,
            )
            if r.budget_exhausted:
                rec["budget_exhausted"] = True
        elif command == "fans":
            rec.update(delta=g.delta, fans=_fan_traces(g, budget))
        elif command == "discharge":
            q = _q_for(g, opts.get("q", "auto"))
            ledger = discharge_mod.discharge(g, q)
            part = discharge_mod.partition(g, q, opts.get("c", 18))
            rec.update(ledger=ledger.to_json_obj(), partition=part.to_json_obj(),
                       conserved=ledger.conserved())
        else:
            rec["error"] = f"unknown command {command}"
    except BudgetExhausted as exc:
        rec["budget_exhausted"] = True
        rec["detail"] = str(exc)
    except (ValueError, Graph6Error) as exc:
        rec["error"] = str(exc)
    if opts.get("timing"):
        rec["elapsed_ms"] = round(1000 * (time.monotonic() - start), 3)
    return rec


def _fan_traces(g, budget) -> list[dict]:
    out = []
    for e in g.edge_ids():
        phi = color_minus_edge(g, e, g.delta, budget)
        if phi is None:
            out.append({"edge": list(g.pair(e)), "delta_colorable": False})
            continue
        u, v = g.pair(e)
        fan = fans.build_vizing_fan(phi, u, v)
        tree = fans.build_tashkinov_tree(phi, e)
        paths = fans.enumerate_kierstead_paths(phi, e, max_edges=3)
        out.append({
            "edge": [u, v],
            "delta_colorable": True,
            "vizing_fan": fan.to_json_obj(),
            "tashkinov_tree": tree.to_json_obj(),
            "kierstead_paths": len(paths),
        })
    return out


# -- record output -------------------------------------------------------------


def _emit(records, fmt: str, out) -> None:
    if fmt == "jsonl":
        for rec in records:
            out.write(json.dumps(rec, separators=(",", ":"), default=str) + "\n")
        return
    rows = [
        {k: (json.dumps(v, default=str) if isinstance(v, (dict, list)) else v)
         for k, v in rec.items()}
        for rec in records
    ]
    fields: list[str] = []
    for row in rows:
        for k in row:
            if k not in fields:
                fields.append(k)
    writer = csv.DictWriter(out, fieldnames=fields)
    writer.writeheader()
    writer.writerows(rows)


def _run_stream(args, command: str, opts: dict) -> int:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="ascii") as fh:
            lines = list(iter_graph6(fh))
    else:
        lines = list(iter_graph6(sys.stdin))
    tasks = [(i, line, command, opts) for i, (_, line) in enumerate(lines)]
    jobs = max(1, args.jobs)
    if jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(jobs) as pool:
            records = list(pool.imap(_work, tasks, chunksize=16))
    else:
        records = [_work(t) for t in tasks]

    code = EXIT_OK
    if command == "filter":
        kept = []
        for rec in records:
            if rec.get("error"):
                code = EXIT_INPUT
            elif rec.get("budget_exhausted"):
                code = max(code, EXIT_BUDGET) if code != EXIT_INPUT else code
            elif rec.get("keep"):
                kept.append(rec["graph6"])
        for s in kept:
            sys.stdout.write(s + "\n")
        return code

    found = False
    budget_hit = False
    bad_input = False
    for rec in records:
        if rec.get("error"):
            bad_input = True
        if rec.get("budget_exhausted"):
            budget_hit = True
        if command == "lemmas" and rec.get("violation"):
            found = True
        if command == "prune" and rec.get("certificate"):
            found = True
    _emit(records, args.format, sys.stdout)
    if bad_input:
        return EXIT_INPUT
    if budget_hit:
        return EXIT_BUDGET
    if found and command in ("lemmas", "prune"):
        return EXIT_FOUND
    return EXIT_OK


def _run_bound(args) -> int:
    lo, _, hi = args.delta.partition("..")
    d_lo = int(lo)
    d_hi = int(hi) if hi else d_lo
    records = []
    for d in range(d_lo, d_hi + 1):
        rec: dict = {"delta": d}
        t1 = bounds.bound_theorem1(d)
        rec["theorem1"] = str(t1.value)
        rec["theorem1_decimal"] = f"{float(t1.value):.5f}"
        rec["improves_woodall"] = t1.improves_woodall
        if args.chain:
            ch = bounds.bound_chain(d, args.c)
            rec["chain_bound"] = str(ch.bound.to_decimal(30))
            rec["chain_route"] = "f" if ch.first_route else "fprime"
            rec["q"] = str(ch.q.to_decimal(30))
            rec["q_branch"] = ch.branch
        if args.table:
            rec["table"] = {
                row.name: row.value_str() for row in bounds.bound_table(d, n=args.n)
            }
        records.append(rec)
    _emit(records, args.format, sys.stdout)
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="critlab",
        description="batch pipelines over graph6 streams for "
                    "edge-chromatic-criticality experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("input", nargs="?", default="-",
                           help="graph6 file ('-' or omitted: stdin)")
        p.add_argument("--jobs", type=int, default=1, help="parallel workers")
        p.add_argument("--budget-nodes", type=int, default=0)
        p.add_argument("--budget-secs", type=float, default=0.0)
        p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
        p.add_argument("--timing", action="store_true",
                       help="include elapsed_ms (breaks byte-for-byte reruns)")

    common(sub.add_parser("chi", help="chromatic index per graph"))
    common(sub.add_parser("critical", help="edge-Delta-criticality verdict per graph"))
    p = sub.add_parser("filter", help="write graph6 of edge-Delta-critical graphs")
    common(p)
    p.add_argument("--critical", action="store_true", default=True,
                   help="keep exactly the edge-Delta-critical graphs (default)")

    p = sub.add_parser("lemmas", help="run adjacency-lemma checkers")
    common(p)
    p.add_argument("--which", default="val,w22,w23",
                   help="comma list from val,w22,w23,ppp,pp")
    p.add_argument("--q", default="auto", help="q for ppp/pp: auto or rational p/q")

    p = sub.add_parser("prune", help="non-criticality pruning cascade")
    common(p)
    p.add_argument("--coloring-samples", type=int, default=4)
    p.add_argument("--flip-samples", type=int, default=8)
    p.add_argument("--claim4", action="store_true",
                   help="enable the Y2-partition probe (Delta >= 6)")

    p = sub.add_parser("fans", help="trace fan/tree structures per edge")
    common(p)

    p = sub.add_parser("discharge", help="per-vertex charge ledgers")
    common(p)
    p.add_argument("--q", default="auto", help="auto (needs Delta >= 56) or rational")
    p.add_argument("--c", type=int, default=18)

    p = sub.add_parser("bound", help="bound calculator (no graph input)")
    p.add_argument("--delta", required=True, help="single value or range A..B")
    p.add_argument("--chain", action="store_true")
    p.add_argument("--table", action="store_true")
    p.add_argument("--c", type=int, default=18)
    p.add_argument("--n", type=int, default=None,
                   help="vertex count for the conjectured target row")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")

    args = parser.parse_args(argv)

    if args.command == "bound":
        return _run_bound(args)

    opts = {
        "budget_nodes": args.budget_nodes,
        "budget_secs": args.budget_secs,
        "timing": args.timing,
        "seed": int(os.environ.get("CRITLAB_SEED", "0")),
    }
    if args.command == "lemmas":
        try:
            opts["q"] = _parse_q(args.q)
        except (ValueError, ZeroDivisionError):
            print(f"bad --q value: {args.q}", file=sys.stderr)
            return EXIT_INPUT
        opts["which"] = [w.strip() for w in args.which.split(",") if w.strip()]
        bad = set(opts["which"]) - {"val", "w22", "w23", "ppp", "pp"}
        if bad:
            print(f"unknown lemmas: {sorted(bad)}", file=sys.stderr)
            return EXIT_INPUT
    if args.command == "prune":
        opts["coloring_samples"] = args.coloring_samples
        opts["flip_samples"] = args.flip_samples
        opts["claim4"] = args.claim4
    if args.command == "discharge":
        try:
            opts["q"] = _parse_q(args.q)
        except (ValueError, ZeroDivisionError):
            print(f"bad --q value: {args.q}", file=sys.stderr)
            return EXIT_INPUT
        opts["c"] = args.c

    try:
        return _run_stream(args, args.command, opts)
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
