"""Command-line front end.

Subcommands: decide | synthesize | verify | chi-u | scan | closure.
Graphs come in as graph6 (inline via --graph or one per line via --input);
results go out as JSON (default), DOT, or text.  Exit codes: 0 ok, 1 for a
negative verdict where the command promises one, 2 input error, 3 budget
exhausted.  LISTCOLOR_LOG=debug|info|... controls diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional

from .coloring import ListAssignment, SearchBudget, gstar_closure, list_colorings
from .errors import BudgetExceededError, GraphParseError
from .graphs import Graph, encode_graph6, parse_graph6, to_dot
from .search import chi_u, conjecture_check
from .ulc import SEED_CASES, NotU2LC, block_report, is_u2lc, synthesize

log = logging.getLogger("listcolor")

DEFAULT_BUDGET_NODES = 10**8
DEFAULT_BUDGET_SECONDS = 60.0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="listcolor",
        description="Unique list-colorability toolkit for small graphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, lists=False):
        p.add_argument("--graph", help="inline graph6 string")
        p.add_argument("--input", help="path to a graph6 file")
        if lists:
            p.add_argument("--lists", help="path to a JSON list-assignment file")
        p.add_argument("--budget-nodes", type=int, default=DEFAULT_BUDGET_NODES)
        p.add_argument("--budget-seconds", type=float, default=DEFAULT_BUDGET_SECONDS)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--format", choices=("json", "dot", "text"), default="json")

    p = sub.add_parser("decide", help="is the graph uniquely 2-list colorable?")
    common(p)

    p = sub.add_parser("synthesize", help="certified 2-list assignment with a unique coloring")
    common(p)
    p.add_argument("--seed-case", choices=SEED_CASES, default="auto")

    p = sub.add_parser("verify", help="count list colorings of a given assignment")
    common(p, lists=True)

    p = sub.add_parser("chi-u", help="uniquely-list-chromatic profile over bounded k and t")
    common(p)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)

    p = sub.add_parser("scan", help="run a mode over every graph in a file")
    common(p)
    p.add_argument("--mode", choices=("decide", "synthesize", "conjecture"), default="decide")
    p.add_argument("--k-max", type=int, default=2)
    p.add_argument("--seed-case", choices=SEED_CASES, default="auto")

    p = sub.add_parser("closure", help="join all pairs forced apart in every t-coloring")
    common(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--single-pass-closure", action="store_true")
    return ap


def _budget(args) -> SearchBudget:
    return SearchBudget(
        nodes=args.budget_nodes or None, seconds=args.budget_seconds or None
    )


def _load_graph(args) -> Graph:
    if args.graph and args.input:
        raise ValueError("use exactly one of --graph and --input")
    if args.graph:
        return parse_graph6(args.graph)
    if args.input:
        lines = [l for l in open(args.input) if l.strip()]
        if len(lines) != 1:
            raise ValueError(
                f"{args.input} holds {len(lines)} graphs; this command takes one (see scan)"
            )
        return parse_graph6(lines[0])
    raise ValueError("need --graph or --input")


def _emit(obj, args) -> None:
    if args.format == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(json.dumps(obj))


# ---------------------------------------------------------------------------
# Result serialization
# ---------------------------------------------------------------------------

def _blocks_json(report) -> list:
    return [{"vertices": list(v), "class": tag} for v, tag in report]


def _certificate_json(g: Graph, cert) -> dict:
    return {
        "n": g.n,
        "edges": [list(e) for e in g.sorted_edges()],
        "t": cert.assignment.t,
        "lists": cert.assignment.to_dict(),
        "coloring": {str(v): cert.unique_coloring[v] for v in range(g.n)},
        "verified": cert.verified,
        "trace": list(cert.trace),
    }


def _chi_u_json(summary) -> dict:
    return {
        "per_k": [
            {
                "k": r.k,
                "t_min": r.t_min,
                "witness": r.witness.to_dict() if r.witness else None,
                "searched_t_range": list(r.searched_t_range),
                "exhaustive": r.exhaustive,
            }
            for r in summary.per_k
        ],
        "max_t_min": summary.max_t_min,
        "t_truncated": summary.t_truncated,
        "note": "max_t_min is a lower bound: k is capped and t ranges may truncate",
    }


def _conjecture_json(rep) -> dict:
    def rows(rs):
        return [
            {
                "k": r.k,
                "t_min": r.t_min,
                "searched_t_range": list(r.searched_t_range),
                "exhaustive": r.exhaustive,
            }
            for r in rs
        ]

    return {
        "graph6": rep.graph6,
        "delta_plus_1": rep.delta_plus_1,
        "status": rep.status,
        "per_k": rows(rep.per_k),
        "probes": rows(rep.probes),
        "is_complete": rep.is_complete,
        "is_odd_cycle": rep.is_odd_cycle,
    }


def _assignment_labels(g: Graph, L: ListAssignment, coloring=None) -> dict:
    labels = {}
    for v in range(g.n):
        body = "{" + ",".join(str(c) for c in sorted(L.lists[v])) + "}"
        if coloring is not None:
            body += f" -> {coloring[v]}"
        labels[v] = body
    return labels


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_decide(args) -> int:
    g = _load_graph(args)
    verdict = is_u2lc(g)
    report = block_report(g)
    if args.format == "dot":
        sys.stdout.write(to_dot(g))
        return 0
    if args.format == "text":
        print(f"u2lc: {verdict}")
        for verts, tag in report:
            print(f"  block {list(verts)}: {tag}")
        return 0
    _emit({"u2lc": verdict, "blocks": _blocks_json(report)}, args)
    return 0


def cmd_synthesize(args) -> int:
    g = _load_graph(args)
    res = synthesize(g, budget=_budget(args), seed_case=args.seed_case, jobs=args.jobs)
    if isinstance(res, NotU2LC):
        _emit({"u2lc": False, "blocks": _blocks_json(res.blocks)}, args)
        return 1
    if args.format == "dot":
        labels = _assignment_labels(g, res.assignment, res.unique_coloring)
        sys.stdout.write(to_dot(g, labels))
        return 0
    if args.format == "text":
        print(f"t = {res.assignment.t}, verified = {res.verified}")
        for v in range(g.n):
            print(f"  {v}: {sorted(res.assignment.lists[v])} -> {res.unique_coloring[v]}")
        return 0
    _emit(_certificate_json(g, res), args)
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args)
    if not args.lists:
        raise ValueError("verify needs --lists")
    with open(args.lists) as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "lists" in data:
        data = data["lists"]
    L = ListAssignment.from_dict(data, g.n)
    count, cols = list_colorings(g, L, 2, _budget(args))
    unique = count == 1
    out = {
        "colorings_found": count if count < 2 else "2+",
        "unique": unique,
        "coloring": {str(v): cols[0][v] for v in range(g.n)} if unique else None,
    }
    if args.format == "text":
        print(f"colorings: {out['colorings_found']}, unique: {unique}")
        return 0
    _emit(out, args)
    return 0


def cmd_chi_u(args) -> int:
    g = _load_graph(args)
    summary = chi_u(g, args.k_max, args.t_max, _budget(args))
    if args.format == "text":
        print(f"{'k':>3} {'t_min':>6} {'range':>10} exhaustive")
        for r in summary.per_k:
            rng = f"{r.searched_t_range[0]}..{r.searched_t_range[1]}"
            print(f"{r.k:>3} {r.t_min:>6} {rng:>10} {r.exhaustive}")
        print(f"max t_min (lower bound): {summary.max_t_min}")
        return 0
    _emit(_chi_u_json(summary), args)
    return 0


def cmd_closure(args) -> int:
    g = _load_graph(args)
    closed = gstar_closure(
        g, args.t, single_pass=args.single_pass_closure, budget=_budget(args)
    )
    if args.format == "dot":
        sys.stdout.write(to_dot(closed))
        return 0
    added = sorted(closed.edges - g.edges)
    _emit(
        {
            "n": g.n,
            "t": args.t,
            "single_pass": args.single_pass_closure,
            "added_edges": [list(e) for e in added],
            "graph6": encode_graph6(closed),
        },
        args,
    )
    return 0


# ---------------------------------------------------------------------------
# Scan
# ---------------------------------------------------------------------------

def _scan_line(job):
    index, line, mode, k_max, seed_case, nodes, seconds = job
    out = {"index": index, "graph6": line}
    try:
        g = parse_graph6(line)
        budget = SearchBudget(nodes=nodes or None, seconds=seconds or None)
        if mode == "decide":
            out["u2lc"] = is_u2lc(g)
            out["blocks"] = _blocks_json(block_report(g))
        elif mode == "synthesize":
            res = synthesize(g, budget=budget, seed_case=seed_case)
            if isinstance(res, NotU2LC):
                out["u2lc"] = False
                out["blocks"] = _blocks_json(res.blocks)
            else:
                out["u2lc"] = True
                out.update(_certificate_json(g, res))
        else:  # conjecture
            rep = conjecture_check(g, k_max, budget)
            out.update(_conjecture_json(rep))
    except BudgetExceededError:
        out["error"] = "budget"
    except (GraphParseError, ValueError) as exc:
        out["error"] = str(exc)
    return out


def _summary_key(record, mode: str) -> str:
    if "error" in record:
        return "errors"
    if mode == "conjecture":
        return record["status"]
    return "u2lc_true" if record.get("u2lc") else "u2lc_false"


def cmd_scan(args) -> int:
    if not args.input:
        raise ValueError("scan needs --input")
    lines = [l.strip() for l in open(args.input) if l.strip()]
    jobs = [
        (i, line, args.mode, args.k_max, args.seed_case, args.budget_nodes, args.budget_seconds)
        for i, line in enumerate(lines)
    ]
    if args.jobs > 1 and jobs:
        try:
            from multiprocessing import Pool

            with Pool(processes=args.jobs) as pool:
                records = list(pool.imap(_scan_line, jobs))
        except (ImportError, OSError):
            log.warning("worker pool unavailable; scanning sequentially")
            records = [_scan_line(j) for j in jobs]
    else:
        records = [_scan_line(j) for j in jobs]

    counts = {}
    for rec in records:
        print(json.dumps(rec))
        key = _summary_key(rec, args.mode)
        counts[key] = counts.get(key, 0) + 1
    print(json.dumps({"summary": {"lines": len(records), **dict(sorted(counts.items()))}}))
    return 0


# ---------------------------------------------------------------------------

_COMMANDS = {
    "decide": cmd_decide,
    "synthesize": cmd_synthesize,
    "verify": cmd_verify,
    "chi-u": cmd_chi_u,
    "scan": cmd_scan,
    "closure": cmd_closure,
}


def main(argv: Optional[list] = None) -> int:
    level = os.environ.get("LISTCOLOR_LOG", "warning").upper()
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level, logging.WARNING))
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (GraphParseError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
