"""Command-line interface.

    detdim compute lambda graph.g6
    detdim verify thm-4.2 --corpus all-connected-n7
    detdim families gen G_r 6 --format edgelist
    detdim corpus-extremes --corpus all-connected-n6
    detdim find-ore-witness 6

Exit codes: 0 success, 1 a verification found failures, 2 malformed input
or unknown statement, 3 violated precondition, 4 cap or time budget hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import families as fam
from . import harness
from .errors import GraphError
from .graph import Graph, emit_edgelist, emit_graph6, read_graphs
from .greedy import greedy_determining_sets, greedy_distinguishing_sets, greedy_ld_set, run_algorithm1
from .invariants import (
    chromatic_number,
    clique_number,
    domination_number,
    independence_number,
    k_domination_number,
    location_domination_number,
    metric_dimension,
    upper_domination_number,
)
from .matching import maximum_matching
from .symmetry import determining_number

INVARIANTS = ("dim", "det", "lambda", "gamma", "gamma-k", "Gamma", "alpha", "omega", "chi", "alpha-prime", "greedy")


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _budget(args) -> float | None:
    return None if args.time_budget_ms is None else args.time_budget_ms / 1000.0


def _greedy_row(g: Graph, u0: int) -> dict:
    gp = run_algorithm1(g, u0)
    dist = greedy_distinguishing_sets(gp)
    dets = greedy_determining_sets(gp)
    ld = greedy_ld_set(g, gp)
    return {
        "u0": u0, "a": sorted(gp.a), "b": sorted(gp.b), "c": sorted(gp.c), "a_order": list(gp.a_order),
        "distinguishing": [sorted(s) for s in dist], "determining": [sorted(s) for s in dets],
        "ld": sorted(ld), "ld_size": len(ld), "det_size": min(len(s) for s in dets),
    }


def compute_one(what: str, g: Graph, args) -> dict:
    cap, tb = args.cap, _budget(args)
    kw = {} if cap is None else {"cap": cap}
    if what == "dim":
        res = metric_dimension(g, time_budget=tb, **kw)
    elif what == "det":
        res = determining_number(g, cap=cap, time_budget=tb)
    elif what == "lambda":
        res = location_domination_number(g, time_budget=tb, **kw)
    elif what == "gamma":
        res = domination_number(g, time_budget=tb, **kw)
    elif what == "gamma-k":
        res = k_domination_number(g, args.k, time_budget=tb, **kw)
    elif what == "Gamma":
        res = upper_domination_number(g, **kw)
    elif what == "alpha":
        res = independence_number(g, **kw)
    elif what == "omega":
        res = clique_number(g, **kw)
    elif what == "chi":
        res = chromatic_number(g, **kw)
    elif what == "alpha-prime":
        m = maximum_matching(g)
        return {"value": len(m), "witness": [list(e) for e in sorted(m.edges)], "method": "blossom"}
    elif what == "greedy":
        if args.all_seeds:
            rows = [_greedy_row(g, u0) for u0 in range(g.n)]
            sizes = [r["ld_size"] for r in rows]
            dsizes = [r["det_size"] for r in rows]
            return {"seeds": rows, "ld_size_min": min(sizes), "ld_size_max": max(sizes),
                    "det_size_min": min(dsizes), "det_size_max": max(dsizes)}
        return _greedy_row(g, args.seed_vertex)
    else:
        raise ValueError(what)
    return res.as_dict()


def cmd_compute(args) -> int:
    graphs = read_graphs(_read_input(args.graph))
    out = []
    for i, g in enumerate(graphs):
        row = {"index": i, "graph6": emit_graph6(g), "n": g.n, "invariant": args.invariant}
        row.update(compute_one(args.invariant, g, args))
        out.append(row)
    if args.format == "json":
        for row in out:
            print(_dumps(row))
    else:
        print("index\tgraph6\tinvariant\tvalue\twitness")
        for row in out:
            value = row.get("value", row.get("ld_size", row.get("ld_size_max")))
            witness = row.get("witness", row.get("ld", ""))
            print(f"{row['index']}\t{row['graph6']}\t{row['invariant']}\t{value}\t{_dumps(witness)}")
    return 0


def _ints(text: str) -> tuple[int, ...]:
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out += range(int(lo), int(hi) + 1)
        else:
            out.append(int(part))
    return tuple(out)


def cmd_verify(args) -> int:
    if args.list:
        for sid, st in harness.STATEMENTS.items():
            print(f"{sid}\t{st.summary}")
        return 0
    if args.statement is None:
        raise SystemExit("verify: a statement id is required (see --list)")
    options = {}
    if args.r is not None:
        options["r"] = _ints(args.r)
    if args.orders is not None:
        options["n"] = _ints(args.orders)
    if args.q is not None:
        options["q"] = args.q
    if args.s is not None:
        options["s"] = _ints(args.s)
    if args.k is not None:
        options["k"] = args.k
    if args.seed_vertex is not None and not args.all_seeds:
        options["seed_vertex"] = args.seed_vertex
    if args.cap is not None:
        options["cap"] = args.cap
    if args.time_budget_ms is not None:
        options["time_budget"] = args.time_budget_ms / 1000.0
    report = harness.verify(
        args.statement, corpora_text=args.corpus, witnesses=not args.no_witnesses, jobs=args.jobs,
        seed=args.seed, n=args.n, count=args.count, options=options,
    )
    text = report.to_jsonl() if args.format == "json" else report.to_tsv()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plots import plot_verification

        plot_verification(report, args.plot)
    s = report.summary
    print(f"{s['statement_id']}: {s['pass']} pass, {s['fail']} fail, {s['skip']} skipped", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_families(args) -> int:
    if args.action == "list":
        for name in fam.NAMES:
            print(name)
        return 0
    spec = fam.FamilySpec(args.name, tuple(args.params))
    g = fam.gen(spec)
    if args.format == "edgelist":
        sys.stdout.write(emit_edgelist(g))
        if args.labels:
            print("# labels " + " ".join(g.label(v) for v in range(g.n)))
    else:
        print(emit_graph6(g))
    return 0


def cmd_extremes(args) -> int:
    if args.corpus:
        items = []
        for text in args.corpus:
            items += harness.corpus_items(harness.parse_corpus(text, seed=args.seed))
        ids, graphs = [i for i, _ in items], [g for _, g in items]
    else:
        graphs = read_graphs(_read_input(args.graph))
        ids = None
    report = harness.corpus_extremes(graphs, ids=ids, cap=args.cap, jobs=args.jobs)
    sys.stdout.write(report.to_jsonl() if args.format == "json" else report.to_tsv())
    if args.plot:
        from .plots import plot_extremes

        plot_extremes(report, args.plot)
    s = report.summary
    ok = not s["chain_violations"] and not s["twin_free_bound_violations"]
    return 0 if ok else 1


def cmd_ore(args) -> int:
    found = harness.find_ore_witness(args.max_n, min_n=args.min_n)
    if args.format == "json":
        print(_dumps({"found": found is not None, "max_n": args.max_n, "witness": found}))
    elif found is None:
        print(f"# no witness with n <= {args.max_n}")
    else:
        print(found["graph6"])
        print("# set " + " ".join(map(str, found["set"])))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="detdim", description="Exact resolvability and location-domination toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        sp.add_argument("--cap", type=int, default=None, help="largest order the exact solvers accept")
        sp.add_argument("--time-budget-ms", type=int, default=None)
        sp.add_argument("--seed", type=int, default=0, help="seed for random corpora")

    c = sub.add_parser("compute", help="compute one invariant with a witness")
    c.add_argument("invariant", choices=INVARIANTS)
    c.add_argument("graph", nargs="?", help="graph6 or edge-list file (default stdin)")
    c.add_argument("--k", type=int, default=2, help="k for gamma-k")
    c.add_argument("--seed-vertex", type=int, default=0, help="u0 for the greedy partition")
    c.add_argument("--all-seeds", action="store_true", help="run the greedy partition from every vertex")
    common(c)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="check a statement on witnesses and corpora")
    v.add_argument("statement", nargs="?")
    v.add_argument("--list", action="store_true", help="list statement ids")
    v.add_argument("--corpus", action="append", help="corpus spec; repeatable")
    v.add_argument("--n", help="order or range lo..hi for random corpora")
    v.add_argument("--count", type=int)
    v.add_argument("--r", help="r values for the G_r/H_r table, e.g. 6,7")
    v.add_argument("--orders", help="orders for witness families, e.g. 14..17")
    v.add_argument("--q", type=int)
    v.add_argument("--s", help="s values for T_qs, e.g. 0,3,5")
    v.add_argument("--k", type=int)
    v.add_argument("--seed-vertex", type=int, default=None)
    v.add_argument("--all-seeds", action="store_true")
    v.add_argument("--no-witnesses", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--output", "-o")
    v.add_argument("--plot", help="write a slack figure to this path")
    common(v)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("families", help="named graph families")
    fsub = f.add_subparsers(dest="action", required=True)
    fg = fsub.add_parser("gen")
    fg.add_argument("name", choices=fam.NAMES)
    fg.add_argument("params", type=int, nargs="+")
    fg.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    fg.add_argument("--labels", action="store_true", help="append vertex labels (edgelist only)")
    fsub.add_parser("list")
    f.set_defaults(func=cmd_families)

    e = sub.add_parser("corpus-extremes", help="maxima of dim-Det, lambda-Det, lambda over a corpus")
    e.add_argument("graph", nargs="?")
    e.add_argument("--corpus", action="append")
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--plot")
    common(e)
    e.set_defaults(func=cmd_extremes)

    o = sub.add_parser("find-ore-witness", help="minimal LD set whose complement is not LD")
    o.add_argument("max_n", type=int)
    o.add_argument("--min-n", type=int, default=4)
    common(o)
    o.set_defaults(func=cmd_ore)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
