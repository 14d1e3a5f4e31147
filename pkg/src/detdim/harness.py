"""Verification harness: statement checks run over graph corpora.

Every statement is a function ``check(g, ctx) -> Outcome | None`` that
computes the quantities involved with the exact solvers or predicate
oracles and compares them with the claimed bound.  ``None`` means the
graph does not satisfy the statement's hypothesis and is skipped.

Reports are plain data, sorted by graph id and serialised with sorted keys
so that two runs with the same corpus parameters give identical bytes.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import corpus as corpora
from .errors import BadParams, CapExceeded, GraphError, MixedOrders, StarIsK2, Timeout, UnknownStatement
from .families import g_r, h_r, t_qs, theorem22_witness, wheel
from .graph import Graph, bits, common_neighbor_excess, complement, emit_graph6, is_tree, read_graphs, to_mask, to_set
from .greedy import (
    check_partition,
    greedy_determining_sets,
    greedy_distinguishing_sets,
    greedy_ld_set,
    run_algorithm1,
)
from .invariants import (
    chromatic_number,
    clique_number,
    distinguishes,
    domination_number,
    dominating_vector,
    erdos_szekeres_bound,
    independence_number,
    is_clique,
    is_distinguishing,
    is_dominating,
    is_independent,
    is_k_dominating,
    is_locating_dominating,
    k_domination_number,
    ld_minimum,
    ld_vector,
    location_domination_number,
    metric_dimension,
    minimal_dominating_masks,
    upper_domination_number,
)
from .matching import (
    Matching,
    brute_force_matching_number,
    edge_case,
    eliminate_um,
    is_matching,
    maximum_matching,
    u_m,
    v1_construction,
)
from .search import all_masks
from .symmetry import determining_number, is_determining
from .trees import is_path, terprime_bound_check, tree_det_lower_bound, tree_metric_dimension
from .twins import K, N, ONE, are_twins, build_tilde, is_twin_free, lift_ld_set, star_graph, twin_decomposition

# exact lambda on twin-containing graphs and on the C4-free corpus stays below this order
LAMBDA_CHECK_CAP = 12


@dataclass
class Outcome:
    values: dict
    bounds: dict
    witnesses: dict
    passed: bool
    slack: int | float | None = None
    note: str | None = None


@dataclass
class Instance:
    graph_id: str
    graph6: str
    n: int
    status: str  # pass | fail | skip
    values: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    slack: int | float | None = None
    note: str | None = None

    def as_dict(self) -> dict:
        d = {
            "graph_id": self.graph_id, "graph6": self.graph6, "n": self.n, "status": self.status,
            "values": self.values, "bounds": self.bounds, "witnesses": self.witnesses,
            "slack": self.slack,
        }
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class VerificationReport:
    statement_id: str
    params: dict
    instances: list[Instance]

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for inst in self.instances:
            counts[inst.status] += 1
        slacks = [i.slack for i in self.instances if i.status != "skip" and i.slack is not None]
        return {
            "statement_id": self.statement_id,
            "pass": counts["pass"],
            "fail": counts["fail"],
            "skip": counts["skip"],
            "max_slack": max(slacks) if slacks else None,
            "min_slack": min(slacks) if slacks else None,
        }

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def failures(self) -> list[Instance]:
        return [i for i in self.instances if i.status == "fail"]

    def to_jsonl(self) -> str:
        lines = [_dumps({"kind": "header", "statement_id": self.statement_id, "params": self.params})]
        lines += [_dumps({"kind": "instance", **i.as_dict()}) for i in self.instances]
        lines.append(_dumps({"kind": "summary", **self.summary}))
        return "\n".join(lines) + "\n"

    def to_tsv(self) -> str:
        rows = ["graph_id\tn\tstatus\tslack\tvalues\tbounds"]
        for i in self.instances:
            rows.append("\t".join([
                i.graph_id, str(i.n), i.status, "" if i.slack is None else _num(i.slack),
                _kv(i.values), _kv(i.bounds),
            ]))
        s = self.summary
        rows.append(f"# {self.statement_id}\tpass={s['pass']}\tfail={s['fail']}\tskip={s['skip']}"
                    f"\tmax_slack={'' if s['max_slack'] is None else _num(s['max_slack'])}")
        return "\n".join(rows) + "\n"


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _num(x) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:.6g}"


def _kv(d: dict) -> str:
    return ",".join(f"{k}={d[k]}" for k in sorted(d))


# corpora ----------------------------------------------------------------------

EXHAUSTIVE = {"all-connected", "all-graphs", "all-trees", "all-twinfree"}
RANDOM = {"random-twinfree", "random-trees", "random-c4free"}
RANDOM_DEFAULTS = {
    "random-twinfree": (4, 14, 500),
    "random-trees": (4, 14, 500),
    "random-c4free": (4, 24, 500),
}


@dataclass(frozen=True)
class CorpusSpec:
    kind: str
    n_min: int = 1
    n_max: int = 7
    count: int = 0
    seed: int = 0
    path: str | None = None

    def as_dict(self) -> dict:
        d = {"kind": self.kind}
        if self.kind == "file":
            d["path"] = self.path
        else:
            d.update(n_min=self.n_min, n_max=self.n_max)
        if self.kind in RANDOM:
            d.update(count=self.count, seed=self.seed)
        return d


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    return int(text), int(text)


def parse_corpus(text: str, *, n: str | None = None, count: int | None = None, seed: int = 0) -> CorpusSpec:
    """Parse a corpus description.

    Forms: ``all-connected-n7`` (order 7 only), ``all-trees-le10`` (orders
    1..10), ``random-twinfree`` with optional inline options
    ``random-twinfree:n=8..24,count=1000,seed=3``, and ``file:PATH``.
    ``n``/``count``/``seed`` are defaults that inline options override.
    """
    if text.startswith("file:"):
        return CorpusSpec("file", path=text[5:])
    m = re.fullmatch(r"(all-[a-z]+)-(n|le)(\d+)", text)
    if m:
        kind, form, k = m.group(1), m.group(2), int(m.group(3))
        if kind not in EXHAUSTIVE:
            raise BadParams(f"unknown corpus {kind!r}")
        return CorpusSpec(kind, k if form == "n" else 1, k)
    kind, _, opts = text.partition(":")
    if kind not in RANDOM:
        raise BadParams(f"unknown corpus {text!r}")
    lo, hi, cnt = RANDOM_DEFAULTS[kind]
    if n is not None:
        lo, hi = _parse_range(n)
    if count is not None:
        cnt = count
    for opt in filter(None, opts.split(",")):
        key, _, val = opt.partition("=")
        if key == "n":
            lo, hi = _parse_range(val)
        elif key == "count":
            cnt = int(val)
        elif key == "seed":
            seed = int(val)
        else:
            raise BadParams(f"unknown corpus option {key!r}")
    if lo < 1 or hi < lo or cnt < 0:
        raise BadParams(f"bad corpus range {lo}..{hi} count {cnt}")
    return CorpusSpec(kind, lo, hi, cnt, seed)


def corpus_items(spec: CorpusSpec) -> list[tuple[str, Graph]]:
    if spec.kind == "file":
        with open(spec.path) as fh:
            graphs = read_graphs(fh.read())
        return [(f"file/{i:05d}", g) for i, g in enumerate(graphs)]
    if spec.kind in EXHAUSTIVE:
        out = []
        for n in range(spec.n_min, spec.n_max + 1):
            if spec.kind == "all-connected":
                gs = corpora.all_graphs(n, True)
            elif spec.kind == "all-graphs":
                gs = corpora.all_graphs(n, False)
            elif spec.kind == "all-trees":
                gs = corpora.all_trees(n)
            else:
                gs = corpora.all_twin_free(n, connected=False)
            out += [(f"{spec.kind}/n{n:02d}/{i:05d}", g) for i, g in enumerate(gs)]
        return out
    gen = {
        "random-twinfree": corpora.random_twin_free_corpus,
        "random-trees": corpora.random_tree_corpus,
        "random-c4free": corpora.random_c4_free_corpus,
    }[spec.kind]
    graphs = gen(spec.count, spec.n_min, spec.n_max, spec.seed)
    return [(f"{spec.kind}/s{spec.seed}/{i:05d}", g) for i, g in enumerate(graphs)]


# solver plumbing --------------------------------------------------------------

def _cap(ctx: dict, default):
    return ctx.get("cap") or default


def _solve(what: str, g: Graph, ctx: dict):
    tb = ctx.get("time_budget")
    if what == "dim":
        if is_tree(g) and ctx.get("tree_formula"):
            return tree_metric_dimension(g)
        return metric_dimension(g, cap=_cap(ctx, 24), time_budget=tb)
    if what == "det":
        return determining_number(g, cap=ctx.get("cap"), time_budget=tb)
    if what == "lambda":
        return location_domination_number(g, cap=_cap(ctx, 24), time_budget=tb)
    raise BadParams(f"unknown quantity {what!r}")


def _w(s) -> list[int]:
    return sorted(s)


def _is_c4_free(g: Graph) -> bool:
    return common_neighbor_excess(g, 2) is None


# statements -------------------------------------------------------------------

def _exact_value(g: Graph, ctx: dict) -> Outcome:
    q, expected = ctx["quantity"], ctx["expected"]
    res = _solve(q, g, ctx)
    return Outcome({q: res.value}, {"expected": expected}, {q: _w(res.witness)},
                   res.value == expected, expected - res.value)


def _lemma21_items(params: dict):
    for r in params.get("r", (6, 7)):
        gr, hr = g_r(r), h_r(r)
        yield f"witness/G{r:02d}/det", gr, {"quantity": "det", "expected": 0}
        yield f"witness/H{r:02d}/det", hr, {"quantity": "det", "expected": 1}
        yield f"witness/coG{r:02d}/dim", complement(gr), {"quantity": "dim", "expected": r}
        yield f"witness/coH{r:02d}/dim", complement(hr), {"quantity": "dim", "expected": r + 1}
        yield f"witness/G{r:02d}/lambda", gr, {"quantity": "lambda", "expected": r + 1}
        yield f"witness/H{r:02d}/lambda", hr, {"quantity": "lambda", "expected": r + 2}


def _difference_equals(g: Graph, ctx: dict) -> Outcome:
    q, expected = ctx["quantity"], ctx["expected"]
    top, det = _solve(q, g, ctx), _solve("det", g, ctx)
    diff = top.value - det.value
    return Outcome({q: top.value, "det": det.value, f"{q}-det": diff}, {"expected": expected},
                   {q: _w(top.witness), "det": _w(det.witness)}, diff == expected, expected - diff)


def _thm22_items(params: dict):
    for n in params.get("n", (14, 15, 16, 17)):
        yield f"witness/co{n:02d}", theorem22_witness(n), {"quantity": "dim", "expected": n // 2 - 1}
        yield f"witness/tree{n:02d}", theorem22_witness(n, complemented=False), \
            {"quantity": "lambda", "expected": n // 2}


def _twin_structure(g: Graph, ctx: dict) -> Outcome:
    td = twin_decomposition(g)
    problems = []
    seen = 0
    for cls, typ in zip(td.classes, td.class_type):
        cm = to_mask(cls)
        if seen & cm:
            problems.append("classes overlap")
        seen |= cm
        members = sorted(cls)
        if any(not are_twins(g, members[0], v) for v in members[1:]):
            problems.append(f"class {members} holds non-twins")
        want = ONE if len(cls) == 1 else K if is_clique(g, cls) else N if is_independent(g, cls) else "?"
        if typ != want:
            problems.append(f"class {members} typed {typ}, expected {want}")
    if seen != g.full:
        problems.append("classes do not cover V")
    for i, j in itertools.combinations(range(td.r), 2):
        if are_twins(g, td.representative[i], td.representative[j]):
            problems.append(f"classes {i} and {j} should be merged")
    if len(td.omega) != g.n - td.r:
        problems.append("|omega| != n - r")
    rng = random.Random(f"{ctx.get('seed', 0)}/{ctx['gid']}")
    trials = 0 if td.r == g.n else ctx.get("trials", 100)
    for _ in range(trials):
        reps = [rng.choice(sorted(c)) for c in td.classes]
        if star_graph(g, reps).adj != td.star.adj:
            problems.append(f"G* changes under representatives {reps}")
            break
    return Outcome({"r": td.r, "omega": len(td.omega), "trials": trials}, {"omega": g.n - td.r},
                   {"omega": _w(td.omega)}, not problems, 0, "; ".join(problems) or None)


def _one_classes_not_twins(g: Graph, ctx: dict) -> Outcome:
    td = twin_decomposition(g)
    ones = [i for i, t in enumerate(td.class_type) if t == ONE]
    bad = [(i, j) for i, j in itertools.combinations(ones, 2) if are_twins(td.star, i, j)]
    return Outcome({"one_classes": len(ones), "twin_pairs": len(bad)}, {"twin_pairs": 0},
                   {"pairs": [list(p) for p in bad]}, not bad, -len(bad))


def _det_vs_order(g: Graph, ctx: dict) -> Outcome | None:
    # K1 has lambda = 1 > r - 1 = 0, so the order-1 graph is left out
    if not g.connected or g.n < 2:
        return None
    td = twin_decomposition(g)
    det, lam = _solve("det", g, ctx), _solve("lambda", g, ctx)
    ok = det.value >= g.n - td.r and lam.value - det.value <= td.r - 1
    return Outcome({"det": det.value, "lambda": lam.value, "r": td.r},
                   {"det_min": g.n - td.r, "lambda-det_max": td.r - 1},
                   {"det": _w(det.witness), "lambda": _w(lam.witness)}, ok, det.value - (g.n - td.r))


def _tilde_twin_free(g: Graph, ctx: dict) -> Outcome | None:
    if not g.connected:
        return None
    td = twin_decomposition(g)
    try:
        tg = build_tilde(g, td)
    except StarIsK2:
        return None
    t = tg.graph
    ok = is_twin_free(t) and t.n <= g.n
    ok = ok and all(t.degree(p) == 1 for p in tg.pendants)
    ok = ok and all(td.class_type[a] != ONE for a in tg.attach.values())
    return Outcome({"n_tilde": t.n, "pendants": len(tg.pendants), "r": td.r}, {"n": g.n},
                   {"pendants": _w(tg.attach.values())}, ok, g.n - t.n)


def _tilde_lambda(g: Graph, ctx: dict) -> Outcome | None:
    if not g.connected or g.n > _cap(ctx, LAMBDA_CHECK_CAP):
        return None
    td = twin_decomposition(g)
    try:
        tg = build_tilde(g, td)
    except StarIsK2:
        return None
    lam_t = ld_minimum(tg.graph)
    lifted = lift_ld_set(g, td, tg, lam_t.witness)
    lam = location_domination_number(g)
    det = _solve("det", g, ctx)
    bound = lam_t.value + g.n - td.r
    ok = lam.value <= len(lifted) <= bound and lam.value - det.value <= lam_t.value
    return Outcome({"lambda": lam.value, "lambda_tilde": lam_t.value, "lifted": len(lifted), "det": det.value},
                   {"lambda_max": bound}, {"lifted": _w(lifted), "tilde": _w(lam_t.witness)},
                   ok, bound - lam.value)


def _thm36_items(params: dict):
    """Corpus form: every lambda - Det is at most the largest lambda of a twin-free member of that order."""
    items = list(_corpus_stream(params))
    best: dict[int, int] = {}
    for _, g, _ in items:
        if is_twin_free(g) and g.connected:
            best[g.n] = max(best.get(g.n, 0), location_domination_number(g).value)
    for gid, g, ctx in items:
        yield gid, g, {**ctx, "twin_free_max": best.get(g.n)}


def _thm36(g: Graph, ctx: dict) -> Outcome | None:
    if not g.connected or g.n < 4 or ctx.get("twin_free_max") is None:
        return None
    lam, det = _solve("lambda", g, ctx), _solve("det", g, ctx)
    diff = lam.value - det.value
    bound = ctx["twin_free_max"]
    return Outcome({"lambda": lam.value, "det": det.value, "lambda-det": diff},
                   {"twin_free_lambda_max": bound},
                   {"lambda": _w(lam.witness), "det": _w(det.witness)}, diff <= bound, bound - diff)


def _ore_dominating(g: Graph, ctx: dict) -> Outcome | None:
    if g.n < 2 or any(g.degree(v) == 0 for v in range(g.n)):
        return None
    masks = minimal_dominating_masks(g)
    comp = np.int64(g.full) ^ masks
    ok = dominating_vector(g, comp)
    gamma = domination_number(g)
    bad = masks[~ok]
    witness = {"gamma": _w(gamma.witness)}
    if len(bad):
        witness["counterexample"] = _w(to_set(int(bad[0])))
    passed = not len(bad) and 2 * gamma.value <= g.n
    return Outcome({"minimal_sets": int(len(masks)), "failures": int(len(bad)), "gamma": gamma.value},
                   {"gamma_max": g.n / 2}, witness, passed, g.n / 2 - gamma.value)


def _ore_ld(g: Graph, ctx: dict) -> Outcome | None:
    if not is_twin_free(g) or g.n < 2 or any(g.degree(v) == 0 for v in range(g.n)):
        return None
    masks = minimal_dominating_masks(g)
    comp = np.int64(g.full) ^ masks
    ok = ld_vector(g, comp)
    bad = masks[~ok]
    witness = {}
    if len(bad):
        witness["counterexample"] = _w(to_set(int(bad[0])))
    # spot-check the vectorised verdict with the scalar predicate
    for m in masks[: ctx.get("spot", 8)]:
        if not is_locating_dominating(g, bits(g.full ^ int(m))):
            witness.setdefault("counterexample", _w(to_set(int(m))))
            bad = masks
    return Outcome({"minimal_sets": int(len(masks)), "failures": int(len(bad))}, {"failures": 0},
                   witness, not len(bad), -int(len(bad)))


def _twin_free_connected(g: Graph) -> bool:
    return g.n >= 4 and g.connected and is_twin_free(g)


def _cor_gamma(g: Graph, ctx: dict) -> Outcome | None:
    if not _twin_free_connected(g):
        return None
    cg = complement(g)
    lam = location_domination_number(g)
    up, up_c = upper_domination_number(g), upper_domination_number(cg)
    bound = g.n - max(up.value, up_c.value - 1)
    values = {"lambda": lam.value, "Gamma": up.value, "Gamma_complement": up_c.value}
    note = None
    lam_c = ld_minimum(cg)
    values["lambda_complement"] = lam_c.value
    if abs(lam.value - lam_c.value) > 1:
        note = "lambda of G and its complement differ by more than one"
    return Outcome(values, {"lambda_max": bound},
                   {"lambda": _w(lam.witness), "Gamma": _w(up.witness), "Gamma_complement": _w(up_c.witness)},
                   lam.value <= bound, bound - lam.value, note)


def _cor_alpha_omega(g: Graph, ctx: dict) -> Outcome | None:
    if not _twin_free_connected(g):
        return None
    lam = location_domination_number(g)
    a, w = independence_number(g), clique_number(g)
    bound = g.n - max(a.value, w.value - 1)
    ok = lam.value <= bound and is_independent(g, a.witness) and is_clique(g, w.witness)
    return Outcome({"lambda": lam.value, "alpha": a.value, "omega": w.value}, {"lambda_max": bound},
                   {"lambda": _w(lam.witness), "alpha": _w(a.witness), "omega": _w(w.witness)},
                   ok, bound - lam.value)


def _cor_chi(g: Graph, ctx: dict) -> Outcome | None:
    if not _twin_free_connected(g):
        return None
    lam = location_domination_number(g)
    x, xc = chromatic_number(g), chromatic_number(complement(g))
    bound = 2 * g.n - max(2 * x.value, 2 * xc.value - 1)
    return Outcome({"lambda": lam.value, "chi": x.value, "chi_complement": xc.value}, {"lambda_max": bound},
                   {"lambda": _w(lam.witness), "chi": list(x.coloring), "chi_complement": list(xc.coloring)},
                   lam.value <= bound, bound - lam.value)


def _cor_erdos_szekeres(g: Graph, ctx: dict) -> Outcome | None:
    if not _twin_free_connected(g):
        return None
    lam = location_domination_number(g)
    a, w = independence_number(g), clique_number(g)
    es = erdos_szekeres_bound(g.n)
    bound = g.n - es + 1
    ok = lam.value <= bound and max(a.value, w.value) >= es
    return Outcome({"lambda": lam.value, "alpha": a.value, "omega": w.value},
                   {"lambda_max": bound, "alpha_omega_min": es},
                   {"lambda": _w(lam.witness)}, ok, bound - lam.value)


# greedy partition ---------------------------------------------------------------

def _seeds(g: Graph, ctx: dict) -> Iterable[int]:
    sv = ctx.get("seed_vertex")
    if sv is not None and not ctx.get("all_seeds"):
        return [sv] if sv < g.n else []
    return range(g.n)


def _greedy_check(g: Graph, ctx: dict, parts: Sequence[str]) -> Outcome | None:
    if g.n < 4 or not is_twin_free(g):
        return None
    problems = []
    ld_max = det_max = 0
    first = None
    for u0 in _seeds(g, ctx):
        gp = run_algorithm1(g, u0)
        if first is None:
            first = gp
        if "partition" in parts:
            problems += [f"seed {u0}: {p}" for p in check_partition(g, gp)]
        if "distinguishing" in parts:
            for name, s in zip(("A|B", "A|C", "B|C"), greedy_distinguishing_sets(gp)):
                if not is_distinguishing(g, s):
                    problems.append(f"seed {u0}: {name} not distinguishing")
        dets = greedy_determining_sets(gp)
        if "determining" in parts:
            for name, s in zip(("A", "B|C"), dets):
                if not is_determining(g, s):
                    problems.append(f"seed {u0}: {name} not determining")
        if "ld" in parts:
            ld = greedy_ld_set(g, gp)
            if not is_locating_dominating(g, ld):
                problems.append(f"seed {u0}: completed set not locating-dominating")
            ld_max = max(ld_max, len(ld))
        if "det_size" in parts:
            det_max = max(det_max, min(len(s) for s in dets))
    if first is None:
        return None
    values, bounds, slack = {"a": len(first.a), "b": len(first.b), "c": len(first.c)}, {}, 0
    if "ld" in parts:
        values["ld_size_max"] = ld_max
        bounds["ld_max"] = 2 * g.n // 3 + 1
        slack = bounds["ld_max"] - ld_max
        if ld_max > bounds["ld_max"]:
            problems.append("locating-dominating set too large")
    if "det_size" in parts:
        values["det_size_max"] = det_max
        bounds["det_max"] = g.n // 2
        s2 = bounds["det_max"] - det_max
        slack = s2 if "ld" not in parts else min(slack, s2)
        if det_max > g.n // 2:
            problems.append("determining set too large")
    witnesses = {"a": _w(first.a), "b": _w(first.b), "c": _w(first.c), "a_order": list(first.a_order)}
    return Outcome(values, bounds, witnesses, not problems, slack, "; ".join(problems[:5]) or None)


ALL_GREEDY = ("partition", "distinguishing", "determining", "ld", "det_size")


def _alg1(g, ctx):
    return _greedy_check(g, ctx, ALL_GREEDY)


def _lemma52(g, ctx):
    return _greedy_check(g, ctx, ("partition", "distinguishing"))


def _lemma55(g, ctx):
    return _greedy_check(g, ctx, ("partition", "determining"))


def _thm53(g, ctx):
    return _greedy_check(g, ctx, ("ld",))


def _thm56(g, ctx):
    return _greedy_check(g, ctx, ("determining", "det_size"))


# K_{2,k}-free tools and matchings -------------------------------------------------

def _k_dominated_split(g: Graph, ctx: dict) -> Outcome | None:
    k = ctx.get("k", 2)
    if common_neighbor_excess(g, k) is not None:
        return None
    if g.n <= ctx.get("full_enum", 10):
        subsets = range(1 << g.n)
    else:
        rng = random.Random(f"{ctx.get('seed', 0)}/{ctx['gid']}")
        subsets = [rng.getrandbits(g.n) for _ in range(256)]
    checked = 0
    for d in subsets:
        out = [x for x in range(g.n) if not d >> x & 1]
        for x in out:
            if (g.adj[x] & d).bit_count() < k:
                continue
            for y in out:
                if y == x:
                    continue
                checked += 1
                if not any(distinguishes(g, u, x, y) for u in bits(d)):
                    return Outcome({"pairs": checked}, {"k": k}, {"d": _w(to_set(d)), "pair": [x, y]}, False, -1)
    return Outcome({"pairs": checked}, {"k": k}, {}, True, 0)


def _gamma_sandwich(g: Graph, ctx: dict) -> Outcome | None:
    k = ctx.get("k", 2)
    if not g.connected or g.n < 2 or common_neighbor_excess(g, k) is not None:
        return None
    gam, lam, gk = domination_number(g), location_domination_number(g), k_domination_number(g, k)
    ok = gam.value <= lam.value <= gk.value and is_locating_dominating(g, gk.witness)
    bounds = {"gamma_k": gk.value}
    if min(g.degree(v) for v in range(g.n)) >= k:
        bounds["lambda_max"] = k * g.n / (k + 1)
        ok = ok and lam.value <= bounds["lambda_max"]
    return Outcome({"gamma": gam.value, "lambda": lam.value, "gamma_k": gk.value}, bounds,
                   {"gamma": _w(gam.witness), "lambda": _w(lam.witness), "gamma_k": _w(gk.witness)},
                   ok, gk.value - lam.value)


def _edge_trichotomy(g: Graph, ctx: dict) -> Outcome | None:
    m = maximum_matching(g)
    mbar = to_mask(m.mbar)
    bad = []
    for u, v in sorted(m.edges):
        nu, nv = g.adj[u] & mbar, g.adj[v] & mbar
        cases = [not nu and not nv, bool(nu) != bool(nv), nu == nv and nu.bit_count() == 1]
        if sum(cases) != 1 or edge_case(g, m, (u, v)) != cases.index(True) + 1:
            bad.append([u, v])
    independent = is_independent(g, m.mbar)
    ok = not bad and independent and len(m) == brute_force_matching_number(g) if g.m <= ctx.get("brute_m", 22) \
        else not bad and independent
    return Outcome({"matching": len(m), "edges_checked": len(m.edges)}, {},
                   {"matching": [list(e) for e in sorted(m.edges)], "bad": bad}, ok, 0)


def _um_elimination(g: Graph, ctx: dict) -> Outcome | None:
    if g.n < 2 or not g.connected or not is_twin_free(g):
        return None
    m = maximum_matching(g)
    m2 = eliminate_um(g, m)
    ok = not u_m(g, m2) and len(m2) == len(m) and is_matching(g, m2.edges)
    return Outcome({"matching": len(m2), "um_before": len(u_m(g, m)), "um_after": len(u_m(g, m2))},
                   {"um_after": 0}, {"matching": [list(e) for e in sorted(m2.edges)]}, ok, 0)


def _v1_ld(g: Graph, ctx: dict) -> Outcome | None:
    if g.n < 4 or not g.connected or not is_twin_free(g) or not _is_c4_free(g):
        return None
    mp = v1_construction(g)
    a1 = len(maximum_matching(g))
    v1 = mp.v1
    mbar = mp.matching.mbar
    ok = is_locating_dominating(g, v1) and len(v1) == a1 and 2 * a1 <= g.n
    ok = ok and all((g.adj[x] & to_mask(v1)).bit_count() >= 2 for x in mbar)
    values = {"v1": len(v1), "alpha_prime": a1}
    bounds = {"v1_max": g.n // 2}
    witnesses = {"v1": _w(v1)}
    slack = g.n // 2 - len(v1)
    if g.n <= _cap(ctx, LAMBDA_CHECK_CAP):
        lam = location_domination_number(g)
        values["lambda"] = lam.value
        witnesses["lambda"] = _w(lam.witness)
        ok = ok and lam.value <= len(v1)
    return Outcome(values, bounds, witnesses, ok, slack)


def _c4_lambda_det(g: Graph, ctx: dict) -> Outcome | None:
    if not g.connected or g.n < 4 or not _is_c4_free(g):
        return None
    lam, det = _solve("lambda", g, ctx), _solve("det", g, ctx)
    diff = lam.value - det.value
    return Outcome({"lambda": lam.value, "det": det.value, "lambda-det": diff}, {"max": g.n // 2},
                   {"lambda": _w(lam.witness), "det": _w(det.witness)}, diff <= g.n // 2, g.n // 2 - diff)


def _tqs_items(params: dict):
    q = params.get("q", 7)
    for s in params.get("s", (0, 3, 5)):
        yield f"witness/T{q}_{s}", t_qs(q, s), {"q": q, "s": s}


def _tqs_witness(g: Graph, ctx: dict) -> Outcome:
    q, s = ctx["q"], ctx["s"]
    dim = tree_metric_dimension(g)
    det = determining_number(g, cap=max(g.n, 64))
    expected = 2 * q if s <= 3 else 2 * q + 1
    ok = dim.value == expected and det.value == 0 and _is_c4_free(g) and g.n == 7 * q + s
    ok = ok and dim.value - det.value == 2 * g.n // 7
    return Outcome({"dim": dim.value, "det": det.value, "n": g.n}, {"dim": expected, "floor_2n_7": 2 * g.n // 7},
                   {"dim": _w(dim.witness)}, ok, expected - dim.value)


# trees ---------------------------------------------------------------------------

def _tree_formula(g: Graph, ctx: dict) -> Outcome | None:
    if not is_tree(g) or g.n < 2:
        return None
    f, s = tree_metric_dimension(g), metric_dimension(g)
    from .invariants import is_resolving
    ok = f.value == s.value and is_resolving(g, f.witness)
    return Outcome({"formula": f.value, "search": s.value}, {}, {"formula": _w(f.witness), "search": _w(s.witness)},
                   ok, s.value - f.value)


def _terprime(g: Graph, ctx: dict) -> Outcome | None:
    if not is_tree(g):
        return None
    from .trees import analyze_tree
    ta = analyze_tree(g)
    slack = min((2 * ta.n_u(u) + 7 - 7 * ta.ter_prime(u) for u in ta.exterior_major), default=None)
    return Outcome({"exterior_major": len(ta.exterior_major)}, {}, {}, terprime_bound_check(g),
                   None if slack is None else slack / 7)


def _tree_det_bound(g: Graph, ctx: dict) -> Outcome | None:
    if not is_tree(g) or is_path(g):
        return None
    lb = tree_det_lower_bound(g)
    det = determining_number(g, cap=max(g.n, 64))
    return Outcome({"det": det.value}, {"det_min": lb}, {"det": _w(det.witness)}, lb <= det.value, det.value - lb)


def _tree_dim_det(g: Graph, ctx: dict) -> Outcome | None:
    if not is_tree(g) or g.n < 4:
        return None
    dim, det = tree_metric_dimension(g), determining_number(g, cap=max(g.n, 64))
    diff = dim.value - det.value
    bound = 2 * g.n // 7
    expected = ctx.get("expected")
    ok = diff <= bound if expected is None else diff == expected
    return Outcome({"dim": dim.value, "det": det.value, "dim-det": diff}, {"max": bound},
                   {"dim": _w(dim.witness), "det": _w(det.witness)}, ok, bound - diff)


def _tree_lambda_det(g: Graph, ctx: dict) -> Outcome | None:
    if not is_tree(g) or g.n < 4 or g.n > _cap(ctx, 24):
        return None
    lam, det = location_domination_number(g), determining_number(g, cap=max(g.n, 64))
    diff = lam.value - det.value
    bound = g.n // 2
    expected = ctx.get("expected")
    ok = diff <= bound if expected is None else diff == expected
    return Outcome({"lambda": lam.value, "det": det.value, "lambda-det": diff}, {"max": bound},
                   {"lambda": _w(lam.witness), "det": _w(det.witness)}, ok, bound - diff)


def _thm74_witness_items(params: dict):
    for gid, g, ctx in _tqs_items(params):
        yield gid, g, {**ctx, "expected": 2 * g.n // 7}


def _thm75_witness_items(params: dict):
    for n in params.get("n", (14, 15, 16, 17)):
        yield f"witness/tree{n:02d}", theorem22_witness(n, complemented=False), {"expected": n // 2}


def _wheel_items(params: dict):
    for n in params.get("n", range(8, 15)):
        yield f"witness/W{n:02d}", wheel(n), {"rim": n}


def _wheel(g: Graph, ctx: dict) -> Outcome:
    n = ctx["rim"]
    dim, det = _solve("dim", g, ctx), _solve("det", g, ctx)
    diff = dim.value - det.value
    bound = 2 * n // 5 - 2
    note = None if diff == bound else f"dim-det exceeds the lower bound by {diff - bound}"
    return Outcome({"dim": dim.value, "det": det.value, "dim-det": diff}, {"min": bound},
                   {"dim": _w(dim.witness), "det": _w(det.witness)}, diff >= bound, diff - bound, note)


# registry -------------------------------------------------------------------------

@dataclass(frozen=True)
class Statement:
    sid: str
    summary: str
    check: Callable[[Graph, dict], Outcome | None]
    corpora: tuple[str, ...] = ()
    witnesses: Callable[[dict], Iterable] | None = None
    items: Callable[[dict], Iterable] | None = None


STATEMENTS: dict[str, Statement] = {}


def _register(sid, summary, check, corpora=(), witnesses=None, items=None):
    STATEMENTS[sid] = Statement(sid, summary, check, tuple(corpora), witnesses, items)


_TF = ("all-connected-le7", "random-twinfree:n=4..14,count=500")
_TWINS = ("all-connected-le7",)
_TREES = ("all-trees-le10", "random-trees:n=4..14,count=500")

_register("lemma-2.1", "Det, dim of complements and lambda of G_r, H_r", _exact_value, witnesses=_lemma21_items)
_register("thm-2.2", "dim-Det and lambda-Det on the order-n witnesses", _difference_equals, witnesses=_thm22_items)
_register("lemma-3.1", "twin classes, class types and G* independent of representatives", _twin_structure, _TWINS)
_register("lemma-3.2", "singleton classes are pairwise non-twins in G*", _one_classes_not_twins, _TWINS)
_register("lemma-3.3", "Det >= n - r and lambda - Det <= r - 1", _det_vs_order, _TWINS)
_register("lemma-3.4", "G~ is twin-free of order at most n", _tilde_twin_free, _TWINS)
_register("lemma-3.5", "lambda(G) <= lambda(G~) + n - r via the lifted set", _tilde_lambda, _TWINS)
_register("thm-3.6", "lambda - Det at most the twin-free lambda maximum (corpus form)", _thm36,
          ("all-connected-le7",), items=_thm36_items)
_register("thm-4.1", "complement of a minimal dominating set dominates; gamma <= n/2", _ore_dominating, _TWINS)
_register("thm-4.2", "complement of a minimal dominating set is locating-dominating (twin-free)", _ore_ld, _TF)
_register("cor-4.3", "lambda <= n - max(Gamma(G), Gamma(co-G) - 1)", _cor_gamma, _TF)
_register("cor-4.4", "lambda <= n - max(alpha, omega - 1)", _cor_alpha_omega, _TF)
_register("cor-4.5", "lambda <= 2n - max(2 chi(G), 2 chi(co-G) - 1)", _cor_chi, _TF)
_register("cor-4.6", "lambda <= n - ceil(log2(n)/2) + 1 and the Ramsey premise", _cor_erdos_szekeres, _TF)
_GREEDY = ("all-twinfree-le7", "random-twinfree:n=8..24,count=1000")
_register("alg-1", "greedy partition: invariants and all derived-set guarantees", _alg1, _GREEDY)
_register("lemma-5.2", "A|B, A|C, B|C are distinguishing", _lemma52, _GREEDY)
_register("lemma-5.5", "A and B|C are determining", _lemma55, _GREEDY)
_register("thm-5.3", "greedy locating-dominating set has size <= floor(2n/3) + 1", _thm53, _GREEDY)
_register("thm-5.6", "smaller greedy determining set has size <= floor(n/2)", _thm56, _GREEDY)
_register("lemma-6.1", "k-dominated vertices are distinguished from every other outside vertex", _k_dominated_split,
          ("all-graphs-le7",))
_register("prop-6.2", "gamma <= lambda <= gamma_k on K_{2,k}-free graphs", _gamma_sandwich, ("all-connected-le7",))
_register("lemma-6.3", "every maximum-matching edge falls in exactly one case", _edge_trichotomy,
          ("all-connected-le7", "random-twinfree:n=4..14,count=200"))
_register("lemma-6.4", "U_M can be emptied at unchanged matching size", _um_elimination,
          ("all-connected-le7", "random-c4free:n=4..24,count=500"))
_register("prop-6.5", "V1 is locating-dominating with |V1| = alpha'", _v1_ld,
          ("all-connected-le7", "random-c4free:n=4..24,count=500"))
_register("thm-6.6", "lambda - Det <= floor(n/2) on C4-free graphs", _c4_lambda_det,
          ("all-connected-le7", "random-c4free:n=4..12,count=200"))
_register("thm-6.7", "T_{q,s}: dim = 2q or 2q+1, Det = 0", _tqs_witness, witnesses=_tqs_items)
_register("prop-7.1", "tree formula equals subset-search dim", _tree_formula, _TREES)
_register("lemma-7.2", "ter'(u) <= 2 n_u / 7 + 1", _terprime, ("random-trees:n=4..30,count=2000",))
_register("lemma-7.3", "Det(T) >= sum of ter(u) - ter'(u)", _tree_det_bound, ("random-trees:n=4..30,count=2000",))
_register("thm-7.4", "dim - Det <= floor(2n/7) on trees, equality on T_{q,s}", _tree_dim_det,
          ("all-trees-le10", "random-trees:n=4..30,count=500"), witnesses=_thm74_witness_items)
_register("thm-7.5", "lambda - Det <= floor(n/2) on trees, equality on the order-n witnesses", _tree_lambda_det,
          ("all-trees-le10", "random-trees:n=4..20,count=300"), witnesses=_thm75_witness_items)
_register("wheel", "dim - Det >= floor(2n/5) - 2 on wheels", _wheel, witnesses=_wheel_items)


def get_statement(sid: str) -> Statement:
    try:
        return STATEMENTS[sid]
    except KeyError:
        raise UnknownStatement(f"unknown statement {sid!r}; known: {', '.join(STATEMENTS)}") from None


# running --------------------------------------------------------------------------

def _corpus_stream(params: dict):
    for spec in params["corpus_specs"]:
        for gid, g in corpus_items(spec):
            yield gid, g, {}


def _run_one(job) -> Instance:
    sid, gid, g, ctx = job
    st = STATEMENTS[sid]
    g6 = emit_graph6(g)
    try:
        out = st.check(g, {**ctx, "gid": gid})
    except (CapExceeded, Timeout) as exc:
        return Instance(gid, g6, g.n, "skip", note=f"{type(exc).__name__}: {exc}")
    except GraphError as exc:
        return Instance(gid, g6, g.n, "fail", note=f"{type(exc).__name__}: {exc}")
    if out is None:
        return Instance(gid, g6, g.n, "skip", note="hypothesis not met")
    return Instance(gid, g6, g.n, "pass" if out.passed else "fail", out.values, out.bounds,
                    out.witnesses, out.slack, out.note)


def verify(sid: str, *, corpora_text: Sequence[str] | None = None, witnesses: bool = True,
           jobs: int = 1, seed: int = 0, n: str | None = None, count: int | None = None,
           options: dict | None = None) -> VerificationReport:
    """Run one statement over its witnesses and corpora."""
    st = get_statement(sid)
    options = dict(options or {})
    texts = list(st.corpora if corpora_text is None else corpora_text)
    specs = [parse_corpus(t, n=n, count=count, seed=seed) for t in texts]
    params = {"corpora": [s.as_dict() for s in specs], "options": options, "witnesses": bool(witnesses and st.witnesses)}
    gen_params = {**options, "corpus_specs": specs}
    jobs_list = []
    if witnesses and st.witnesses:
        jobs_list += [(sid, gid, g, {**options, **ctx}) for gid, g, ctx in st.witnesses(options)]
    stream = st.items(gen_params) if st.items else _corpus_stream(gen_params)
    if specs:
        jobs_list += [(sid, gid, g, {**options, "seed": seed, **ctx}) for gid, g, ctx in stream]
    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            instances = list(pool.map(_run_one, jobs_list, chunksize=max(1, len(jobs_list) // (8 * jobs))))
    else:
        instances = [_run_one(j) for j in jobs_list]
    instances.sort(key=lambda i: i.graph_id)
    return VerificationReport(sid, params, instances)


# corpus extremes ------------------------------------------------------------------

@dataclass
class ExtremesReport:
    n: int
    rows: list[dict]
    summary: dict

    def to_jsonl(self) -> str:
        return "".join(_dumps({"kind": "instance", **r}) + "\n" for r in self.rows) + \
            _dumps({"kind": "summary", **self.summary}) + "\n"

    def to_tsv(self) -> str:
        lines = ["graph_id\tgraph6\ttwin_free\tdim\tdet\tlambda\tchain"]
        for r in self.rows:
            lines.append("\t".join(str("" if r[k] is None else r[k]) for k in
                                   ("graph_id", "graph6", "twin_free", "dim", "det", "lambda", "chain_ok")))
        for k in sorted(self.summary):
            lines.append(f"# {k}\t{json.dumps(self.summary[k], sort_keys=True)}")
        return "\n".join(lines) + "\n"


def _extreme_row(job) -> dict:
    gid, g, cap = job
    det = determining_number(g, cap=cap)
    lam = ld_minimum(g, cap=cap)
    dim = metric_dimension(g, cap=cap) if g.connected else None
    chain = det.value <= lam.value and (dim is None or det.value <= dim.value <= lam.value)
    return {
        "graph_id": gid, "graph6": emit_graph6(g), "n": g.n, "connected": g.connected,
        "twin_free": is_twin_free(g), "det": det.value, "lambda": lam.value,
        "dim": None if dim is None else dim.value, "chain_ok": chain,
        "witnesses": {"det": _w(det.witness), "lambda": _w(lam.witness),
                      "dim": None if dim is None else _w(dim.witness)},
    }


def corpus_extremes(graphs: Sequence[Graph], *, ids: Sequence[str] | None = None, cap: int | None = None,
                    jobs: int = 1) -> ExtremesReport:
    """Maxima of dim - Det, lambda - Det and twin-free lambda over the supplied corpus."""
    if not graphs:
        raise BadParams("empty corpus")
    orders = {g.n for g in graphs}
    if len(orders) > 1:
        raise MixedOrders(f"corpus mixes orders {sorted(orders)}")
    n = orders.pop()
    ids = list(ids) if ids is not None else [f"g/{i:05d}" for i in range(len(graphs))]
    work = list(zip(ids, graphs, itertools.repeat(cap)))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rows = list(pool.map(_extreme_row, work, chunksize=max(1, len(work) // (8 * jobs))))
    else:
        rows = [_extreme_row(w) for w in work]
    rows.sort(key=lambda r: r["graph_id"])

    def best(key, pool):
        pool = [r for r in pool if key(r) is not None]
        if not pool:
            return None
        top = max(key(r) for r in pool)
        arg = next(r for r in pool if key(r) == top)
        return {"value": top, "graph_id": arg["graph_id"], "graph6": arg["graph6"]}

    dim_det = best(lambda r: None if r["dim"] is None else r["dim"] - r["det"], rows)
    lam_det = best(lambda r: r["lambda"] - r["det"], rows)
    tf_lam = best(lambda r: r["lambda"], [r for r in rows if r["twin_free"] and r["connected"]])
    violations = []
    if tf_lam is not None:
        violations = [r["graph_id"] for r in rows if r["connected"] and r["lambda"] - r["det"] > tf_lam["value"]]
    summary = {
        "n": n, "graphs": len(rows),
        "max_dim_minus_det": dim_det, "max_lambda_minus_det": lam_det, "max_twin_free_lambda": tf_lam,
        "chain_violations": [r["graph_id"] for r in rows if not r["chain_ok"]],
        "twin_free_bound_violations": violations,
        "conjecture_evidence": None if tf_lam is None else {
            "label": "conjecture evidence",
            "max_twin_free_lambda": tf_lam["value"], "half_n": n // 2,
            "consistent": tf_lam["value"] <= n // 2,
        },
    }
    return ExtremesReport(n, rows, summary)


# Ore-type witness search ------------------------------------------------------------

def ore_witness_in(g: Graph) -> int | None:
    """Smallest minimal locating-dominating mask whose complement is not locating-dominating."""
    masks = all_masks(g.n)
    ld = ld_vector(g, masks)
    for m in masks[ld]:
        m = int(m)
        if any(ld[m & ~(1 << v)] for v in bits(m)):
            continue
        if not ld[g.full ^ m]:
            return m
    return None


def find_ore_witness(max_n: int, *, min_n: int = 4, cap: int = 10) -> dict | None:
    if max_n > cap:
        raise CapExceeded(f"witness search is capped at n <= {cap}")
    for n in range(min_n, max_n + 1):
        for g in corpora.all_twin_free(n, connected=True):
            m = ore_witness_in(g)
            if m is not None:
                d = to_set(m)
                rest = to_set(g.full ^ m)
                assert is_locating_dominating(g, d) and not is_locating_dominating(g, rest)
                return {"graph6": emit_graph6(g), "n": n, "set": _w(d), "complement": _w(rest),
                        "edges": [list(e) for e in g.edges()]}
    return None
