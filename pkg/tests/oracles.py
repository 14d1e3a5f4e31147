"""Brute-force oracles written straight from the definitions.

They share nothing with the solvers beyond the Graph container: distances
come from a local BFS, automorphisms from trying every permutation, minima
from itertools.combinations.  Only usable on tiny graphs.
"""

from __future__ import annotations

import itertools
from collections import deque

from detdim.graph import Graph, build_graph


def nbrs(g: Graph, v: int) -> set[int]:
    return {u for u in range(g.n) if g.adj[v] >> u & 1}


def bfs(g: Graph, s: int) -> list[float]:
    d = [float("inf")] * g.n
    d[s] = 0
    q = deque([s])
    while q:
        v = q.popleft()
        for u in nbrs(g, v):
            if d[u] == float("inf"):
                d[u] = d[v] + 1
                q.append(u)
    return d


def dist_table(g: Graph) -> list[list[float]]:
    return [bfs(g, v) for v in range(g.n)]


def resolving(g: Graph, s) -> bool:
    d = dist_table(g)
    vecs = {tuple(d[u][x] for u in s) for x in range(g.n)}
    return len(vecs) == g.n


def dominating(g: Graph, s) -> bool:
    s = set(s)
    return all(x in s or nbrs(g, x) & s for x in range(g.n))


def locating_dominating(g: Graph, s) -> bool:
    s = set(s)
    if not dominating(g, s):
        return False
    codes = [frozenset(nbrs(g, x) & s) for x in range(g.n) if x not in s]
    return len(codes) == len(set(codes))


def distinguishing(g: Graph, s) -> bool:
    s = set(s)
    for x, y in itertools.combinations(range(g.n), 2):
        if x in s or y in s:
            continue
        if nbrs(g, x) & s == nbrs(g, y) & s:
            return False
    return True


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    edges = {frozenset(e) for e in g.edges()}
    out = []
    for p in itertools.permutations(range(g.n)):
        if all(frozenset((p[a], p[b])) in edges for a, b in g.edges()):
            out.append(p)
    return out


def determining(auts, s) -> bool:
    return all(all(p[v] == v for v in range(len(p))) for p in auts if all(p[x] == x for x in s))


def brute_min(n: int, pred) -> int:
    for k in range(n + 1):
        for s in itertools.combinations(range(n), k):
            if pred(s):
                return k
    raise AssertionError("no set satisfies the predicate")


def brute_dim(g):
    return brute_min(g.n, lambda s: resolving(g, s))


def brute_lambda(g):
    return brute_min(g.n, lambda s: locating_dominating(g, s))


def brute_gamma(g, k=1):
    return brute_min(g.n, lambda s: all(x in s or len(nbrs(g, x) & set(s)) >= k for x in range(g.n)))


def brute_det(g):
    auts = automorphisms(g)
    return brute_min(g.n, lambda s: determining(auts, s))


def minimal_dominating_sets(g):
    out = []
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            if dominating(g, s) and all(not dominating(g, set(s) - {v}) for v in s):
                out.append(frozenset(s))
    return out


def brute_alpha(g):
    best = 0
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            if all(not g.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                best = k
    return best


def brute_chi(g):
    for k in range(1, g.n + 1):
        for col in itertools.product(range(k), repeat=g.n):
            if all(col[a] != col[b] for a, b in g.edges()):
                return k
    return 0


def brute_matching(g):
    edges = list(g.edges())
    best = 0
    for k in range(1, g.n // 2 + 1):
        for sub in itertools.combinations(edges, k):
            if len({v for e in sub for v in e}) == 2 * k:
                best = k
                break
        else:
            break
    return best


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
