"""Maximum matchings (Edmonds' blossom algorithm) and the matching-based
locating-dominating construction for twin-free C4-free graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import Disconnected, HasC4, NotMaximum, NotTwinFree
from .graph import Graph, bits, common_neighbor_excess, to_mask, to_set
from .twins import is_twin_free

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]
    mbar: frozenset[int]

    @classmethod
    def of(cls, g: Graph, edges: Iterable[tuple[int, int]]) -> "Matching":
        es = frozenset(_edge(u, v) for u, v in edges)
        covered = set()
        for u, v in es:
            if not g.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge")
            if u in covered or v in covered:
                raise ValueError("edges are not pairwise disjoint")
            covered |= {u, v}
        return cls(es, frozenset(range(g.n)) - covered)

    def __len__(self):
        return len(self.edges)

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out


@dataclass(frozen=True)
class MatchedPartition:
    v1: frozenset[int]
    v2: frozenset[int]
    matching: Matching


def maximum_matching(g: Graph) -> Matching:
    n = g.n
    match = [-1] * n
    adj = [list(bits(g.adj[v])) for v in range(n)]
    # greedy start, then grow from every exposed vertex
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break
    for v in range(n):
        if match[v] != -1:
            continue
        end, parent = _augment_search(n, adj, match, v)
        while end != -1:
            pv = parent[end]
            ppv = match[pv]
            match[end], match[pv] = pv, end
            end = ppv
    return Matching.of(g, [(v, match[v]) for v in range(n) if match[v] > v])


def _augment_search(n, adj, match, root):
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    q = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while q:
        v = q.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or match[to] != -1 and parent[match[to]] != -1:
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                q.append(match[to])
    return -1, parent


def brute_force_matching_number(g: Graph) -> int:
    """Exhaustive oracle: branch on the lowest vertex (skip it or match it)."""

    def best(avail: int) -> int:
        if not avail:
            return 0
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        out = best(rest)
        for u in bits(g.adj[v] & rest):
            out = max(out, 1 + best(rest & ~(1 << u)))
        return out

    return best(g.full)


def is_matching(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    try:
        Matching.of(g, edges)
    except ValueError:
        return False
    return True


def u_m(g: Graph, m: Matching) -> frozenset[int]:
    """Unmatched vertices whose whole neighbourhood sits inside one matching edge."""
    edge_masks = [1 << u | 1 << v for u, v in m.edges]
    return frozenset(x for x in m.mbar if any(g.adj[x] & ~e == 0 for e in edge_masks))


def _is_maximum(g: Graph, m: Matching) -> bool:
    return len(m) == len(maximum_matching(g))


def edge_case(g: Graph, m: Matching, e: tuple[int, int]) -> int:
    """Which of the three configurations a maximum-matching edge is in.

    1: neither endpoint sees an unmatched vertex; 2: exactly one does;
    3: both see the same single unmatched vertex.
    """
    e = _edge(*e)
    if e not in m.edges:
        raise ValueError(f"{e} is not in the matching")
    mbar = to_mask(m.mbar)
    nu, nv = g.adj[e[0]] & mbar, g.adj[e[1]] & mbar
    if not nu and not nv:
        return 1
    if bool(nu) != bool(nv):
        return 2
    if nu == nv and nu.bit_count() == 1:
        return 3
    raise NotMaximum(f"edge {e} admits an augmenting path; the matching is not maximum")


def eliminate_um(g: Graph, m: Matching) -> Matching:
    if not is_twin_free(g):
        raise NotTwinFree("graph has twins")
    if not _is_maximum(g, m):
        raise NotMaximum("matching is not maximum")
    if g.n > 1 and any(g.adj[v] == 0 for v in range(g.n)):
        # an isolated vertex lies in U_M for every M and can never be matched
        raise Disconnected("graph has an isolated vertex")
    edges = set(m.edges)
    cur = m
    um = u_m(g, cur)
    while um:
        x = min(um)
        e = next(e for e in sorted(edges) if g.adj[x] & ~(1 << e[0] | 1 << e[1]) == 0)
        u = min(v for v in e if g.has_edge(x, v))
        edges.remove(e)
        edges.add(_edge(u, x))
        nxt = Matching.of(g, edges)
        new_um = u_m(g, nxt)
        if new_um != um - {x}:
            raise AssertionError(f"U_M did not shrink by exactly {x}")
        cur, um = nxt, new_um
    return cur


def v1_construction(g: Graph) -> MatchedPartition:
    """Locating-dominating set of size alpha'(G) from a maximum matching with U_M empty."""
    if not g.connected:
        raise Disconnected("graph is not connected")
    if not is_twin_free(g):
        raise NotTwinFree("graph has twins")
    if common_neighbor_excess(g, 2) is not None:
        raise HasC4("graph contains a 4-cycle")
    if g.n < 4:
        raise ValueError("construction needs n >= 4")
    m = eliminate_um(g, maximum_matching(g))
    mbar = to_mask(m.mbar)
    v1, v2 = set(), set()
    for u, v in sorted(m.edges):
        if edge_case(g, m, (u, v)) == 2 and not g.adj[u] & mbar:
            u, v = v, u
        v1.add(u)
        v2.add(v)
    return MatchedPartition(frozenset(v1), frozenset(v2), m)
