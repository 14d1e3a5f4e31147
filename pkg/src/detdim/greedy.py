"""Greedy A/B/C partition of a twin-free graph.

Starting from A = {u0}, a vertex u of C is moved into A whenever it splits
some pair x, y of C (u not in {x, y}) that A could not tell apart.  At the
end B holds the vertices A identifies uniquely and C the rest; the unions
A|B, A|C and B|C are distinguishing, and A and B|C are determining.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotTwinFree
from .graph import Graph, bits, to_mask, to_set
from .invariants import complete_to_ld, is_distinguishing
from .twins import is_twin_free


@dataclass(frozen=True)
class GreedyPartition:
    a: frozenset[int]
    b: frozenset[int]
    c: frozenset[int]
    a_order: tuple[int, ...]
    u0: int


def _class_keys(g: Graph, dmask: int) -> list:
    return [("in", x) if dmask >> x & 1 else ("out", g.adj[x] & dmask) for x in range(g.n)]


def classes_under(g: Graph, d) -> list[frozenset[int]]:
    """Equivalence classes of 'no vertex of d distinguishes the pair'."""
    keys = _class_keys(g, to_mask(d))
    groups: dict = {}
    for x, key in enumerate(keys):
        groups.setdefault(key, set()).add(x)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def _split_b_c(g: Graph, amask: int) -> tuple[int, int]:
    counts: dict[int, int] = {}
    outside = [x for x in range(g.n) if not amask >> x & 1]
    for x in outside:
        t = g.adj[x] & amask
        counts[t] = counts.get(t, 0) + 1
    b = c = 0
    for x in outside:
        if counts[g.adj[x] & amask] == 1:
            b |= 1 << x
        else:
            c |= 1 << x
    return b, c


def _splitting_triple(g: Graph, amask: int, cmask: int):
    """Lexicographically least (u, x, y) in C with x ~_A y split by u."""
    groups: dict[int, int] = {}
    for x in bits(cmask):
        t = g.adj[x] & amask
        groups[t] = groups.get(t, 0) | 1 << x
    for u in bits(cmask):
        nu = g.adj[u]
        best = None
        for grp in groups.values():
            grp &= ~(1 << u)
            inside, outside = grp & nu, grp & ~nu
            if inside and outside:
                x = (grp & -grp).bit_length() - 1
                other = outside if inside >> x & 1 else inside
                y = (other & -other).bit_length() - 1
                if best is None or (x, y) < best:
                    best = (x, y)
        if best is not None:
            return (u,) + best
    return None


def run_algorithm1(g: Graph, u0: int = 0) -> GreedyPartition:
    if not is_twin_free(g):
        raise NotTwinFree("greedy partition needs a twin-free graph")
    if not 0 <= u0 < g.n:
        raise ValueError(f"seed vertex {u0} out of range")
    amask = 1 << u0
    order = [u0]
    b, c = _split_b_c(g, amask)
    steps = 0
    while (triple := _splitting_triple(g, amask, c)) is not None:
        steps += 1
        if steps > g.n - 1:
            raise AssertionError("more iterations than a partition of n can refine")
        u = triple[0]
        amask |= 1 << u
        order.append(u)
        b, c = _split_b_c(g, amask)
    return GreedyPartition(to_set(amask), to_set(b), to_set(c), tuple(order), u0)


def check_partition(g: Graph, gp: GreedyPartition) -> list[str]:
    """Invariant violations of a finished run (empty list when sound)."""
    problems = []
    if gp.a | gp.b | gp.c != frozenset(range(g.n)) or len(gp.a) + len(gp.b) + len(gp.c) != g.n:
        problems.append("A, B, C do not partition V")
    b, c = _split_b_c(g, to_mask(gp.a))
    if to_set(b) != gp.b or to_set(c) != gp.c:
        problems.append("B/C do not match the singleton/non-singleton classes of A")
    if _splitting_triple(g, to_mask(gp.a), to_mask(gp.c)) is not None:
        problems.append("loop guard still satisfiable")
    return problems


def greedy_distinguishing_sets(gp: GreedyPartition) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    return gp.a | gp.b, gp.a | gp.c, gp.b | gp.c


def greedy_determining_sets(gp: GreedyPartition) -> tuple[frozenset[int], frozenset[int]]:
    return gp.a, gp.b | gp.c


def greedy_ld_set(g: Graph, gp: GreedyPartition) -> frozenset[int]:
    smallest = min(greedy_distinguishing_sets(gp), key=len)
    return complete_to_ld(g, smallest)
