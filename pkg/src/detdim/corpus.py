"""Graph corpora: exhaustive small graphs up to isomorphism and seeded random families.

Exhaustive lists are built by vertex augmentation (every graph on n
vertices is some graph on n-1 vertices plus one vertex, and every connected
graph has a non-cut vertex), deduplicated on the canonical certificate.
Each member is stored in its canonical labelling, sorted by graph6 string.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator

from .graph import Graph, build_graph, common_neighbor_excess, emit_graph6, is_connected
from .symmetry import certificate
from .twins import is_twin_free

P_VALUES = (0.2, 0.5, 0.8)


def _from_certificate(cert: tuple[int, ...]) -> Graph:
    n, rows = cert[0], cert[1:]
    return Graph(n, tuple(rows))


def _extend(graphs: list[Graph], connected: bool, leaf_only: bool) -> list[Graph]:
    seen = {}
    for g in graphs:
        n = g.n
        if leaf_only:
            choices = [1 << v for v in range(n)]
        else:
            choices = range(1 if connected else 0, 1 << n)
        for nb in choices:
            adj = [row | (nb >> v & 1) << n for v, row in enumerate(g.adj)] + [nb]
            h = Graph(n + 1, tuple(adj))
            cert = certificate(h)
            if cert not in seen:
                seen[cert] = h
    out = [_from_certificate(c) for c in seen]
    out.sort(key=emit_graph6)
    return out


@lru_cache(maxsize=None)
def all_graphs(n: int, connected: bool = True) -> tuple[Graph, ...]:
    """Every graph (or every connected graph) of order n, one per isomorphism class."""
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    base = all_graphs(n - 1, connected)
    return tuple(_extend(list(base), connected, leaf_only=False))


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple[Graph, ...]:
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    return tuple(_extend(list(all_trees(n - 1)), True, leaf_only=True))


def all_twin_free(n: int, connected: bool = True) -> list[Graph]:
    return [g for g in all_graphs(n, connected) if is_twin_free(g)]


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_twin_free(n: int, rng: random.Random, p: float) -> Graph:
    while True:
        g = gnp(n, p, rng)
        if is_connected(g) and is_twin_free(g):
            return g


def random_twin_free_corpus(count: int, n_min: int, n_max: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(n_min, n_max)
        yield random_twin_free(n, rng, P_VALUES[i % len(P_VALUES)])


def prufer_tree(n: int, rng: random.Random) -> Graph:
    if n <= 2:
        return build_graph(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return build_graph(n, edges)


def random_tree_corpus(count: int, n_min: int, n_max: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield prufer_tree(rng.randint(n_min, n_max), rng)


def random_c4_free_twin_free(n: int, rng: random.Random) -> Graph:
    """Prufer tree plus random chords that keep the graph free of 4-cycles."""
    while True:
        g = prufer_tree(n, rng)
        edges = set(g.edges())
        for _ in range(rng.randint(0, 2 * n)):
            u, v = sorted(rng.sample(range(n), 2))
            if (u, v) in edges:
                continue
            h = build_graph(n, edges | {(u, v)})
            if common_neighbor_excess(h, 2) is None:
                edges.add((u, v))
                g = h
        if is_twin_free(g):
            return g


def random_c4_free_corpus(count: int, n_min: int, n_max: int, seed: int) -> Iterator[Graph]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_c4_free_twin_free(rng.randint(n_min, n_max), rng)
