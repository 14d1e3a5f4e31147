"""Twin classes, the twin graph G*, the set Omega_G and the twin-free companion G~.

Two distinct vertices are twins when no third vertex tells them apart,
i.e. ``N(u) - {v} == N(v) - {u}``; that covers both open twins (same open
neighbourhood, non-adjacent) and closed twins (same closed neighbourhood).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import Disconnected, NotLocatingDominating, StarIsK2
from .graph import Graph, bits, to_mask, to_set

ONE, K, N = "1", "K", "N"


def are_twins(g: Graph, u: int, v: int) -> bool:
    return u != v and g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)


@dataclass(frozen=True)
class TwinDecomposition:
    classes: tuple[frozenset[int], ...]
    class_type: tuple[str, ...]
    representative: tuple[int, ...]
    class_of: tuple[int, ...]
    star: Graph
    omega: frozenset[int]

    @property
    def r(self) -> int:
        return len(self.classes)

    def kn_classes(self) -> list[int]:
        return [i for i, t in enumerate(self.class_type) if t != ONE]


def twin_classes(g: Graph) -> list[int]:
    """Class bitmasks ordered by their minimum vertex."""
    assigned = 0
    out = []
    for u in range(g.n):
        if assigned >> u & 1:
            continue
        cls = 1 << u
        for v in range(u + 1, g.n):
            if not assigned >> v & 1 and are_twins(g, u, v):
                cls |= 1 << v
        assigned |= cls
        out.append(cls)
    return out


def star_graph(g: Graph, reps: Sequence[int]) -> Graph:
    """G* built from one chosen representative per class (class order kept)."""
    r = len(reps)
    adj = [0] * r
    for i in range(r):
        for j in range(i + 1, r):
            if g.has_edge(reps[i], reps[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(r, tuple(adj), tuple(f"{g.label(x)}*" for x in reps))


def twin_decomposition(g: Graph) -> TwinDecomposition:
    masks = twin_classes(g)
    class_of = [0] * g.n
    types = []
    reps = []
    omega = 0
    for i, cm in enumerate(masks):
        members = list(bits(cm))
        for v in members:
            class_of[v] = i
        rep = members[0]
        reps.append(rep)
        if len(members) == 1:
            types.append(ONE)
        else:
            types.append(K if g.has_edge(members[0], members[1]) else N)
            omega |= cm & ~(1 << rep)
    return TwinDecomposition(
        classes=tuple(to_set(cm) for cm in masks),
        class_type=tuple(types),
        representative=tuple(reps),
        class_of=tuple(class_of),
        star=star_graph(g, reps),
        omega=to_set(omega),
    )


def is_twin_free(g: Graph) -> bool:
    seen = set()
    for u in range(g.n):
        # keyed on neighbourhood with and without u so both twin kinds collide
        for key in (g.adj[u], g.adj[u] | 1 << u):
            if key in seen:
                return False
        seen.add(g.adj[u])
        seen.add(g.adj[u] | 1 << u)
    return True


def forced_twin_mask(g: Graph) -> int:
    """All of every twin class except its largest vertex.

    Any set whose defining property is preserved by automorphisms
    (resolving, locating-dominating, determining) must hold all but at most
    one vertex of each class, and swapping twins moves the missing vertex to
    the largest one without increasing the mask value, so forcing these
    vertices keeps both the optimum and the colex-first witness.
    """
    forced = 0
    for cm in twin_classes(g):
        if cm & (cm - 1):
            forced |= cm & ~(1 << (cm.bit_length() - 1))
    return forced


@dataclass(frozen=True)
class TildeGraph:
    graph: Graph
    vstar: frozenset[int]
    pendants: frozenset[int]
    attach: Mapping[int, int]


def build_tilde(g: Graph, td: TwinDecomposition | None = None) -> TildeGraph:
    if not g.connected:
        raise Disconnected("G~ is only defined for connected graphs")
    td = td or twin_decomposition(g)
    star = td.star
    r = td.r
    if r == 2 and star.has_edge(0, 1):
        raise StarIsK2("twin graph is K2; lambda - Det <= 1 holds directly")
    anchors = [
        i for i in range(r)
        if td.class_type[i] != ONE and any(are_twins(star, i, j) for j in range(r))
    ]
    adj = list(star.adj) + [0] * len(anchors)
    labels = list(star.labels) + [f"l{i}" for i in anchors]
    attach = {}
    for k, a in enumerate(anchors):
        p = r + k
        adj[a] |= 1 << p
        adj[p] = 1 << a
        attach[p] = a
    tilde = Graph(r + len(anchors), tuple(adj), tuple(labels))
    if not is_twin_free(tilde) or tilde.n > g.n:
        raise AssertionError("G~ construction violated twin-freeness or order bound")
    return TildeGraph(tilde, frozenset(range(r)), frozenset(attach), attach)


def project(td: TwinDecomposition, tg: TildeGraph, s: Iterable[int]) -> frozenset[int]:
    """Map G~ vertices to class representatives of G (pendant -> its anchor)."""
    return frozenset(td.representative[tg.attach.get(v, v)] for v in s)


def lift_ld_set(g: Graph, td: TwinDecomposition, tg: TildeGraph, s: Iterable[int]) -> frozenset[int]:
    from .invariants import is_locating_dominating

    s = frozenset(s)
    if not is_locating_dominating(tg.graph, s):
        raise NotLocatingDominating("input set is not locating-dominating in G~")
    out = project(td, tg, s) | td.omega
    if not is_locating_dominating(g, out):
        raise AssertionError("lifted set is not locating-dominating")
    return out
