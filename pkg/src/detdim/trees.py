"""Leg structure of trees: exterior major vertices, terminal degrees and the
closed-form metric dimension."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotATree
from .graph import Graph, bits, is_tree
from .invariants import FORMULA, InvariantResult


@dataclass(frozen=True)
class Leg:
    leaf: int
    length: int
    vertices: tuple[int, ...]  # leaf first, major vertex excluded


@dataclass(frozen=True)
class TreeAnalysis:
    exterior_major: tuple[int, ...]
    legs: dict[int, tuple[Leg, ...]] = field(default_factory=dict)

    def ter(self, u: int) -> int:
        return len(self.legs.get(u, ()))

    def ter_prime(self, u: int) -> int:
        return len({leg.length for leg in self.legs.get(u, ())})

    def n_u(self, u: int) -> int:
        return 1 + sum(leg.length for leg in self.legs.get(u, ()))

    def as_dict(self) -> dict:
        return {
            str(u): {"ter": self.ter(u), "ter_prime": self.ter_prime(u), "n_u": self.n_u(u),
                     "legs": sorted(leg.length for leg in self.legs[u])}
            for u in self.exterior_major
        }


def _require_tree(g: Graph):
    if not is_tree(g):
        raise NotATree("graph is not a tree")


def is_path(g: Graph) -> bool:
    return all(g.degree(v) <= 2 for v in range(g.n))


def analyze_tree(g: Graph) -> TreeAnalysis:
    _require_tree(g)
    legs: dict[int, list[Leg]] = {}
    for leaf in range(g.n):
        if g.degree(leaf) != 1:
            continue
        walk = [leaf]
        prev, cur = leaf, next(bits(g.adj[leaf]))
        while g.degree(cur) == 2:
            walk.append(cur)
            prev, cur = cur, next(v for v in bits(g.adj[cur]) if v != prev)
        if g.degree(cur) >= 3:
            legs.setdefault(cur, []).append(Leg(leaf, len(walk), tuple(walk)))
    ex = tuple(sorted(legs))
    return TreeAnalysis(ex, {u: tuple(legs[u]) for u in ex})


def tree_metric_dimension(g: Graph) -> InvariantResult:
    _require_tree(g)
    if g.n == 1:
        return InvariantResult(0, frozenset(), FORMULA)
    if is_path(g):
        end = next(v for v in range(g.n) if g.degree(v) <= 1)
        return InvariantResult(1, frozenset({end}), FORMULA)
    ta = analyze_tree(g)
    basis = set()
    for u in ta.exterior_major:
        # every leg but one carries a landmark; its leaf will do
        for leg in ta.legs[u][1:]:
            basis.add(leg.leaf)
    return InvariantResult(len(basis), frozenset(basis), FORMULA)


def tree_det_lower_bound(g: Graph) -> int:
    ta = analyze_tree(g)
    if not ta.exterior_major and is_path(g):
        raise NotATree("bound is stated for trees that are not paths")
    return sum(ta.ter(u) - ta.ter_prime(u) for u in ta.exterior_major)


def terprime_bound_check(g: Graph) -> bool:
    """ter'(u) <= 2/7 * n_u + 1 at every exterior major vertex (exact arithmetic)."""
    ta = analyze_tree(g)
    return all(7 * ta.ter_prime(u) <= 2 * ta.n_u(u) + 7 for u in ta.exterior_major)
