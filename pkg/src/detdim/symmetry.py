"""Automorphisms by individualisation and colour refinement.

Colourings are lists mapping vertex -> colour index.  Refinement replaces
each colour by the rank of ``(colour, sorted neighbour colours)`` until the
number of colours stops growing; ranks are computed over the union of the
colourings being refined together, so two colourings stay comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded
from .graph import Graph, bits, is_tree, to_mask, to_set
from .invariants import InvariantResult, SUBSET_SEARCH
from .search import Budget, _levels_table, check_cap
from .twins import forced_twin_mask

DET_CAP = 20
DET_TREE_CAP = 64


@dataclass(frozen=True)
class AutomorphismWitness:
    perm: tuple[int, ...]

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.perm))

    def moved(self) -> frozenset[int]:
        return frozenset(i for i, p in enumerate(self.perm) if i != p)


def is_automorphism(g: Graph, perm: Sequence[int]) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    for u in range(g.n):
        if g.adj[perm[u]] != to_mask(perm[v] for v in bits(g.adj[u])):
            return False
    return True


def _refine(g: Graph, colorings: list[list[int]]) -> list[list[int]] | None:
    """Refine several colourings in lockstep; None if they become incompatible."""
    ncolors = len(set(colorings[0]))
    while True:
        sigs = [
            [(c[v], tuple(sorted(c[u] for u in bits(g.adj[v])))) for v in range(g.n)]
            for c in colorings
        ]
        first = sorted(sigs[0])
        if any(sorted(s) != first for s in sigs[1:]):
            return None
        rank = {s: i for i, s in enumerate(sorted(set(first)))}
        colorings = [[rank[x] for x in s] for s in sigs]
        if len(rank) == ncolors:
            return colorings
        ncolors = len(rank)


def _individualize(c: list[int], v: int) -> list[int]:
    out = list(c)
    out[v] = -1
    return out


def _target_cell(c: list[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, col in enumerate(c):
        cells.setdefault(col, []).append(v)
    big = [(len(vs), col) for col, vs in cells.items() if len(vs) > 1]
    if not big:
        return None
    return cells[min(big)[1]]


def _cell(c: list[int], color: int) -> list[int]:
    return [v for v, col in enumerate(c) if col == color]


def _extend(g: Graph, left: list[int], right: list[int]) -> tuple[int, ...] | None:
    """An automorphism carrying colouring ``left`` onto ``right``, if any."""
    cell = _target_cell(left)
    if cell is None:
        where = {col: v for v, col in enumerate(right)}
        perm = tuple(where[left[v]] for v in range(g.n))
        return perm if is_automorphism(g, perm) else None
    a = cell[0]
    for b in _cell(right, left[a]):
        pair = _refine(g, [_individualize(left, a), _individualize(right, b)])
        if pair is None:
            continue
        perm = _extend(g, pair[0], pair[1])
        if perm is not None:
            return perm
    return None


def _initial(g: Graph, fixed: Sequence[int]) -> list[int]:
    c = [g.degree(v) for v in range(g.n)]
    for i, v in enumerate(fixed):
        c[v] = -1 - i
    return c


def equitable_partition(g: Graph, fixed: Iterable[int] = ()) -> list[int]:
    return _refine(g, [_initial(g, sorted(set(fixed)))])[0]


def nontrivial_automorphism_fixing(g: Graph, s: Iterable[int] = ()) -> AutomorphismWitness | None:
    c = equitable_partition(g, s)
    while True:
        cell = _target_cell(c)
        if cell is None:
            return None
        v = cell[0]
        for w in cell[1:]:
            pair = _refine(g, [_individualize(c, v), _individualize(c, w)])
            if pair is None:
                continue
            perm = _extend(g, pair[0], pair[1])
            if perm is not None:
                return AutomorphismWitness(perm)
        # every automorphism fixing s also fixes v
        c = _refine(g, [_individualize(c, v)])[0]


def is_determining(g: Graph, s: Iterable[int]) -> bool:
    return nontrivial_automorphism_fixing(g, s) is None


def determining_number(g: Graph, *, cap: int | None = None, time_budget: float | None = None) -> InvariantResult:
    """Exact Det by cardinality-ordered search.

    Candidates are restricted to vertices in non-trivial orbits (a vertex
    fixed by every automorphism never shrinks a stabiliser), and all but
    the largest vertex of every twin class is forced in.  Neither
    restriction changes the optimum or the colex-first witness.
    """
    if cap is None:
        cap = DET_TREE_CAP if is_tree(g) else DET_CAP
    check_cap(g.n, cap, "determining number")
    budget = Budget(time_budget)
    forced = forced_twin_mask(g)
    nforced = bin(forced).count("1")
    if is_determining(g, bits(forced)):
        return InvariantResult(nforced, to_set(forced), SUBSET_SEARCH)
    moving = 0
    for orb in orbits(g, cap=None):
        if len(orb) > 1:
            moving |= to_mask(orb)
    free = tuple(v for v in range(g.n) if moving >> v & 1 and not forced >> v & 1)
    if len(free) > 24:
        raise CapExceeded(f"determining number: {len(free)} candidate vertices")
    masks, pcs = _levels_table(free)
    for j in range(1, len(free) + 1):
        for m in masks[pcs == j]:
            m = int(m) | forced
            if is_determining(g, bits(m)):
                return InvariantResult(nforced + j, to_set(m), SUBSET_SEARCH)
            budget.check()
    raise AssertionError("the whole vertex set is always determining")


def orbits(g: Graph, *, cap: int | None = 64) -> list[frozenset[int]]:
    check_cap(g.n, cap, "orbits")
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    c = equitable_partition(g)
    for v in range(g.n):
        for w in range(v + 1, g.n):
            if c[v] != c[w] or find(v) == find(w):
                continue
            pair = _refine(g, [_individualize(c, v), _individualize(c, w)])
            perm = None if pair is None else _extend(g, pair[0], pair[1])
            if perm is not None:
                for x, y in enumerate(perm):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, set[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def certificate(g: Graph) -> tuple[int, ...]:
    """Canonical form: the least adjacency image over the refinement search tree.

    Two graphs are isomorphic iff their certificates agree.  Branches are
    pruned with twins and with automorphisms discovered from equal leaves.
    """
    n = g.n
    best_cert = None
    best_lab = None
    autos: list[tuple[int, ...]] = []

    def leaf(c: list[int]):
        nonlocal best_cert, best_lab
        inv = [0] * n
        for v, col in enumerate(c):
            inv[col] = v
        cert = tuple(to_mask(c[u] for u in bits(g.adj[inv[p]])) for p in range(n))
        if best_cert is None or cert < best_cert:
            best_cert, best_lab = cert, inv
        elif cert == best_cert:
            # vertex at position p here plays the role of best_lab[p]
            perm = [0] * n
            for p in range(n):
                perm[inv[p]] = best_lab[p]
            autos.append(tuple(perm))

    def orbit_rep(fixed: list[int]):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in autos:
            if all(perm[v] == v for v in fixed):
                for x, y in enumerate(perm):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
        return find

    def walk(c: list[int], fixed: list[int]):
        cell = _target_cell(c)
        if cell is None:
            leaf(c)
            return
        done: list[int] = []
        for v in cell:
            if any(are_twins_fast(g, v, w) for w in done):
                continue
            if done and autos:
                find = orbit_rep(fixed)
                if any(find(v) == find(w) for w in done):
                    continue
            done.append(v)
            walk(_refine(g, [_individualize(c, v)])[0], fixed + [v])

    walk(equitable_partition(g), [])
    return (n,) + best_cert


def are_twins_fast(g: Graph, u: int, v: int) -> bool:
    return g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u)
