"""Set predicates and exact solvers for the domination and resolving invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import (
    CapExceeded, Disconnected, GraphError, NotDistinguishing,
    NotMinimalDominating, NotTwinFree,
)
from .graph import Graph, bits, complement, to_mask, to_set
from .search import check_cap, hits_all, minimum_subset
from .twins import forced_twin_mask, is_twin_free

SUBSET_CAP = 24
GAMMA_CAP = 18

SUBSET_SEARCH = "subset-search"
FORMULA = "formula"
CONSTRUCTION = "construction"


@dataclass(frozen=True)
class InvariantResult:
    value: int
    witness: frozenset[int]
    method: str = SUBSET_SEARCH
    coloring: tuple[int, ...] | None = field(default=None, compare=False)

    def as_dict(self) -> dict:
        d = {"value": self.value, "witness": sorted(self.witness), "method": self.method}
        if self.coloring is not None:
            d["coloring"] = list(self.coloring)
        return d


def _require_connected(g: Graph):
    if not g.connected:
        raise Disconnected("graph is not connected")


# predicates -------------------------------------------------------------------

def resolves(g: Graph, u: int, x: int, y: int) -> bool:
    d = g.dist
    return d[u, x] != d[u, y]


def is_resolving(g: Graph, s: Iterable[int]) -> bool:
    _require_connected(g)
    s = sorted(set(s))
    d = g.dist
    seen = set()
    for x in range(g.n):
        vec = tuple(d[u, x] for u in s)
        if vec in seen:
            return False
        seen.add(vec)
    return True


def distinguishes(g: Graph, u: int, x: int, y: int) -> bool:
    return u in (x, y) or g.has_edge(u, x) != g.has_edge(u, y)


def _codes(g: Graph, dmask: int) -> list[int]:
    """Neighbourhood traces N(x) & D of the vertices outside D."""
    return [g.adj[x] & dmask for x in range(g.n) if not dmask >> x & 1]


def is_distinguishing(g: Graph, d: Iterable[int]) -> bool:
    codes = _codes(g, to_mask(d))
    return len(set(codes)) == len(codes)


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    return all(_codes(g, to_mask(d)))


def is_k_dominating(g: Graph, d: Iterable[int], k: int) -> bool:
    if k < 1:
        raise ValueError("k must be >= 1")
    return all(c.bit_count() >= k for c in _codes(g, to_mask(d)))


def is_locating_dominating(g: Graph, d: Iterable[int]) -> bool:
    codes = _codes(g, to_mask(d))
    return all(codes) and len(set(codes)) == len(codes)


def is_minimal_dominating(g: Graph, d: Iterable[int]) -> bool:
    dm = to_mask(d)
    if not is_dominating(g, dm):
        return False
    return not any(is_dominating(g, dm & ~(1 << v)) for v in bits(dm))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    sm = to_mask(s)
    return not any(g.adj[v] & sm for v in bits(sm))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    sm = to_mask(s)
    return all((g.adj[v] | 1 << v) & sm == sm for v in bits(sm))


def is_proper_coloring(g: Graph, coloring) -> bool:
    return all(coloring[u] != coloring[v] for u, v in g.edges())


def complete_to_ld(g: Graph, d: Iterable[int]) -> frozenset[int]:
    dm = to_mask(d)
    if not is_distinguishing(g, dm):
        raise NotDistinguishing("input set is not distinguishing")
    missing = [x for x in range(g.n) if not dm >> x & 1 and not g.adj[x] & dm]
    # two undominated outsiders would share the empty trace
    assert len(missing) <= 1
    return to_set(dm | to_mask(missing))


# hitting-set families ----------------------------------------------------------

def resolving_family(g: Graph) -> list[int]:
    d = g.dist
    fam = []
    for x in range(g.n):
        for y in range(x + 1, g.n):
            fam.append(to_mask(u for u in range(g.n) if d[u, x] != d[u, y]))
    return fam


def distinguishing_family(g: Graph) -> list[int]:
    return [
        (1 << x | 1 << y | (g.adj[x] ^ g.adj[y]))
        for x in range(g.n) for y in range(x + 1, g.n)
    ]


def domination_family(g: Graph) -> list[int]:
    return [g.closed(x) for x in range(g.n)]


def k_dominating_acceptor(g: Graph, k: int):
    adj = np.array(g.adj, dtype=np.int64)

    def accept(masks: np.ndarray) -> np.ndarray:
        ok = np.ones(masks.shape[0], dtype=bool)
        for x in range(g.n):
            inside = (masks >> x) & 1
            ok &= (inside == 1) | (np.bitwise_count(masks & adj[x]) >= k)
        return ok

    return accept


def ld_vector(g: Graph, masks: np.ndarray) -> np.ndarray:
    """Vectorised locating-domination test over an array of masks."""
    return hits_all(distinguishing_family(g) + domination_family(g))(masks)


def dominating_vector(g: Graph, masks: np.ndarray) -> np.ndarray:
    return hits_all(domination_family(g))(masks)


# exact minima -------------------------------------------------------------------

def _result(found, what) -> InvariantResult:
    if found is None:
        raise GraphError(f"no {what} found")
    k, mask = found
    return InvariantResult(k, to_set(mask))


def metric_dimension(g: Graph, *, cap: int | None = SUBSET_CAP, time_budget: float | None = None) -> InvariantResult:
    _require_connected(g)
    check_cap(g.n, cap, "metric dimension")
    found = minimum_subset(
        g.n, hits_all(resolving_family(g)), forced=forced_twin_mask(g),
        start=1 if g.n > 1 else 0, time_budget=time_budget,
    )
    return _result(found, "resolving set")


def location_domination_number(g: Graph, *, cap: int | None = SUBSET_CAP, time_budget: float | None = None) -> InvariantResult:
    _require_connected(g)
    return ld_minimum(g, cap=cap, time_budget=time_budget)


def ld_minimum(g: Graph, *, cap: int | None = SUBSET_CAP, time_budget: float | None = None) -> InvariantResult:
    """Exact lambda without the connectivity precondition."""
    check_cap(g.n, cap, "locating-domination number")
    fam = distinguishing_family(g) + domination_family(g)
    found = minimum_subset(g.n, hits_all(fam), forced=forced_twin_mask(g), start=1, time_budget=time_budget)
    return _result(found, "locating-dominating set")


def domination_number(g: Graph, *, cap: int | None = SUBSET_CAP, time_budget: float | None = None) -> InvariantResult:
    check_cap(g.n, cap, "domination number")
    found = minimum_subset(g.n, hits_all(domination_family(g)), start=1 if g.n else 0, time_budget=time_budget)
    return _result(found, "dominating set")


def k_domination_number(g: Graph, k: int, *, cap: int | None = SUBSET_CAP, time_budget: float | None = None) -> InvariantResult:
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return domination_number(g, cap=cap, time_budget=time_budget)
    check_cap(g.n, cap, "k-domination number")
    found = minimum_subset(g.n, k_dominating_acceptor(g, k), start=min(k, g.n), time_budget=time_budget)
    return _result(found, f"{k}-dominating set")


# minimal dominating sets ------------------------------------------------------------

def minimal_dominating_masks(g: Graph, *, cap: int | None = GAMMA_CAP) -> np.ndarray:
    """Every minimal dominating set of ``g`` as an ascending array of masks."""
    check_cap(g.n, cap, "minimal dominating set enumeration")
    n = g.n
    cover = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        cover[1 << i: 1 << (i + 1)] = cover[: 1 << i] | g.closed(i)
    dom = cover == g.full
    idx = np.arange(1 << n, dtype=np.int64)
    minimal = dom.copy()
    for i in range(n):
        has = ((idx >> i) & 1).astype(bool)
        minimal &= ~(has & dom[idx ^ (1 << i)])
    return idx[minimal]


def upper_domination_number(g: Graph, *, cap: int | None = GAMMA_CAP) -> InvariantResult:
    masks = minimal_dominating_masks(g, cap=cap)
    sizes = np.bitwise_count(masks)
    best = int(sizes.max())
    witness = int(masks[sizes == best].min())
    return InvariantResult(best, to_set(witness))


def ore_complement_ld(g: Graph, d: Iterable[int]) -> frozenset[int]:
    dm = to_mask(d)
    if not is_twin_free(g):
        raise NotTwinFree("graph has twins")
    if any(row == 0 for row in g.adj):
        raise GraphError("graph has an isolated vertex")
    if not is_minimal_dominating(g, dm):
        raise NotMinimalDominating("set is not a minimal dominating set")
    return to_set(g.full & ~dm)


# independence, cliques, colouring ---------------------------------------------------

def _max_independent(g: Graph, cand: int, best: list, cur: int):
    if not cand:
        if cur.bit_count() > best[0].bit_count():
            best[0] = cur
        return
    if cur.bit_count() + cand.bit_count() <= best[0].bit_count():
        return
    # vertex of maximum degree inside the candidate set, lowest index on ties
    v = max(bits(cand), key=lambda x: ((g.adj[x] & cand).bit_count(), -x))
    if not g.adj[v] & cand:
        # cand is independent
        _max_independent(g, 0, best, cur | cand)
        return
    _max_independent(g, cand & ~g.closed(v), best, cur | 1 << v)
    _max_independent(g, cand & ~(1 << v), best, cur)


def independence_number(g: Graph, *, cap: int | None = SUBSET_CAP * 2) -> InvariantResult:
    check_cap(g.n, cap, "independence number")
    best = [0]
    _max_independent(g, g.full, best, 0)
    return InvariantResult(best[0].bit_count(), to_set(best[0]), "branch-and-bound")


def clique_number(g: Graph, *, cap: int | None = SUBSET_CAP * 2) -> InvariantResult:
    res = independence_number(complement(g), cap=cap)
    return InvariantResult(res.value, res.witness, res.method)


def _colorable(g: Graph, k: int) -> tuple[int, ...] | None:
    n = g.n
    color = [-1] * n

    def pick():
        best = None
        best_key = None
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in bits(g.adj[v]) if color[u] >= 0})
            key = (sat, g.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        banned = {color[u] for u in bits(g.adj[v])}
        # a fresh colour is symmetric, so only the first unused one is tried
        for c in range(min(used + 1, k)):
            if c in banned:
                continue
            color[v] = c
            if solve(colored + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return tuple(color) if solve(0, 0) else None


def chromatic_number(g: Graph, *, cap: int | None = SUBSET_CAP * 2) -> InvariantResult:
    check_cap(g.n, cap, "chromatic number")
    if g.n == 0:
        return InvariantResult(0, frozenset(), "iterative-deepening", ())
    lower = clique_number(g).value
    for k in range(max(1, lower), g.n + 1):
        coloring = _colorable(g, k)
        if coloring is not None:
            return InvariantResult(k, frozenset(), "iterative-deepening", coloring)
    raise AssertionError("unreachable: n colours always suffice")


def erdos_szekeres_bound(n: int) -> int:
    """ceil(log2(n) / 2)."""
    return math.ceil(math.log2(n) / 2) if n >= 1 else 0
