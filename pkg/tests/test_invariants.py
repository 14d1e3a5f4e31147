import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detdim.corpus import all_graphs, all_twin_free
from detdim.errors import CapExceeded, Disconnected, NotMinimalDominating, NotTwinFree, Timeout
from detdim.families import complete, cycle, g_r, path, star
from detdim.graph import build_graph, complement
from detdim.invariants import (
    InvariantResult,
    chromatic_number,
    clique_number,
    complete_to_ld,
    distinguishes,
    domination_number,
    erdos_szekeres_bound,
    independence_number,
    is_clique,
    is_distinguishing,
    is_dominating,
    is_independent,
    is_k_dominating,
    is_locating_dominating,
    is_minimal_dominating,
    is_proper_coloring,
    is_resolving,
    k_domination_number,
    ld_minimum,
    ld_vector,
    location_domination_number,
    metric_dimension,
    minimal_dominating_masks,
    ore_complement_ld,
    resolves,
    upper_domination_number,
)
from detdim.search import all_masks
from oracles import (
    brute_alpha,
    brute_chi,
    brute_dim,
    brute_gamma,
    brute_lambda,
    distinguishing,
    dominating,
    locating_dominating,
    minimal_dominating_sets,
    petersen,
    resolving,
)

SMALL = [g for n in range(1, 7) for g in all_graphs(n)]


def test_frozen_values():
    assert metric_dimension(path(5)).value == 1
    assert metric_dimension(cycle(6)).value == 2
    assert metric_dimension(complete(5)).value == 4
    assert metric_dimension(petersen()).value == 3
    assert location_domination_number(path(4)).value == 2
    assert location_domination_number(g_r(6)).value == 7
    assert domination_number(petersen()).value == 3
    assert independence_number(petersen()).value == 4
    assert chromatic_number(petersen()).value == 3
    assert clique_number(complete(6)).value == 6
    assert upper_domination_number(star(4)).value == 4


def test_witnesses_satisfy_their_predicates():
    g = petersen()
    assert is_resolving(g, metric_dimension(g).witness)
    assert is_locating_dominating(g, location_domination_number(g).witness)
    assert is_dominating(g, domination_number(g).witness)
    assert is_k_dominating(g, k_domination_number(g, 2).witness, 2)
    assert is_independent(g, independence_number(g).witness)
    assert is_clique(g, clique_number(g).witness)
    chi = chromatic_number(g)
    assert chi.witness == frozenset() and is_proper_coloring(g, chi.coloring)
    assert max(chi.coloring) + 1 == chi.value


def test_result_serialisation():
    d = InvariantResult(2, frozenset({3, 1})).as_dict()
    assert d == {"value": 2, "witness": [1, 3], "method": "subset-search"}


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}m{g.m}")
def test_minima_match_brute_force(g):
    assert metric_dimension(g).value == brute_dim(g)
    assert location_domination_number(g).value == brute_lambda(g)
    assert domination_number(g).value == brute_gamma(g)
    assert k_domination_number(g, 2).value == brute_gamma(g, 2)
    assert independence_number(g).value == brute_alpha(g)
    assert clique_number(g).value == brute_alpha(complement(g))
    assert chromatic_number(g).value == brute_chi(g)


@pytest.mark.parametrize("g", [g for g in SMALL if g.n <= 6], ids=lambda g: f"n{g.n}m{g.m}")
def test_minimal_dominating_sets_and_upper_domination(g):
    masks = {frozenset(i for i in range(g.n) if int(m) >> i & 1) for m in minimal_dominating_masks(g)}
    want = set(minimal_dominating_sets(g))
    assert masks == want
    assert upper_domination_number(g).value == max(len(s) for s in want)


def test_predicates_agree_with_oracles_on_all_subsets():
    for g in all_graphs(5) + all_graphs(4, connected=False):
        for k in range(g.n + 1):
            for s in itertools.combinations(range(g.n), k):
                assert is_dominating(g, s) == dominating(g, s)
                assert is_locating_dominating(g, s) == locating_dominating(g, s)
                assert is_distinguishing(g, s) == distinguishing(g, s)
                if g.connected:
                    assert is_resolving(g, s) == resolving(g, s)


def test_vectorised_ld_matches_scalar():
    g = petersen()
    masks = all_masks(g.n)
    vec = ld_vector(g, masks)
    for m in range(0, 1 << g.n, 7):
        assert bool(vec[m]) == is_locating_dominating(g, [v for v in range(g.n) if m >> v & 1])


def test_pair_predicates():
    g = path(4)
    assert resolves(g, 0, 1, 2)
    assert not resolves(g, 1, 0, 2)
    assert distinguishes(g, 0, 0, 3)  # membership
    assert distinguishes(g, 1, 0, 3)  # adjacent to exactly one
    assert not distinguishes(g, 1, 0, 2)


def test_preconditions():
    two = build_graph(2, [])
    with pytest.raises(Disconnected):
        metric_dimension(two)
    with pytest.raises(Disconnected):
        location_domination_number(two)
    with pytest.raises(Disconnected):
        is_resolving(two, [0])
    assert ld_minimum(two).value == 2
    with pytest.raises(CapExceeded):
        metric_dimension(path(30))
    with pytest.raises(CapExceeded):
        metric_dimension(path(10), cap=5)


def test_timeout_is_raised():
    import random

    rng = random.Random(3)
    n = 22
    g = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
    with pytest.raises(Timeout):
        location_domination_number(g, time_budget=1e-9)


def test_ore_complement_ld():
    g = path(5)
    d = {1, 4}
    assert is_minimal_dominating(g, d)
    comp = ore_complement_ld(g, d)
    assert comp == frozenset({0, 2, 3}) and is_locating_dominating(g, comp)
    with pytest.raises(NotMinimalDominating):
        ore_complement_ld(g, {0, 1, 2, 3})
    with pytest.raises(NotTwinFree):
        ore_complement_ld(star(3), {0})


def test_complete_to_ld():
    for g in all_twin_free(6):
        for s in itertools.combinations(range(g.n), 3):
            if is_distinguishing(g, s):
                out = complete_to_ld(g, s)
                assert is_locating_dominating(g, out) and len(out) <= len(s) + 1


def test_erdos_szekeres_bound():
    assert [erdos_szekeres_bound(n) for n in (4, 5, 16, 17)] == [1, 2, 2, 3]


@st.composite
def connected_graphs(draw, max_n=9):
    n = draw(st.integers(2, max_n))
    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges += [(a, b) for a, b in extra if a != b]
    return build_graph(n, edges)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_invariant_chain_properties(g):
    dim = metric_dimension(g).value
    lam = location_domination_number(g).value
    gam = domination_number(g).value
    # an LD set is resolving in a connected graph, and it dominates
    assert dim <= lam and gam <= lam
    assert independence_number(g).value <= upper_domination_number(g).value
    assert chromatic_number(g).value >= clique_number(g).value


@settings(max_examples=40, deadline=None)
@given(connected_graphs(8), st.permutations(range(8)))
def test_invariants_are_relabelling_invariant(g, perm):
    from detdim.graph import permute

    p = [x for x in perm if x < g.n]
    h = permute(g, p)
    assert metric_dimension(g).value == metric_dimension(h).value
    assert location_domination_number(g).value == location_domination_number(h).value
