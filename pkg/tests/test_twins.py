import random

import pytest

from detdim.corpus import all_graphs
from detdim.errors import Disconnected, NotLocatingDominating, StarIsK2
from detdim.families import complete, cycle, g_r, path, star
from detdim.graph import build_graph
from detdim.invariants import is_locating_dominating, ld_minimum, location_domination_number
from detdim.symmetry import determining_number
from detdim.twins import (
    K,
    N,
    ONE,
    build_tilde,
    forced_twin_mask,
    is_twin_free,
    lift_ld_set,
    project,
    twin_classes,
    twin_decomposition,
)
from oracles import nbrs


def test_complete_graph_is_one_class():
    td = twin_decomposition(complete(5))
    assert td.r == 1 and td.class_type == (K,)
    assert td.omega == frozenset({1, 2, 3, 4})


def test_p4_is_twin_free():
    td = twin_decomposition(path(4))
    assert td.r == 4 and set(td.class_type) == {ONE} and td.omega == frozenset()
    assert td.star.adj == path(4).adj
    assert is_twin_free(path(4)) and is_twin_free(g_r(6))
    assert not is_twin_free(complete(3))


def test_star_classes():
    td = twin_decomposition(star(3))
    assert td.classes == (frozenset({0}), frozenset({1, 2, 3}))
    assert td.class_type == (ONE, N)
    assert td.r == 2 and td.star.m == 1


def test_c4_star_is_k2():
    with pytest.raises(StarIsK2) as info:
        build_tilde(cycle(4))
    assert info.value.fallback_bound == 1


def test_disconnected_tilde_rejected():
    with pytest.raises(Disconnected):
        build_tilde(build_graph(3, [(0, 1)]))


def test_twin_free_tilde_is_identity():
    g = g_r(6)
    tg = build_tilde(g)
    assert tg.graph.adj == g.adj and not tg.pendants


def test_two_twin_kn_vertices_get_pendants():
    # y joined to an independent pair x1, x2 and to an adjacent pair z1, z2;
    # in G* the classes {x1, x2} and {z1, z2} are twins (both see only y)
    g = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (3, 4)])
    td = twin_decomposition(g)
    assert sorted(td.class_type) == sorted([ONE, N, K])
    tg = build_tilde(g, td)
    assert len(tg.pendants) == 2
    assert set(tg.attach.values()) == {1, 2}
    assert sorted(tg.pendants) == [3, 4]  # numbered after V* by attachment vertex
    assert is_twin_free(tg.graph) and tg.graph.n <= g.n
    for p in tg.pendants:
        assert tg.graph.degree(p) == 1


def test_classes_match_neighbourhood_equality():
    for g in all_graphs(6, connected=False):
        td = twin_decomposition(g)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                twins = nbrs(g, u) - {v} == nbrs(g, v) - {u}
                assert (td.class_of[u] == td.class_of[v]) == twins
        assert len(td.omega) == g.n - td.r
        forced = forced_twin_mask(g)
        assert bin(forced).count("1") == g.n - td.r


def test_lift_ld_set_on_random_twin_graphs():
    rng = random.Random(7)
    done = 0
    while done < 40:
        n = rng.randint(4, 11)
        g = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        # blow up a vertex into twins to make sure classes exist
        if not g.connected:
            continue
        td = twin_decomposition(g)
        try:
            tg = build_tilde(g, td)
        except StarIsK2:
            continue
        s = ld_minimum(tg.graph).witness
        out = lift_ld_set(g, td, tg, s)
        lam = location_domination_number(g).value
        assert is_locating_dominating(g, out)
        assert lam <= len(out) <= len(s) + g.n - td.r
        assert lam - determining_number(g).value <= ld_minimum(tg.graph).value
        done += 1


def test_lift_rejects_non_ld_input():
    g = build_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (3, 4)])
    td = twin_decomposition(g)
    tg = build_tilde(g, td)
    with pytest.raises(NotLocatingDominating):
        lift_ld_set(g, td, tg, set())


def test_complete_graph_lift():
    g = complete(5)
    td = twin_decomposition(g)
    tg = build_tilde(g, td)
    assert tg.graph.n == 1
    out = lift_ld_set(g, td, tg, {0})
    # pi(S) plus Omega is all of V here, meeting the |S| + n - r bound exactly
    assert out == frozenset(range(5)) and is_locating_dominating(g, out)
    assert location_domination_number(g).value == 4
    assert project(td, tg, {0}) == frozenset({0})


def test_twin_classes_order():
    masks = twin_classes(star(3))
    assert masks == [0b0001, 0b1110]
