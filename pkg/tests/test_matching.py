import random

import pytest

from detdim.corpus import all_graphs, gnp, random_c4_free_corpus
from detdim.errors import Disconnected, HasC4, NotMaximum, NotTwinFree
from detdim.families import complete, cycle, g_r, path, star
from detdim.graph import build_graph
from detdim.invariants import is_locating_dominating, location_domination_number
from detdim.matching import (
    Matching,
    brute_force_matching_number,
    edge_case,
    eliminate_um,
    is_matching,
    maximum_matching,
    u_m,
    v1_construction,
)
from oracles import brute_matching, petersen


def test_known_matching_numbers():
    assert len(maximum_matching(path(4))) == 2
    assert len(maximum_matching(cycle(5))) == 2
    assert len(maximum_matching(petersen())) == 5
    assert len(maximum_matching(complete(7))) == 3


def test_matching_validation():
    g = path(4)
    assert is_matching(g, [(0, 1), (2, 3)])
    assert not is_matching(g, [(0, 1), (1, 2)])
    assert not is_matching(g, [(0, 2)])
    m = Matching.of(g, [(1, 2)])
    assert m.mbar == frozenset({0, 3})


def test_blossom_against_independent_oracles():
    for n in range(1, 7):
        for g in all_graphs(n, connected=False):
            m = maximum_matching(g)
            assert is_matching(g, m.edges)
            assert len(m) == brute_matching(g) == brute_force_matching_number(g)
    rng = random.Random(5)
    for _ in range(200):
        g = gnp(rng.randint(2, 12), rng.choice((0.15, 0.3, 0.6)), rng)
        assert len(maximum_matching(g)) == brute_force_matching_number(g)


def test_edge_cases():
    k4 = complete(4)
    m = maximum_matching(k4)
    assert all(edge_case(k4, m, e) == 1 for e in m.edges)
    p3 = path(3)
    m = Matching.of(p3, [(0, 1)])
    assert edge_case(p3, m, (0, 1)) == 2
    tri = complete(3)
    m = Matching.of(tri, [(0, 1)])
    assert edge_case(tri, m, (0, 1)) == 3
    p4 = path(4)
    m = Matching.of(p4, [(1, 2)])
    with pytest.raises(NotMaximum):
        edge_case(p4, m, (1, 2))


def test_eliminate_um():
    g = path(4)
    with pytest.raises(NotMaximum):
        eliminate_um(g, Matching.of(g, [(1, 2)]))
    with pytest.raises(NotTwinFree):
        eliminate_um(star(3), maximum_matching(star(3)))
    m = maximum_matching(g)
    assert eliminate_um(g, m) == m
    # P5 matched on (0,1),(2,3) leaves 4 with N(4) inside (2,3)
    p5 = path(5)
    m = Matching.of(p5, [(0, 1), (2, 3)])
    assert u_m(p5, m) == frozenset({4})
    out = eliminate_um(p5, m)
    assert out.edges == frozenset({(0, 1), (3, 4)}) and not u_m(p5, out)
    nonempty = 0
    for g in random_c4_free_corpus(150, 4, 20, seed=9):
        m = maximum_matching(g)
        nonempty += bool(u_m(g, m))
        out = eliminate_um(g, m)
        assert not u_m(g, out) and len(out) == len(m) and is_matching(g, out.edges)
    assert nonempty > 0


def test_eliminate_um_rejects_isolated_vertex():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(Disconnected):
        eliminate_um(g, maximum_matching(g))


def test_v1_construction_examples():
    mp = v1_construction(g_r(6))
    assert len(mp.v1) == 7 and is_locating_dominating(g_r(6), mp.v1)
    mp = v1_construction(path(4))
    assert len(mp.v1) == 2 and is_locating_dominating(path(4), mp.v1)
    with pytest.raises(HasC4):
        v1_construction(build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]))
    with pytest.raises(Disconnected):
        v1_construction(build_graph(8, [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]))
    with pytest.raises(NotTwinFree):
        v1_construction(star(3))


def test_v1_partition_invariants():
    for g in random_c4_free_corpus(120, 4, 16, seed=2):
        mp = v1_construction(g)
        m = mp.matching
        assert mp.v1 | mp.v2 | m.mbar == frozenset(range(g.n))
        assert not mp.v1 & mp.v2
        mbar = sum(1 << x for x in m.mbar)
        for u, v in m.edges:
            assert (u in mp.v1) != (v in mp.v1)
            nu, nv = g.adj[u] & mbar, g.adj[v] & mbar
            if nu and not nv:
                assert u in mp.v1
            if nv and not nu:
                assert v in mp.v1
        assert is_locating_dominating(g, mp.v1)
        assert len(mp.v1) == len(maximum_matching(g)) <= g.n // 2
        if g.n <= 12:
            assert location_domination_number(g).value <= len(mp.v1)
