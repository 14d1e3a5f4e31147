import pytest

from detdim.corpus import (
    all_graphs,
    all_trees,
    all_twin_free,
    random_c4_free_corpus,
    random_tree_corpus,
    random_twin_free_corpus,
)
from detdim.graph import common_neighbor_excess, emit_graph6, is_tree
from detdim.symmetry import certificate
from detdim.twins import is_twin_free


@pytest.mark.parametrize("n, connected, count", [
    (1, True, 1), (2, True, 1), (3, True, 2), (4, True, 6), (5, True, 21), (6, True, 112), (7, True, 853),
    (4, False, 11), (5, False, 34), (6, False, 156),
])
def test_graph_counts(n, connected, count):
    gs = all_graphs(n, connected)
    assert len(gs) == count
    assert len({certificate(g) for g in gs}) == count
    assert [emit_graph6(g) for g in gs] == sorted(emit_graph6(g) for g in gs)


def test_tree_counts():
    assert [len(all_trees(n)) for n in range(1, 11)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    assert all(is_tree(t) for t in all_trees(9))


def test_twin_free_counts():
    assert [len(all_twin_free(n, connected=False)) for n in range(1, 8)] == [1, 0, 0, 1, 6, 36, 324]


def test_random_corpora_are_seeded_and_filtered():
    a = list(random_twin_free_corpus(30, 5, 12, seed=4))
    b = list(random_twin_free_corpus(30, 5, 12, seed=4))
    assert a == b and len(a) == 30
    assert all(is_twin_free(g) and g.connected and 5 <= g.n <= 12 for g in a)
    assert list(random_twin_free_corpus(30, 5, 12, seed=5)) != a
    trees = list(random_tree_corpus(30, 4, 20, seed=1))
    assert all(is_tree(t) for t in trees)
    c4 = list(random_c4_free_corpus(30, 4, 24, seed=1))
    assert all(common_neighbor_excess(g, 2) is None and is_twin_free(g) and g.connected for g in c4)
