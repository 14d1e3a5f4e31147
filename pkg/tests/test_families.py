import json
from pathlib import Path

import pytest

from detdim import families as fam
from detdim.errors import BadParams
from detdim.families import FamilySpec, expected_order, g_r, gen, h_r, t_qs, t_r, theorem22_witness, wheel
from detdim.graph import common_neighbor_excess, is_tree
from detdim.invariants import location_domination_number
from detdim.symmetry import determining_number, nontrivial_automorphism_fixing
from detdim.trees import tree_det_lower_bound, tree_metric_dimension
from detdim.twins import is_twin_free

FIXTURE = json.loads((Path(__file__).parent / "fixtures" / "tqs_anchor.json").read_text())

SPECS = [
    FamilySpec(fam.PATH, (5,)), FamilySpec(fam.CYCLE, (7,)), FamilySpec(fam.COMPLETE, (4,)),
    FamilySpec(fam.STAR, (5,)), FamilySpec(fam.WHEEL, (8,)), FamilySpec(fam.T_R, (6,)),
    FamilySpec(fam.G_R, (7,)), FamilySpec(fam.H_R, (6,)), FamilySpec(fam.T_QS, (7, 4)),
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.name)
def test_orders_and_connectivity(spec):
    g = gen(spec)
    assert g.n == expected_order(spec)
    assert g.connected


@pytest.mark.parametrize("name, params", [
    (fam.T_R, (5,)), (fam.G_R, (2,)), (fam.T_QS, (6, 0)), (fam.T_QS, (7, 7)), (fam.CYCLE, (2,)),
    (fam.PATH, (1, 2)), ("NOPE", (1,)),
])
def test_bad_params(name, params):
    with pytest.raises(BadParams):
        FamilySpec(name, params)


def test_labels_follow_names():
    t = t_r(6)
    assert [t.label(v) for v in range(t.n)] == [f"u{i}" for i in range(7)]
    assert t.has_edge(t.index("u0"), t.index("u3"))
    h = h_r(6)
    assert h.has_edge(h.index("u0"), h.index("v0'"))
    assert h.has_edge(h.index("u0"), h.index("v0"))


def test_g_r_and_h_r():
    for r in (6, 7, 8):
        g, h = g_r(r), h_r(r)
        assert is_tree(g) and is_tree(h)
        assert is_twin_free(g) and not is_twin_free(h)
        assert common_neighbor_excess(g, 2) is None
    g6 = g_r(6)
    assert g6.n == 14 and determining_number(g6).value == 0
    assert location_domination_number(g6).value == 7
    h6 = h_r(6)
    assert h6.n == 15 and determining_number(h6).value == 1
    assert location_domination_number(h6).value == 8


def test_anchor_matches_fixture():
    assert fam.TQS_ANCHOR == FIXTURE["anchor"]


@pytest.mark.parametrize("s", range(7))
def test_t_qs_semantics(s):
    q = 7
    g = t_qs(q, s)
    assert g.n == 7 * q + s and is_tree(g) and is_twin_free(g)
    assert tree_metric_dimension(g).value == (2 * q if s <= 3 else 2 * q + 1)
    assert nontrivial_automorphism_fixing(g) is None
    assert tree_det_lower_bound(g) == 0


@pytest.mark.parametrize("anchor", [0, 1, 6])
def test_other_anchors_fail_validation(anchor):
    g = t_qs(7, 0, anchor)
    ok = tree_metric_dimension(g).value == 14 and nontrivial_automorphism_fixing(g) is None
    assert not ok


def test_wheel_shape():
    w = wheel(8)
    assert w.degree(0) == 8 and all(w.degree(v) == 3 for v in range(1, 9))


def test_theorem22_witness():
    assert theorem22_witness(14, complemented=False).adj == g_r(6).adj
    assert theorem22_witness(15, complemented=False).adj == h_r(6).adj
    assert theorem22_witness(16).n == 16
    with pytest.raises(BadParams):
        theorem22_witness(13)
