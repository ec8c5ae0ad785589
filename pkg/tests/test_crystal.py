import json
from dataclasses import replace
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crystalwalls.cartan import INDICES, pair, simple_coroot
from crystalwalls.crystal import (
    CapacityError,
    TensorModel,
    build_graph,
    check_axioms,
    check_root_isomorphism,
    multiplicity_table,
)
from crystalwalls.paths import PathModel
from crystalwalls.perfect import B_MODEL, BElem, wt_b
from crystalwalls.walls import WallModel

B = BElem
BB = TensorModel(B_MODEL, B_MODEL)
pairs = st.tuples(st.sampled_from(list(B)), st.sampled_from(list(B)))
colors = st.sampled_from(INDICES)


def string_lengths(model, i, x):
    """eps and phi by walking e_i and f_i, ignoring any closed formula."""
    eps, y = 0, model.e(i, x)
    while y is not None:
        eps, y = eps + 1, model.e(i, y)
    phi, y = 0, model.f(i, x)
    while y is not None:
        phi, y = phi + 1, model.f(i, y)
    return eps, phi


def test_tensor_f_examples():
    assert BB.f(1, (B.B1b2, B.B2b2)) == (B.B2b2, B.B2b2)
    assert BB.f(0, (B.B12, B.B12)) is None


def test_tensor_e_examples():
    assert BB.e(2, (B.B12, B.B12)) is None
    # phi_1 of the left factor is 0 and eps_1 of the right one is 1: act right
    assert BB.e(1, (B.B2b1, B.B2b2)) == (B.B2b1, B.B1b2)


def test_tensor_weight_is_additive():
    assert BB.wt((B.B12, B.B12)) == wt_b(B.B12) + wt_b(B.B12)


def test_tensor_eps_example():
    w = pair(wt_b(B.B1b2), simple_coroot(1))
    assert BB.eps(1, (B.B1b2, B.B2b1)) == max(0, 2 - w) == 0


@pytest.mark.parametrize("i", INDICES)
def test_tensor_formula_matches_string_lengths(i):
    for t in product(B, B):
        assert BB.eps_phi(i, t) == string_lengths(BB, i, t)


@given(pairs, colors)
def test_tensor_axiom_one(t, i):
    eps, phi = BB.eps_phi(i, t)
    assert phi - eps == pair(BB.wt(t), simple_coroot(i))
    assert eps >= B_MODEL.eps(i, t[0])


@given(pairs, colors)
def test_tensor_round_trip(t, i):
    y = BB.e(i, t)
    if y is not None:
        assert BB.f(i, y) == t
    y = BB.f(i, t)
    if y is not None:
        assert BB.e(i, y) == t


def test_tensor_square_is_a_crystal():
    g = build_graph(BB, (B.B12, B.B12), 30)
    assert len(g) == 25
    assert check_axioms(g, BB) == []


def test_depth_zero_is_a_single_node():
    for model in (WallModel(0), PathModel(1)):
        g = build_graph(model, model.root(), 0)
        assert len(g) == 1 and g.edges == [] and g.nodes[0].frontier


def test_negative_depth_rejected():
    with pytest.raises(ValueError):
        build_graph(B_MODEL, B.B12, -1)


def test_node_cap():
    m = WallModel(1)
    with pytest.raises(CapacityError):
        build_graph(m, m.root(), 20, node_cap=10)


def test_corrupted_graph_is_caught():
    g = build_graph(B_MODEL, B.B12, 10)
    u, v, i = g.edges[0]
    bad = replace(g, edges=[(u, v, (i + 1) % 3)] + g.edges[1:])
    found = check_axioms(bad, B_MODEL)
    assert found
    assert any(x.condition == "iv" for x in found)


@pytest.mark.parametrize("ground", INDICES)
def test_generation_is_deterministic(ground):
    m = WallModel(ground)
    a = build_graph(m, m.root(), 7)
    b = build_graph(m, m.root(), 7)
    assert a.to_json() == b.to_json()
    assert a.to_dot() == b.to_dot()
    data = json.loads(a.to_json())
    assert len(data["nodes"]) == len(a) and len(data["edges"]) == len(a.edges)


def test_dot_colors():
    dot = build_graph(B_MODEL, B.B12, 10).to_dot()
    assert 'label="0", color="red"' in dot
    assert 'label="1", color="blue"' in dot
    assert 'label="2", color="darkgreen"' in dot


@pytest.mark.parametrize("model", [WallModel(0), WallModel(1), PathModel(2)])
def test_f_is_injective_per_color(model):
    g = build_graph(model, model.root(), 8)
    for i in INDICES:
        targets = [v for _, v, c in g.edges if c == i]
        assert len(targets) == len(set(targets))


def test_tensor_associativity_smoke():
    left = TensorModel(TensorModel(B_MODEL, B_MODEL), B_MODEL)
    right = TensorModel(B_MODEL, TensorModel(B_MODEL, B_MODEL))
    for depth in range(6):
        a = build_graph(left, ((B.B12, B.B12), B.B12), depth)
        b = build_graph(right, (B.B12, (B.B12, B.B12)), depth)
        assert len(a) == len(b)


@pytest.mark.parametrize("model", [B_MODEL, WallModel(0), PathModel(1), BB])
def test_self_isomorphism(model):
    root = {B_MODEL: B.B12, BB: (B.B12, B.B12)}.get(model, None)
    root = root if root is not None else model.root()
    g = build_graph(model, root, 6)
    report = check_root_isomorphism(g, g, model, model)
    assert report.ok
    assert all(a == b for a, b in report.mapping.items())


def test_different_grounds_are_not_isomorphic():
    a, b = PathModel(0), PathModel(1)
    report = check_root_isomorphism(
        build_graph(a, a.root(), 3), build_graph(b, b.root(), 3), a, b)
    assert not report.ok
    assert report.mismatch


def test_multiplicity_table_flags():
    m = WallModel(0)
    g = build_graph(m, m.root(), 4)
    rows = multiplicity_table(g, affine=True)
    assert rows[0].weight == m.wt(m.root()) and rows[0].count == 1
    assert all(r.stable == (r.height <= 4) for r in rows)
    p = PathModel(0)
    rows = multiplicity_table(build_graph(p, p.root(), 4), affine=False)
    assert any(not r.stable for r in rows)
