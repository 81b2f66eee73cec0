import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from layerstack.graph import farthest_node
from layerstack.layouts import LayoutConfig, layout_layer
from layerstack.metrics import layer_separation
from layerstack.stacking import StackConfig, split_by_level, stack, whole_network_layout

from helpers import layered, random_graph

GRID = LayoutConfig(algorithm="grid")


def by_ordinal(graph):
    return sorted(graph.layers, key=lambda layer: layer.ordinal)


def test_fy_310(monkeypatch):
    from layerstack import stacking

    # layer A's farthest node sits at y = 100 with size 10
    g = layered({"A": ["a"], "B": ["b"]})
    local = {"A": np.array([[0.0, 100.0]]), "B": np.array([[0.0, 0.0]])}
    monkeypatch.setattr(stacking, "_local_positions", lambda *a: local)
    out = stack(g, GRID, StackConfig(layer_distance=200))
    assert out.nodes["a"].y == 100.0
    assert out.nodes["b"].y == 310.0


def test_layer_distance_zero():
    g = layered({"A": ["a"], "B": ["b"]})
    out = stack(g, GRID, StackConfig(layer_distance=0))
    assert (out.nodes["a"].y, out.nodes["b"].y) == (0.0, 10.0)


def test_horizontal_rotation_example():
    from layerstack.stacking import HORIZONTAL_ANGLE, _rotate

    g = layered({"A": ["a"]}, positions={"a": (3.0, 7.0, 0.0)})
    out = _rotate(g, g.layers, HORIZONTAL_ANGLE)
    assert out.nodes["a"].pos[:2] == pytest.approx((7.0, -3.0), abs=1e-12)


def test_three_d_example():
    from layerstack.stacking import _tilt

    g = layered({"A": ["a"]}, positions={"a": (2.0, 10.0, 0.0)})
    out = _tilt(g, g.layers, seed=0)
    x, y, z = out.nodes["a"].pos
    assert x == 2.0
    assert y == pytest.approx(4.2262, abs=1e-4)
    assert 0 <= z < 0.01


def test_three_d_is_deterministic():
    g = random_graph(np.random.default_rng(2), 30, 3)
    cfg = StackConfig(three_d=True)
    a, b = stack(g, GRID, cfg), stack(g, GRID, cfg)
    assert a.positions().tobytes() == b.positions().tobytes()


def test_single_layer_split_equals_whole_layout():
    g = random_graph(np.random.default_rng(4), 15, 1)
    cfg = LayoutConfig(algorithm="fr", iterations=30)
    out = split_by_level(g, cfg, StackConfig())
    expected = layout_layer(g.layers[0], g, cfg)
    assert np.array_equal(out.positions(g.layers[0].members)[:, :2], expected)


def test_split_grid_path_gap():
    ids = [f"p{i}" for i in range(9)]
    members = {"A": ids[:3], "B": ids[3:6], "C": ids[6:]}
    g = layered(members, edges=list(zip(ids, ids[1:])))
    out = split_by_level(g, GRID, StackConfig(layer_distance=50))
    gaps = layer_separation(out)
    assert len(gaps) == 2
    assert all(gap >= 50 - 10 for gap in gaps)


def test_sort_layers_option():
    g = layered({"A": ["a1", "a2", "a3"], "B": ["b1"]})
    out = stack(g, GRID, StackConfig(sort_layers=True))
    assert [l.key for l in by_ordinal(out)] == ["B", "A"]
    assert out.nodes["b1"].y == 0.0


def test_stack_leaves_input_untouched():
    g = random_graph(np.random.default_rng(5), 20, 2)
    before = g.positions().copy()
    stack(g, LayoutConfig(algorithm="circle"), StackConfig(horizontal=True, three_d=True))
    assert np.array_equal(g.positions(), before)


@pytest.mark.parametrize("algorithm", ["grid", "linear"])
def test_separation_bound_for_anchored_layouts(algorithm):
    g = random_graph(np.random.default_rng(6), 60, 4)
    out = stack(g, LayoutConfig(algorithm=algorithm), StackConfig(layer_distance=120))
    biggest = max(n.size for n in g.nodes.values())
    assert all(gap >= 120 - 2 * biggest for gap in layer_separation(out))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 40), st.integers(1, 5),
       st.sampled_from(["circle", "grid", "linear", "random", "fr", "forceatlas"]),
       st.floats(0, 300))
def test_offset_law_holds_layer_by_layer(seed, n, k, algorithm, distance):
    g = random_graph(np.random.default_rng(seed), n, k)
    cfg = LayoutConfig(algorithm=algorithm, iterations=10, seed=seed % 1000)
    out = stack(g, cfg, StackConfig(layer_distance=distance))
    layers = by_ordinal(out)
    for prev, cur in zip(layers, layers[1:]):
        far = farthest_node(prev, out)
        local_min = layout_layer(cur, g, cfg)[:, 1].min()
        got = out.positions(cur.members)[:, 1].min()
        assert got == pytest.approx(far.y + far.size + distance + local_min, abs=1e-6)
    assert np.all(out.positions()[:, 2] == 0)


def test_whole_network_layout_covers_every_node():
    g = random_graph(np.random.default_rng(9), 25, 3)
    xy = whole_network_layout(g, LayoutConfig(algorithm="grid"))
    assert xy.shape == (25, 2)
    assert len({tuple(p) for p in xy}) == 25
    assert not math.isnan(xy.sum())


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 40), st.integers(2, 5),
       st.sampled_from(["circle", "random", "fr", "forceatlas"]), st.booleans())
def test_anchored_layers_never_reach_back(seed, n, k, algorithm, split):
    g = random_graph(np.random.default_rng(seed), n, k)
    cfg = LayoutConfig(algorithm=algorithm, iterations=10, seed=seed % 1000)
    out = stack(g, cfg, StackConfig(layer_distance=50, anchor_layers=True, split_by_level=split))
    layers = by_ordinal(out)
    for prev, cur in zip(layers, layers[1:]):
        far = farthest_node(prev, out)
        got = out.positions(cur.members)[:, 1].min()
        assert got == pytest.approx(far.y + far.size + 50, abs=1e-6)
    assert all(gap >= 50 for gap in layer_separation(out))
