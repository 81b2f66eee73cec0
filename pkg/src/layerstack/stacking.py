"""Layer stacking: offset each layer past the previous one, then optionally
rotate the whole picture onto its side and squash it into a pseudo-3D view.

Offsets are chained in layer order. Layer ``i+1`` is shifted along y by::

    fy = farthest.y + farthest.size + layer_distance

where ``farthest`` is the member of layer ``i`` with the largest y after its
own shift. The first layer is not moved. Layouts centred on their origin
(circle, random, force-directed) reach below their offset by half their
height; ``anchor_layers`` lifts each layer so its lowest node sits at fy.

The chain is always evaluated in the upright, flat frame, so the horizontal
view is exactly the vertical view turned by 270 degrees and the 3D squash
never alters x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import EmptyLayer
from .graph import Layer, MultilayerGraph, farthest_node, sort_layers_by_size
from .layouts import LayoutConfig, layout_layer

HORIZONTAL_ANGLE = 270 * math.pi / 180
TILT_ANGLE = 65 * math.pi / 180
Z_JITTER = 0.01


@dataclass(frozen=True)
class StackConfig:
    layer_distance: float = 200.0
    horizontal: bool = False
    three_d: bool = False
    split_by_level: bool = False
    sort_layers: bool = False
    # shift each layer so its lowest node sits at fy; off keeps layouts
    # about their own origin, which lets centred layers reach back past fy
    anchor_layers: bool = False

    def __post_init__(self):
        if not self.layer_distance >= 0:
            raise ValueError("layer_distance must be non-negative")


def whole_network_layout(graph: MultilayerGraph, cfg: LayoutConfig) -> np.ndarray:
    """Lay out every node at once (all edges take part); rows follow
    ``sorted(graph.nodes)``."""
    everything = Layer("*", 0, tuple(sorted(graph.nodes)))
    return layout_layer(everything, graph, cfg)


def _local_positions(graph, layout_cfg, split):
    if split:
        ids = sorted(graph.nodes)
        xy = whole_network_layout(graph, layout_cfg)
        row = dict(zip(ids, xy))
        return {layer.key: np.array([row[m] for m in layer.members]).reshape(-1, 2)
                for layer in graph.layers}
    return {layer.key: layout_layer(layer, graph, layout_cfg) for layer in graph.layers}


def stack(graph: MultilayerGraph, layout_cfg: LayoutConfig,
          stack_cfg: StackConfig) -> MultilayerGraph:
    """Lay out and stack every layer; returns a graph with final positions.

    Without ``split_by_level`` each layer is laid out on its own around the
    origin. With it, one layout of the whole network is cut into layers,
    and each layer is translated rigidly.
    """
    if stack_cfg.sort_layers:
        graph = sort_layers_by_size(graph)
    layers = sorted(graph.layers, key=lambda layer: layer.ordinal)
    for layer in layers:
        if not layer.members:
            raise EmptyLayer(layer.key)

    local = _local_positions(graph, layout_cfg, stack_cfg.split_by_level)

    frame = graph
    previous = None
    for layer in layers:
        if previous is None:
            fy = 0.0
        else:
            far = farthest_node(previous, frame)
            fy = far.y + far.size + stack_cfg.layer_distance
        xy = local[layer.key].copy()
        if stack_cfg.anchor_layers:
            xy[:, 1] -= xy[:, 1].min()
        xy[:, 1] += fy
        frame = frame.with_positions(layer.members, np.column_stack([xy, np.zeros(len(xy))]))
        previous = layer

    out = frame
    if stack_cfg.horizontal:
        out = _rotate(out, layers, HORIZONTAL_ANGLE)
    if stack_cfg.three_d:
        out = _tilt(out, layers, layout_cfg.seed)
    return out


def split_by_level(graph: MultilayerGraph, layout_cfg: LayoutConfig,
                   stack_cfg: StackConfig) -> MultilayerGraph:
    return stack(graph, layout_cfg, replace(stack_cfg, split_by_level=True))


def _rotate(graph, layers, theta):
    c, s = math.cos(theta), math.sin(theta)
    for layer in layers:
        p = graph.positions(layer.members)
        x, y = p[:, 0].copy(), p[:, 1].copy()
        p[:, 0] = x * c - y * s
        p[:, 1] = y * c + x * s
        graph = graph.with_positions(layer.members, p)
    return graph


def _tilt(graph, layers, seed):
    c, s = math.cos(TILT_ANGLE), math.sin(TILT_ANGLE)
    rng = np.random.default_rng(seed)
    for layer in layers:
        p = graph.positions(layer.members)
        p[:, 1] = p[:, 1] * c - p[:, 2] * s
        p[:, 2] = rng.random(len(p)) * Z_JITTER
        graph = graph.with_positions(layer.members, p)
    return graph
