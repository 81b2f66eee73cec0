"""Exploded view: one layout for the whole network, then pull layers apart.

Laying out each layer separately gives every layer its own shape. Laying
out the whole network first keeps a node near its neighbours in other
layers; the layers are then only translated, so the shape inside each
layer survives unchanged.
"""

import numpy as np

from layerstack import LayoutConfig, StackConfig, split_by_level, stack
from layerstack.graph import Edge, MultilayerGraph, NodeAttribute, assign_layers, make_node

rng = np.random.default_rng(5)
nodes = [make_node(f"v{i:02d}", label="", attributes={"tier": "ABC"[i % 3]})
         for i in range(30)]
edges = [Edge(f"v{a:02d}", f"v{b:02d}") for a, b in rng.integers(0, 30, size=(45, 2)) if a != b]
graph = assign_layers(MultilayerGraph.build(nodes, edges), NodeAttribute("tier"))
layout = LayoutConfig(algorithm="forceatlas", seed=2)


def inter_edge_length(g):
    inter = [e for e in g.edges if g.layer_of[e.source] != g.layer_of[e.target]]
    a = g.positions([e.source for e in inter])[:, 0]
    b = g.positions([e.target for e in inter])[:, 0]
    return float(np.mean(np.abs(a - b)))


per_layer = stack(graph, layout, StackConfig(layer_distance=100))
exploded = split_by_level(graph, layout, StackConfig(layer_distance=100))
print("mean horizontal drift along inter-layer edges")
print(f"  per-layer layouts: {inter_edge_length(per_layer):7.1f} px")
print(f"  split by level:    {inter_edge_length(exploded):7.1f} px")
