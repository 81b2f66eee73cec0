"""Lay out one layer with each algorithm and check for node overlaps.

Circle, grid and linear placements reserve room for every node and its
label, so they never overlap. Random and force-directed placements make no
such promise; the overlap count shows how close they get.
"""

import numpy as np

from layerstack import LayoutConfig, count_overlaps, layer_extent, layout_layer
from layerstack.layouts import ALGORITHMS
from layerstack.graph import Edge, MultilayerGraph, NodeAttribute, assign_layers, make_node

rng = np.random.default_rng(0)
nodes = [make_node(f"n{i:02d}", label=f"v{i}", size=float(rng.uniform(5, 15)),
                   attributes={"layer": "only"}) for i in range(24)]
edges = [Edge(f"n{i:02d}", f"n{(i + 1) % 24:02d}") for i in range(24)]
edges += [Edge(f"n{i:02d}", f"n{(i * 7) % 24:02d}") for i in range(0, 24, 3) if i]
graph = assign_layers(MultilayerGraph.build(nodes, edges), NodeAttribute("layer"))
layer = graph.layers[0]

print(f"layer extent: {layer_extent(layer, graph):.1f} px\n")
print(f"{'layout':<11} {'width':>8} {'height':>8} {'overlaps':>9}")
for algorithm in ALGORITHMS:
    xy = layout_layer(layer, graph, LayoutConfig(algorithm=algorithm, seed=1))
    placed = graph.with_positions(layer.members, xy)
    w, h = np.ptp(xy, axis=0)
    print(f"{algorithm:<11} {w:8.1f} {h:8.1f} {count_overlaps(layer, placed):9d}")
