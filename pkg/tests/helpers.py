"""Graph builders and brute-force oracles shared by the tests.

The oracles here are written with plain Python loops and ``math`` and must
not call into layerstack's numeric internals.
"""

import math
import string
from pathlib import Path

import numpy as np

from layerstack.graph import Edge, MultilayerGraph, NodeAttribute, assign_layers, make_node

DATA = Path(__file__).parent / "data"


def layered(members, edges=(), sizes=None, labels=None, positions=None):
    """Build a node-attribute graph from ``{layer_key: [ids]}``."""
    sizes, labels, positions = sizes or {}, labels or {}, positions or {}
    nodes = []
    for key, ids in members.items():
        for i in ids:
            nodes.append(make_node(i, label=labels.get(i, ""), size=sizes.get(i, 10.0),
                                   attributes={"layer": key},
                                   pos=positions.get(i, (0.0, 0.0, 0.0))))
    graph = MultilayerGraph.build(nodes, [Edge(a, b) for a, b in edges])
    return assign_layers(graph, NodeAttribute("layer"))


def random_graph(rng, n_nodes, n_layers, n_edges=None, size_range=(5.0, 30.0), max_label=20):
    """Random node-attribute graph; every layer gets at least one node."""
    n_layers = min(n_layers, n_nodes)
    if n_edges is None:
        n_edges = int(1.5 * n_nodes)
    keys = [f"L{k}" for k in range(n_layers)]
    nodes = []
    for i in range(n_nodes):
        key = keys[i] if i < n_layers else keys[rng.integers(n_layers)]
        label = "".join(rng.choice(list(string.ascii_letters), size=rng.integers(0, max_label + 1)))
        nodes.append(make_node(f"n{i:04d}", label=label,
                               size=float(rng.uniform(*size_range)),
                               attributes={"layer": key}))
    edges = []
    if n_nodes > 1:
        for _ in range(n_edges):
            a, b = rng.choice(n_nodes, size=2, replace=False)
            edges.append(Edge(f"n{a:04d}", f"n{b:04d}"))
    return assign_layers(MultilayerGraph.build(nodes, edges), NodeAttribute("layer"))


def brute_overlaps(points, radii):
    count = 0
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            d = math.dist(points[i], points[j])
            if d < radii[i] + radii[j]:
                count += 1
    return count


def brute_fr(xy, sizes, widths, edges, area, iterations, speed=1.0, gravity=10.0,
             origin=(0.0, 0.0), eps=0.01):
    """Scalar Fruchterman-Reingold with boundary distances, for comparison."""
    pts = [list(map(float, p)) for p in xy]
    n = len(pts)
    k = math.sqrt(area / n)
    t0 = 0.1 * math.sqrt(area) * speed
    for it in range(iterations):
        t = t0 * (1 - it / iterations)
        disp = [[0.0, 0.0] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                dx, dy = pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]
                c = math.hypot(dx, dy)
                d = max(eps, c - sizes[i] - sizes[j] - (widths[i] + widths[j]) / 2)
                f = k * k / d
                disp[i][0] += f * dx / c
                disp[i][1] += f * dy / c
        for a, b in edges:
            dx, dy = pts[a][0] - pts[b][0], pts[a][1] - pts[b][1]
            c = math.hypot(dx, dy)
            d = max(eps, c - sizes[a] - sizes[b] - (widths[a] + widths[b]) / 2)
            f = d * d / k
            disp[a][0] -= f * dx / c
            disp[a][1] -= f * dy / c
            disp[b][0] += f * dx / c
            disp[b][1] += f * dy / c
        for i in range(n):
            gx, gy = origin[0] - pts[i][0], origin[1] - pts[i][1]
            g = math.hypot(gx, gy)
            if g > 0:
                disp[i][0] += gravity * 0.01 * k * gx / g
                disp[i][1] += gravity * 0.01 * k * gy / g
            length = math.hypot(*disp[i])
            if length > t:
                disp[i] = [disp[i][0] * t / length, disp[i][1] * t / length]
            pts[i][0] += disp[i][0]
            pts[i][1] += disp[i][1]
    return np.array(pts)


def svg_intra_colors(svg_bytes):
    import xml.etree.ElementTree as ET

    root = ET.fromstring(svg_bytes)
    ns = "{http://www.w3.org/2000/svg}"
    return {el.get("stroke") for el in root.iter(f"{ns}line")
            if "intra" in el.get("class", "").split()}
