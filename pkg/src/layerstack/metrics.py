"""Layout quality measures: overlaps, layer gaps and per-layer summaries."""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import SingleLayer
from .graph import Layer, MultilayerGraph


@dataclass(frozen=True)
class LayerReport:
    layer_key: str
    node_count: int
    bbox: tuple  # (min_x, min_y, max_x, max_y)
    overlap_pairs: int
    mean_intra_edge_length: float

    def to_dict(self):
        d = asdict(self)
        d["bbox"] = list(self.bbox)
        return d


def count_overlaps(layer: Layer, graph: MultilayerGraph, include_labels=False) -> int:
    """Unordered member pairs whose circles intersect.

    With ``include_labels`` each node also claims half its label width.
    """
    nodes = [graph.nodes[m] for m in layer.members]
    if len(nodes) < 2:
        return 0
    xy = np.array([n.pos[:2] for n in nodes], dtype=float)
    reach = np.array([n.size for n in nodes], dtype=float)
    if include_labels:
        reach = reach + np.array([n.label_width for n in nodes]) / 2.0
    dist = np.hypot(*(xy[:, None, :] - xy[None, :, :]).transpose(2, 0, 1))
    clash = dist < reach[:, None] + reach[None, :]
    return int(np.count_nonzero(np.triu(clash, k=1)))


def layer_separation(graph: MultilayerGraph, axis="y") -> list:
    """Gap between consecutive layers along ``axis``, measured between node
    centres. Negative values mean the layers interleave."""
    if len(graph.layers) < 2:
        raise SingleLayer(len(graph.layers))
    col = {"x": 0, "y": 1}[axis.lower()]
    layers = sorted(graph.layers, key=lambda layer: layer.ordinal)
    coords = [graph.positions(layer.members)[:, col] for layer in layers]
    return [float(nxt.min() - cur.max()) for cur, nxt in zip(coords, coords[1:])]


def _bbox(xy):
    lo, hi = xy.min(axis=0), xy.max(axis=0)
    return (float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1]))


def report(graph: MultilayerGraph) -> list:
    """One :class:`LayerReport` per layer, in ordinal order."""
    out = []
    for layer in sorted(graph.layers, key=lambda layer: layer.ordinal):
        xy = graph.positions(layer.members)[:, :2]
        edges = graph.intra_edges(layer)
        if edges:
            a = graph.positions([e.source for e in edges])[:, :2]
            b = graph.positions([e.target for e in edges])[:, :2]
            mean_len = float(np.mean(np.hypot(*(a - b).T)))
        else:
            mean_len = 0.0
        out.append(LayerReport(
            layer_key=layer.key,
            node_count=len(layer.members),
            bbox=_bbox(xy),
            overlap_pairs=count_overlaps(layer, graph),
            mean_intra_edge_length=mean_len,
        ))
    return out


def format_report(reports) -> str:
    """Plain-text table of layer reports."""
    w = max([5] + [len(r.layer_key) for r in reports])
    head = f"{'layer':<{w}} {'nodes':>6} {'overlaps':>8} {'mean_edge':>10}  bbox"
    lines = [head]
    for r in reports:
        box = ", ".join(f"{v:.2f}" for v in r.bbox)
        lines.append(f"{r.layer_key:<{w}} {r.node_count:>6} {r.overlap_pairs:>8} "
                     f"{r.mean_intra_edge_length:>10.2f}  ({box})")
    return "\n".join(lines) + "\n"
