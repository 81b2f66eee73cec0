"""Static SVG rendering of a laid-out multilayer graph.

Intra-layer edges take their layer's palette colour; inter-layer edges are
drawn in translucent gray underneath the nodes. Graph y points up, so the
SVG y axis is flipped and layer 0 ends up at the bottom of the picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

import numpy as np

from .graph import EdgeKind, MultilayerGraph
from .writers import check_finite, ordered_edges, ordered_nodes, xml_text

PALETTE = (
    "crimson", "royalblue", "forestgreen", "darkorange", "darkviolet", "teal",
    "goldenrod", "deeppink", "saddlebrown", "olive", "steelblue", "indigo",
)


@dataclass(frozen=True)
class StyleConfig:
    show_labels: bool = False
    font_size: float = 10.0
    edge_width: float = 1.0
    inter_color: str = "gray"
    inter_opacity: float = 0.4
    palette: tuple = PALETTE


def num(v) -> str:
    s = f"{float(v):.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def layer_color(ordinal, style=StyleConfig()):
    return style.palette[ordinal % len(style.palette)]


def view_box(graph: MultilayerGraph) -> tuple:
    """Bounding box of the (flipped) positions, padded by 5% of its larger
    side; a single point is padded by its node size."""
    if not graph.nodes:
        return (0.0, 0.0, 1.0, 1.0)
    xy = graph.positions()[:, :2] * np.array([1.0, -1.0])
    lo, hi = xy.min(axis=0), xy.max(axis=0)
    span = hi - lo
    pad = 0.05 * float(span.max())
    if pad == 0:
        pad = max(n.size for n in graph.nodes.values())
    return (float(lo[0] - pad), float(lo[1] - pad),
            float(span[0] + 2 * pad), float(span[1] + 2 * pad))


def render_svg(graph: MultilayerGraph, style: StyleConfig = StyleConfig()) -> bytes:
    check_finite(graph)
    layer_of = graph.layer_of

    def ordinal(node_id):
        return layer_of[node_id].ordinal if node_id in layer_of else 0

    def pt(node_id):
        p = graph.nodes[node_id].pos
        return num(p[0]), num(-p[1])

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="%s">'
        % " ".join(num(v) for v in view_box(graph)),
        '<g class="edges">',
    ]
    for e in ordered_edges(graph):
        (x1, y1), (x2, y2) = pt(e.source), pt(e.target)
        if e.kind is EdgeKind.INTRA:
            paint = f'class="edge intra" stroke="{layer_color(ordinal(e.source), style)}"'
        else:
            paint = (f'class="edge inter" stroke="{style.inter_color}" '
                     f'stroke-opacity="{num(style.inter_opacity)}"')
        out.append(f'<line {paint} stroke-width="{num(style.edge_width)}" '
                   f'x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append('</g>')

    out.append('<g class="nodes">')
    nodes = ordered_nodes(graph)
    for n in nodes:
        cx, cy = pt(n.id)
        fill = n.attributes.get("color") or layer_color(ordinal(n.id), style)
        out.append(f'<circle class="node" cx="{cx}" cy="{cy}" r="{num(n.size)}" '
                   f'fill={quoteattr(xml_text(fill))}><title>{escape(xml_text(n.id))}</title>'
                   '</circle>')
    out.append('</g>')

    if style.show_labels:
        out.append(f'<g class="labels" font-size="{num(style.font_size)}" '
                   'font-family="sans-serif">')
        for n in nodes:
            if not n.label:
                continue
            cx, cy = pt(n.id)
            x = num(n.pos[0] + n.size + 2)
            out.append(f'<text x="{x}" y="{cy}" dominant-baseline="middle">'
                       f'{escape(xml_text(n.label))}</text>')
        out.append('</g>')
    out += ['</svg>', '']
    return "\n".join(out).encode("utf-8")
