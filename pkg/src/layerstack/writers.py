"""Serialisers for laid-out graphs: positioned JSON and GEXF 1.2.

Both writers are deterministic: nodes are ordered by layer ordinal then id,
edges by source, target and layer, and numbers are formatted without
exponents, so equal graphs give byte-identical files.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import replace
from xml.sax.saxutils import quoteattr

from .errors import NonFinitePosition
from .graph import (GLYPH_WIDTH, Edge, EdgeKind, Layer, MultilayerGraph, make_node)

GEXF_NS = "http://www.gexf.net/1.2draft"
VIZ_NS = "http://www.gexf.net/1.2draft/viz"

_XML_BAD = re.compile("[^\t\n\r\x20-\ud7ff\ue000-\ufffd\U00010000-\U0010ffff]")


def xml_text(s):
    """Replace characters XML 1.0 cannot carry with U+FFFD."""
    return _XML_BAD.sub("\ufffd", s)


def check_finite(graph: MultilayerGraph):
    for node in graph.nodes.values():
        if not all(math.isfinite(c) for c in node.pos):
            raise NonFinitePosition(node.id)


def ordered_nodes(graph: MultilayerGraph) -> list:
    layer_of = graph.layer_of
    return sorted(graph.nodes.values(),
                  key=lambda n: (layer_of[n.id].ordinal if n.id in layer_of else -1, n.id))


def _edge_layer(graph, edge):
    if edge.kind is EdgeKind.INTRA and edge.source in graph.layer_of:
        return graph.layer_of[edge.source].key
    return None


def ordered_edges(graph: MultilayerGraph) -> list:
    return sorted(graph.edges, key=lambda e: (e.source, e.target, _edge_layer(graph, e) or "",
                                              e.layer_label or "", e.weight))


def fixed(v) -> str:
    s = f"{float(v):.6f}"
    return "0.000000" if s == "-0.000000" else s


def _encode(obj, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fixed(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        # leaf records stay on one line
        if all(not isinstance(v, (dict, list)) for v in obj.values()):
            return "{" + ", ".join(f"{json.dumps(str(k), ensure_ascii=False)}: "
                                   f"{_encode(v, indent, 0)}" for k, v in obj.items()) + "}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_encode(v, indent, level + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps_fixed(obj) -> bytes:
    """JSON with 2-space indent and every float written with 6 decimals."""
    return (_encode(obj, 2, 0) + "\n").encode("utf-8")


def positioned_document(graph: MultilayerGraph, meta=None) -> dict:
    check_finite(graph)
    layer_of = graph.layer_of
    layers = sorted(graph.layers, key=lambda layer: layer.ordinal)
    return {
        "meta": dict(meta or {}),
        "layers": [{"key": l.key, "ordinal": l.ordinal, "count": len(l.members)}
                   for l in layers],
        "nodes": [{
            "id": n.id,
            "layer": layer_of[n.id].key if n.id in layer_of else None,
            "x": float(n.pos[0]), "y": float(n.pos[1]), "z": float(n.pos[2]),
            "size": float(n.size),
            "label": n.label,
            "origin": n.origin,
        } for n in ordered_nodes(graph)],
        "edges": [{
            "source": e.source,
            "target": e.target,
            "layer": _edge_layer(graph, e),
            "label": e.layer_label,
            "weight": float(e.weight),
            "kind": e.kind.value if e.kind else None,
        } for e in ordered_edges(graph)],
    }


def write_positioned_json(graph: MultilayerGraph, meta=None) -> bytes:
    """Serialise positions, layers and edges as JSON (6-decimal numbers).

    Raises :class:`NonFinitePosition` on NaN or infinite coordinates.
    """
    return dumps_fixed(positioned_document(graph, meta))


def read_positioned_json(data, glyph_width=GLYPH_WIDTH) -> tuple:
    """Inverse of :func:`write_positioned_json`; returns ``(graph, meta)``."""
    doc = json.loads(data)
    members = {}
    nodes = []
    for rec in doc["nodes"]:
        node = make_node(rec["id"], label=rec["label"], size=rec["size"],
                         glyph_width=glyph_width, pos=(rec["x"], rec["y"], rec["z"]))
        if rec.get("origin") is not None:
            node = replace(node, origin=rec["origin"])
        nodes.append(node)
        members.setdefault(rec["layer"], []).append(rec["id"])
    layers = tuple(Layer(l["key"], l["ordinal"], tuple(sorted(members.get(l["key"], ()))))
                   for l in doc["layers"])
    edges = [Edge(e["source"], e["target"], e["weight"], e["label"],
                  EdgeKind(e["kind"]) if e["kind"] else None) for e in doc["edges"]]
    graph = MultilayerGraph.build(nodes, edges, layers=layers)
    return graph, doc["meta"]


def edge_list_from_json(data) -> str:
    """Rebuild a multiplex edge list from the intra-layer edges of a
    positioned JSON document whose layer keys are numeric layer ids."""
    doc = json.loads(data)
    origin = {n["id"]: n["origin"] or n["id"] for n in doc["nodes"]}
    lines = [f"{e['layer']} {origin[e['source']]} {origin[e['target']]} {e['weight']!r}"
             for e in doc["edges"] if e["kind"] == EdgeKind.INTRA.value]
    return "\n".join(lines) + ("\n" if lines else "")


def _xml_num(v) -> str:
    v = float(v) + 0.0
    return repr(v)


def write_gexf(graph: MultilayerGraph) -> bytes:
    """GEXF 1.2 document with ``viz:position``/``viz:size`` per node and a
    ``layer`` attribute value; edges carry their weight."""
    check_finite(graph)
    layer_of = graph.layer_of
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<gexf xmlns="{GEXF_NS}" xmlns:viz="{VIZ_NS}" version="1.2">',
        '  <meta>',
        '    <creator>layerstack</creator>',
        '  </meta>',
        '  <graph mode="static" defaultedgetype="undirected">',
        '    <attributes class="node">',
        '      <attribute id="layer" title="layer" type="string"/>',
        '    </attributes>',
        '    <nodes>',
    ]
    for n in ordered_nodes(graph):
        key = layer_of[n.id].key if n.id in layer_of else ""
        x, y, z = (_xml_num(c) for c in n.pos)
        out += [
            f'      <node id={quoteattr(xml_text(n.id))} label={quoteattr(xml_text(n.label))}>',
            '        <attvalues>',
            f'          <attvalue for="layer" value={quoteattr(xml_text(key))}/>',
            '        </attvalues>',
            f'        <viz:size value="{_xml_num(n.size)}"/>',
            f'        <viz:position x="{x}" y="{y}" z="{z}"/>',
            '      </node>',
        ]
    out.append('    </nodes>')
    edges = ordered_edges(graph)
    if edges:
        out.append('    <edges>')
        for i, e in enumerate(edges):
            out.append(f'      <edge id="{i}" source={quoteattr(xml_text(e.source))} '
                       f'target={quoteattr(xml_text(e.target))} weight="{_xml_num(e.weight)}"/>')
        out.append('    </edges>')
    else:
        out.append('    <edges/>')
    out += ['  </graph>', '</gexf>', '']
    return "\n".join(out).encode("utf-8")

