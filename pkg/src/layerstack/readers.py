"""Readers for multiplex edge lists, layer tables and node CSV files.

Multiplex edge lists hold one edge per line::

    # layerId source target [weight]
    1 a b 1.0
    2 a c

Fields are separated by runs of spaces or tabs. Blank lines and lines whose
first visible character is ``#`` are skipped; every other line yields a
record or raises :class:`ParseError` carrying its 1-based line number.
"""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass, replace

from .errors import ParseError
from .graph import (GLYPH_WIDTH, Edge, EdgeLayerLabel, MultilayerGraph, assign_layers,
                    make_node)

_FIELD = re.compile(r"[^ \t]+")
_INT = re.compile(r"[0-9]+")
_REAL = re.compile(r"[+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?")


@dataclass(frozen=True)
class MpxEdgeRecord:
    layer_id: int
    source: str
    target: str
    weight: float = 1.0


def iter_lines(data):
    """Yield ``(lineno, text)`` for bytes or str input, decoding UTF-8 per
    line so a bad byte is reported against its own line."""
    if isinstance(data, str):
        chunks = data.split("\n")
        decode = None
    else:
        chunks = bytes(data).split(b"\n")
        decode = True
    for lineno, chunk in enumerate(chunks, start=1):
        if decode:
            try:
                text = chunk.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise ParseError(lineno, exc.start + 1, "invalid UTF-8") from None
        else:
            text = chunk
        if lineno == 1 and text.startswith("\ufeff"):
            text = text[1:]
        if text.endswith("\r"):
            text = text[:-1]
        yield lineno, text


def _is_skipped(text):
    body = text.strip(" \t")
    return not body or body.startswith("#")


def _parse_record(lineno, text):
    fields = list(_FIELD.finditer(text))
    if len(fields) not in (3, 4):
        col = fields[4].start() + 1 if len(fields) > 4 else len(text) + 1
        raise ParseError(lineno, col, f"expected 3 or 4 fields, got {len(fields)}")
    layer, src, dst = (m.group() for m in fields[:3])
    if not _INT.fullmatch(layer) or int(layer) == 0:
        raise ParseError(lineno, fields[0].start() + 1,
                         f"layer id must be a positive integer, got {layer!r}")
    weight = 1.0
    if len(fields) == 4:
        raw = fields[3].group()
        weight = float(raw) if _REAL.fullmatch(raw) else math.nan
        if not (math.isfinite(weight) and weight > 0):
            raise ParseError(lineno, fields[3].start() + 1,
                             f"weight must be a positive number, got {raw!r}")
    return MpxEdgeRecord(int(layer), src, dst, weight)


def read_multiplex_edges(data) -> list:
    """Parse a multiplex edge list into :class:`MpxEdgeRecord` objects."""
    return [_parse_record(lineno, text)
            for lineno, text in iter_lines(data) if not _is_skipped(text)]


def graph_from_records(records, layer_table=None, glyph_width=GLYPH_WIDTH) -> MultilayerGraph:
    """Unlayered graph of the original nodes; edge labels are the layer-table
    names where given, else the decimal layer ids."""
    layer_table = layer_table or {}

    def label(layer_id):
        return layer_table.get(layer_id, str(layer_id))

    nodes = {}
    edges = []
    for r in records:
        for end in (r.source, r.target):
            if end not in nodes:
                nodes[end] = make_node(end, glyph_width=glyph_width)
        edges.append(Edge(r.source, r.target, r.weight, label(r.layer_id)))
    order = []
    for layer_id in sorted({r.layer_id for r in records}):
        if label(layer_id) not in order:
            order.append(label(layer_id))
    return MultilayerGraph.build(nodes.values(), edges, layer_order=tuple(order))


def parse_multiplex_edge_list(data, layer_table=None, glyph_width=GLYPH_WIDTH) -> MultilayerGraph:
    """Parse an edge list and layer it by edge label (node-aligned replicas)."""
    graph = graph_from_records(read_multiplex_edges(data), layer_table, glyph_width)
    return assign_layers(graph, EdgeLayerLabel())


def parse_layer_table(data) -> dict:
    """Parse ``layerId layerLabel`` lines into ``{int: str}``.

    A leading ``layerID layerLabel`` header is skipped. Labels may contain
    spaces.
    """
    table = {}
    first = True
    for lineno, text in iter_lines(data):
        if _is_skipped(text):
            continue
        m = _FIELD.search(text)
        head, rest = m.group(), text[m.end():]
        if first and head.lower() == "layerid":
            first = False
            continue
        first = False
        col = m.start() + 1
        if not _INT.fullmatch(head) or int(head) == 0:
            raise ParseError(lineno, col, f"layer id must be a positive integer, got {head!r}")
        label = rest.strip(" \t")
        if not label:
            raise ParseError(lineno, len(text) + 1, "missing layer label")
        layer_id = int(head)
        if layer_id in table:
            raise ParseError(lineno, col, f"duplicate layer id {layer_id}")
        table[layer_id] = label
    return table


def parse_node_csv(data) -> dict:
    """Parse a node table keyed by the mandatory ``id`` column.

    Returns ``{id: {column: value}}`` preserving row and column order. The
    ``size`` column, when present and non-empty, must be a positive number.
    """
    if not isinstance(data, str):
        raw = bytes(data)
        try:
            data = raw.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            lineno = raw[: exc.start].count(b"\n") + 1
            raise ParseError(lineno, 1, "invalid UTF-8") from None
    elif data.startswith("\ufeff"):
        data = data[1:]
    reader = csv.reader(io.StringIO(data, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError(1, 1, "missing header") from None
    except csv.Error as exc:
        raise ParseError(reader.line_num, 1, str(exc)) from None
    header = [h.strip() for h in header]
    if not header or header[0] != "id":
        raise ParseError(1, 1, "missing id column")
    if len(set(header)) != len(header):
        raise ParseError(1, 1, "duplicate column name")

    table = {}
    try:
        for row in reader:
            lineno = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise ParseError(lineno, 1, f"expected {len(header)} columns, got {len(row)}")
            rec = dict(zip(header, (cell.strip() for cell in row)))
            node_id = rec["id"]
            if not node_id:
                raise ParseError(lineno, 1, "empty id")
            if node_id in table:
                raise ParseError(lineno, 1, f"duplicate id {node_id!r}")
            if rec.get("size"):
                try:
                    size = float(rec["size"])
                except ValueError:
                    size = math.nan
                if not (math.isfinite(size) and size > 0):
                    raise ParseError(lineno, header.index("size") + 1,
                                     f"size must be a positive number, got {rec['size']!r}")
            table[node_id] = rec
    except csv.Error as exc:
        raise ParseError(reader.line_num, 1, str(exc)) from None
    return table


def merge_node_table(graph: MultilayerGraph, table, glyph_width=GLYPH_WIDTH) -> MultilayerGraph:
    """Overlay a node table on an unlayered graph.

    ``label`` and ``size`` columns replace the defaults; the remaining
    columns become string attributes. Ids not yet in the graph are added as
    isolated nodes.
    """
    nodes = dict(graph.nodes)
    for node_id, rec in table.items():
        old = nodes.get(node_id)
        attrs = dict(old.attributes) if old else {}
        attrs.update({k: v for k, v in rec.items() if k not in ("id", "label", "size")})
        label = rec["label"] if "label" in rec else (old.label if old else node_id)
        size = float(rec["size"]) if rec.get("size") else (old.size if old else None)
        fresh = make_node(node_id, label=label, attributes=attrs, glyph_width=glyph_width,
                          **({"size": size} if size else {}))
        nodes[node_id] = replace(fresh, pos=old.pos) if old else fresh
    return replace(graph, nodes=nodes)
