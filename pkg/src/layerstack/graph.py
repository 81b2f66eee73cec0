"""In-memory multilayer graph model and layer partitioning.

A :class:`MultilayerGraph` holds nodes, edges and, once :func:`assign_layers`
has run, an ordered partition of the nodes into :class:`Layer` objects.
Graph values are treated as immutable; every operation returns a new graph
that shares unchanged parts with its input.

Two layering modes are supported:

* ``NodeAttribute(name)`` partitions nodes by the value of an attribute
  (layer-disjoint networks).
* ``EdgeLayerLabel()`` partitions by edge label (multiplex networks). Each
  original node ``v`` is replicated as ``v@key`` in every layer where it has
  an incident edge, and replicas of the same node are chained by coupling
  edges in layer order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Mapping, Union

import numpy as np

from .errors import EmptyGraph, EmptyLayer, LayerStackError, MissingLayerAttribute

GLYPH_WIDTH = 8.0
DEFAULT_SIZE = 10.0
REPLICA_SEP = "@"


class EdgeKind(enum.Enum):
    INTRA = "intra"
    INTER = "inter"


@dataclass(frozen=True)
class NodeAttribute:
    name: str


@dataclass(frozen=True)
class EdgeLayerLabel:
    pass


LayerSource = Union[NodeAttribute, EdgeLayerLabel]


@dataclass(frozen=True)
class Node:
    id: str
    label: str = ""
    size: float = DEFAULT_SIZE
    label_width: float = 0.0
    pos: tuple = (0.0, 0.0, 0.0)
    attributes: Mapping[str, str] = field(default_factory=dict)
    # underlying node id for multiplex replicas
    origin: str | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("node id must be non-empty")
        if not self.size > 0:
            raise ValueError(f"node {self.id!r}: size must be positive, got {self.size}")
        if not self.label_width >= 0:
            raise ValueError(f"node {self.id!r}: label width must be non-negative")

    @property
    def x(self):
        return self.pos[0]

    @property
    def y(self):
        return self.pos[1]

    @property
    def z(self):
        return self.pos[2]


def make_node(node_id, label=None, size=DEFAULT_SIZE, attributes=None,
              glyph_width=GLYPH_WIDTH, pos=(0.0, 0.0, 0.0)) -> Node:
    """Build a node whose label defaults to its id and whose label width is
    ``len(label) * glyph_width``."""
    if label is None:
        label = node_id
    return Node(
        id=node_id,
        label=label,
        size=float(size),
        label_width=len(label) * float(glyph_width),
        pos=tuple(float(c) for c in pos),
        attributes=dict(attributes or {}),
    )


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    weight: float = 1.0
    layer_label: str | None = None
    kind: EdgeKind | None = None

    def __post_init__(self):
        if not self.weight > 0:
            raise ValueError(f"edge {self.source}-{self.target}: weight must be positive")


@dataclass(frozen=True)
class Layer:
    key: str
    ordinal: int
    members: tuple  # node ids, sorted

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class MultilayerGraph:
    nodes: Mapping[str, Node]
    edges: tuple = ()
    layers: tuple = ()
    layer_source: LayerSource | None = None
    # preferred layer ordering for edge labels, e.g. the order of a layer table
    layer_order: tuple = ()

    @classmethod
    def build(cls, nodes: Iterable[Node], edges: Iterable[Edge] = (), **kw) -> "MultilayerGraph":
        table = {}
        for n in nodes:
            if n.id in table:
                raise LayerStackError(f"duplicate node id {n.id!r}")
            table[n.id] = n
        edges = tuple(edges)
        for e in edges:
            for end in (e.source, e.target):
                if end not in table:
                    raise LayerStackError(f"edge endpoint {end!r} is not a node")
        return cls(nodes=table, edges=edges, **kw)

    def __len__(self):
        return len(self.nodes)

    def node(self, node_id) -> Node:
        return self.nodes[node_id]

    @cached_property
    def layer_of(self) -> dict:
        """Map node id -> its Layer."""
        return {m: layer for layer in self.layers for m in layer.members}

    def layer(self, key) -> Layer:
        for layer in self.layers:
            if layer.key == key:
                return layer
        raise KeyError(key)

    def positions(self, ids=None) -> np.ndarray:
        ids = list(self.nodes) if ids is None else ids
        return np.array([self.nodes[i].pos for i in ids], dtype=float).reshape(len(ids), 3)

    def with_positions(self, ids, xyz) -> "MultilayerGraph":
        """Return a copy with the nodes ``ids`` moved to rows of ``xyz``.

        ``xyz`` may have 2 or 3 columns; with 2, z is kept.
        """
        xyz = np.asarray(xyz, dtype=float)
        nodes = dict(self.nodes)
        for i, row in zip(ids, xyz):
            old = nodes[i]
            z = float(row[2]) if len(row) > 2 else old.pos[2]
            nodes[i] = replace(old, pos=(float(row[0]), float(row[1]), z))
        return replace(self, nodes=nodes)

    def edges_within(self, ids) -> list:
        """Edges (self-loops excluded) whose endpoints both lie in ``ids``."""
        ids = set(ids)
        return [e for e in self.edges
                if e.source != e.target and e.source in ids and e.target in ids]

    def intra_edges(self, layer: Layer) -> list:
        members = set(layer.members)
        return [e for e in self.edges
                if e.kind is EdgeKind.INTRA and e.source in members]


def layer_sort_key(key):
    """Numeric keys sort numerically and before non-numeric ones."""
    try:
        return (0, float(key), key)
    except ValueError:
        return (1, 0.0, key)


def _ordered_keys(keys, preferred=()):
    keys = set(keys)
    head = [k for k in preferred if k in keys]
    rest = sorted(keys.difference(head), key=layer_sort_key)
    return head + rest


def _classify(edges, layer_of):
    return tuple(
        replace(e, kind=EdgeKind.INTRA if layer_of[e.source] == layer_of[e.target]
                else EdgeKind.INTER)
        for e in edges
    )


def assign_layers(graph: MultilayerGraph, source: LayerSource) -> MultilayerGraph:
    """Partition ``graph`` into layers and classify its edges.

    ``graph`` must not already be replicated; layers are ordered by natural
    key order (numeric keys numerically) unless ``graph.layer_order`` says
    otherwise.

    Raises
    ------
    EmptyGraph
        The graph has no nodes.
    MissingLayerAttribute
        A node has no value for the attribute, or (edge labels) a node has no
        labelled incident edge.
    """
    if not graph.nodes:
        raise EmptyGraph()
    if isinstance(source, NodeAttribute):
        return _assign_by_attribute(graph, source)
    if isinstance(source, EdgeLayerLabel):
        return _assign_by_edge_label(graph, source)
    raise TypeError(f"unknown layer source {source!r}")


def _assign_by_attribute(graph, source):
    groups = {}
    for node in graph.nodes.values():
        if source.name not in node.attributes:
            raise MissingLayerAttribute(node.id, f"attribute {source.name!r} missing")
        groups.setdefault(node.attributes[source.name], []).append(node.id)
    keys = _ordered_keys(groups, graph.layer_order)
    layers = tuple(Layer(k, i, tuple(sorted(groups[k]))) for i, k in enumerate(keys))
    layer_of = {m: layer.ordinal for layer in layers for m in layer.members}
    return replace(graph, layers=layers, layer_source=source,
                   edges=_classify(graph.edges, layer_of))


def _assign_by_edge_label(graph, source):
    present = {}  # original id -> set of labels
    for e in graph.edges:
        if e.layer_label is None:
            raise MissingLayerAttribute(e.source, "edge has no layer label")
        present.setdefault(e.source, set()).add(e.layer_label)
        present.setdefault(e.target, set()).add(e.layer_label)
    for node_id in graph.nodes:
        if node_id not in present:
            raise MissingLayerAttribute(node_id, "no incident labelled edge")

    keys = _ordered_keys({k for labels in present.values() for k in labels},
                         graph.layer_order)
    ordinal = {k: i for i, k in enumerate(keys)}

    def rid(node_id, key):
        return f"{node_id}{REPLICA_SEP}{key}"

    members = {k: [] for k in keys}
    for node_id, labels in present.items():
        for k in labels:
            members[k].append(rid(node_id, k))
    layers = tuple(Layer(k, ordinal[k], tuple(sorted(members[k]))) for k in keys)

    nodes = {}
    for layer in layers:
        for m in layer.members:
            orig = m[: -(len(layer.key) + len(REPLICA_SEP))]
            nodes[m] = replace(graph.nodes[orig], id=m, origin=orig)

    edges = [
        replace(e, source=rid(e.source, e.layer_label), target=rid(e.target, e.layer_label),
                kind=EdgeKind.INTRA)
        for e in graph.edges
    ]
    for node_id in graph.nodes:
        chain = sorted(present[node_id], key=ordinal.__getitem__)
        for a, b in zip(chain, chain[1:]):
            edges.append(Edge(rid(node_id, a), rid(node_id, b), 1.0, None, EdgeKind.INTER))

    return replace(graph, nodes=nodes, edges=tuple(edges), layers=layers,
                   layer_source=source)


def sort_layers_by_size(graph: MultilayerGraph) -> MultilayerGraph:
    """Reassign ordinals so smaller layers come first; ties by key."""
    order = sorted(graph.layers, key=lambda layer: (len(layer.members), layer.key))
    layers = tuple(replace(layer, ordinal=i) for i, layer in enumerate(order))
    return replace(graph, layers=layers)


def _require_members(layer):
    if not layer.members:
        raise EmptyLayer(layer.key)


def farthest_node(layer: Layer, graph: MultilayerGraph) -> Node:
    """Member with the largest y; ties go to the smallest id."""
    _require_members(layer)
    best = min(layer.members, key=lambda m: (-graph.nodes[m].pos[1], m))
    return graph.nodes[best]


def biggest_node(layer: Layer, graph: MultilayerGraph) -> Node:
    """Member with the largest size; ties go to the smallest id."""
    _require_members(layer)
    best = min(layer.members, key=lambda m: (-graph.nodes[m].size, m))
    return graph.nodes[best]
