"""Two ways of splitting a network into layers.

A multiplex edge list says which layer each edge belongs to. Every node
that appears in several layers is copied once per layer, and the copies
are chained together by coupling edges. A node table can instead put each
node in exactly one layer through one of its columns.
"""

from layerstack import (EdgeKind, NodeAttribute, assign_layers, merge_node_table,
                        parse_layer_table, parse_multiplex_edge_list, parse_node_csv)
from layerstack.readers import graph_from_records, read_multiplex_edges

EDGES = """\
# layer source target weight
1 kings_cross euston 1.0
1 euston warren_st
2 euston camden_rd 2.0
3 bank shadwell
2 camden_rd shadwell
"""
LAYERS = "layerID layerLabel\n1 Tube\n2 Overground\n3 DLR\n"

graph = parse_multiplex_edge_list(EDGES, parse_layer_table(LAYERS))
for layer in graph.layers:
    print(f"{layer.ordinal}  {layer.key:<11} {', '.join(layer.members)}")

coupling = [e for e in graph.edges if e.kind is EdgeKind.INTER]
print("\ncoupling edges between replicas:")
for e in coupling:
    print(f"  {e.source} -- {e.target}")

# the same stations, layered by a column of a node table instead
table = parse_node_csv("id,zone\nkings_cross,1\neuston,1\nwarren_st,1\ncamden_rd,2\n"
                       "bank,1\nshadwell,2\n")
plain = merge_node_table(graph_from_records(read_multiplex_edges(EDGES)), table)
by_zone = assign_layers(plain, NodeAttribute("zone"))
print("\nby fare zone:")
for layer in by_zone.layers:
    print(f"  zone {layer.key}: {', '.join(layer.members)}")
