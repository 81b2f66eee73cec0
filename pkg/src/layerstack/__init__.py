"""Layer-by-layer layout and stacking of multilayer networks."""

__version__ = "0.1.0"

from .errors import (EmptyGraph, EmptyLayer, LayerStackError, MissingLayerAttribute,
                     NonFinitePosition, ParseError, SingleLayer)
from .graph import (Edge, EdgeKind, EdgeLayerLabel, Layer, MultilayerGraph, Node,
                    NodeAttribute, assign_layers, biggest_node, farthest_node, make_node,
                    sort_layers_by_size)
from .layouts import (LayoutConfig, layer_extent, layout_circle, layout_force_atlas,
                      layout_fruchterman_reingold, layout_grid, layout_layer, layout_linear,
                      layout_random)
from .metrics import LayerReport, count_overlaps, layer_separation, report
from .readers import (merge_node_table, parse_layer_table, parse_multiplex_edge_list,
                      parse_node_csv, read_multiplex_edges)
from .stacking import StackConfig, split_by_level, stack
from .svg import StyleConfig, render_svg
from .writers import read_positioned_json, write_gexf, write_positioned_json
