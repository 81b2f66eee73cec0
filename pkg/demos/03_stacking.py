"""Stack the layers of a small transport network and inspect the gaps.

Each layer is placed below the previous one: its offset is the previous
layer's farthest node plus that node's size plus the layer distance. The
horizontal view turns the whole stack on its side and the 3D view squashes
each layer to suggest depth.

Force layouts are centred on their own origin, so a large layer reaches
back past its offset and the centre gaps come out negative. Anchoring each
layer at its lowest node keeps every gap at least the layer distance.
"""

from pathlib import Path

from layerstack import (LayoutConfig, StackConfig, layer_separation, parse_layer_table,
                        parse_multiplex_edge_list, render_svg, stack)

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
OUT = Path(__file__).resolve().parent / "out"
OUT.mkdir(exist_ok=True)

graph = parse_multiplex_edge_list((DATA / "london.edges").read_bytes(),
                                  parse_layer_table((DATA / "london_layers.txt").read_bytes()))
layout = LayoutConfig(algorithm="fr", seed=3)

views = {
    "vertical": StackConfig(layer_distance=150),
    "anchored": StackConfig(layer_distance=150, anchor_layers=True),
    "horizontal": StackConfig(layer_distance=150, horizontal=True, anchor_layers=True),
    "tilted": StackConfig(layer_distance=150, three_d=True, anchor_layers=True),
}
for name, cfg in views.items():
    placed = stack(graph, layout, cfg)
    axis = "x" if cfg.horizontal else "y"
    gaps = ", ".join(f"{g:.1f}" for g in layer_separation(placed, axis=axis))
    path = OUT / f"london_{name}.svg"
    path.write_bytes(render_svg(placed))
    print(f"{name:<10} centre gaps along {axis}: {gaps}  -> {path.name}")
