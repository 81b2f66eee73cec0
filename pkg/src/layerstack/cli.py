"""Command-line front end: parse, layer, lay out, stack and write outputs.

Exit codes: 0 success, 1 unreadable or malformed input, 2 missing layer
attribute (argparse also uses 2 for usage errors), 3 failure writing an
output.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .errors import LayerStackError, MissingLayerAttribute, ParseError
from .graph import GLYPH_WIDTH, EdgeLayerLabel, MultilayerGraph, NodeAttribute, assign_layers
from .layouts import ALGORITHMS, LayoutConfig
from .metrics import format_report, report
from .readers import (graph_from_records, merge_node_table, parse_layer_table, parse_node_csv,
                      read_multiplex_edges)
from .stacking import StackConfig, stack
from .svg import StyleConfig, render_svg
from .writers import dumps_fixed, write_gexf, write_positioned_json

FORMATS = ("json", "gexf", "svg", "report")


@dataclass
class RunSpec:
    input: Path | None
    layers: Path | None = None
    nodes: Path | None = None
    layer_attr: str | None = None
    layout: LayoutConfig = field(default_factory=LayoutConfig)
    stacking: StackConfig = field(default_factory=StackConfig)
    outputs: list = field(default_factory=list)  # (format, path)
    glyph_width: float = GLYPH_WIDTH
    labels: bool = False
    report_format: str = "text"
    manifest: Path | None = None

    def echo(self) -> dict:
        return {
            "input": str(self.input) if self.input else None,
            "layers": str(self.layers) if self.layers else None,
            "nodes": str(self.nodes) if self.nodes else None,
            "layer_source": (f"attribute:{self.layer_attr}" if self.layer_attr
                             else "edge-label"),
            "layout": asdict(self.layout),
            "stack": asdict(self.stacking),
            "glyph_width": float(self.glyph_width),
        }


def load_graph(spec: RunSpec) -> MultilayerGraph:
    records = read_multiplex_edges(spec.input.read_bytes()) if spec.input else []
    table = parse_layer_table(spec.layers.read_bytes()) if spec.layers else None
    graph = graph_from_records(records, table, spec.glyph_width)
    if spec.nodes:
        graph = merge_node_table(graph, parse_node_csv(spec.nodes.read_bytes()),
                                 spec.glyph_width)
    source = NodeAttribute(spec.layer_attr) if spec.layer_attr else EdgeLayerLabel()
    return assign_layers(graph, source)


def render(graph, spec: RunSpec, fmt: str) -> bytes:
    meta = {"layout": spec.layout.algorithm, "seed": spec.layout.seed, "config": spec.echo()}
    if fmt == "json":
        return write_positioned_json(graph, meta)
    if fmt == "gexf":
        return write_gexf(graph)
    if fmt == "svg":
        return render_svg(graph, StyleConfig(show_labels=spec.labels))
    reports = report(graph)
    if spec.report_format == "json":
        return dumps_fixed([r.to_dict() for r in reports])
    return format_report(reports).encode("utf-8")


def produce(spec: RunSpec, graph: MultilayerGraph) -> list:
    """Stack ``graph`` and render every requested output plus the manifest;
    returns ``[(path, bytes)]`` without touching the filesystem."""
    graph = stack(graph, spec.layout, spec.stacking)
    blobs = [(Path(path), render(graph, spec, fmt)) for fmt, path in spec.outputs]
    manifest = {
        "config": spec.echo(),
        "seed": spec.layout.seed,
        "layer_count": len(graph.layers),
        "layers": [layer.key for layer in sorted(graph.layers, key=lambda l: l.ordinal)],
        "node_count": len(graph.nodes),
        "edge_count": len(graph.edges),
        "outputs": [{"format": fmt, "path": str(path)} for fmt, path in spec.outputs],
    }
    blobs.append((manifest_path(spec), dumps_fixed(manifest)))
    return blobs


def run(spec: RunSpec) -> list:
    """Execute the whole pipeline and write the outputs; returns the paths."""
    blobs = produce(spec, load_graph(spec))
    for path, blob in blobs:
        path.write_bytes(blob)
    return [path for path, _ in blobs]


def manifest_path(spec: RunSpec) -> Path:
    if spec.manifest:
        return spec.manifest
    first = Path(spec.outputs[0][1])
    return first.with_name(first.name + ".manifest.json")


def build_parser() -> argparse.ArgumentParser:
    d_layout, d_stack = LayoutConfig(), StackConfig()
    p = argparse.ArgumentParser(
        prog="layerstack",
        description="Lay out a multilayer network layer by layer and stack the layers.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    g = p.add_argument_group("input")
    g.add_argument("--input", type=Path, default=None,
                   help="multiplex edge list: 'layerId src dst [weight]' per line")
    g.add_argument("--layers", type=Path, default=None,
                   help="layer table: 'layerId layerLabel' per line")
    g.add_argument("--nodes", type=Path, default=None,
                   help="node CSV with an 'id' column and optional label,size")
    g.add_argument("--layer-attr", metavar="NAME", default=None,
                   help="layer nodes by this node attribute instead of by edge layer")
    g.add_argument("--glyph-width", type=float, default=GLYPH_WIDTH,
                   help="label width per character, px")

    g = p.add_argument_group("layout")
    g.add_argument("--layout", choices=ALGORITHMS, default=d_layout.algorithm,
                   help="algorithm applied to each layer (or the whole network)")
    g.add_argument("--iterations", type=int, default=d_layout.iterations,
                   help="force-directed iterations")
    g.add_argument("--speed", type=float, default=d_layout.speed,
                   help="scale of per-iteration displacement")
    g.add_argument("--gravity", type=float, default=d_layout.gravity,
                   help="pull towards the layer origin")
    g.add_argument("--area", type=float, default=d_layout.area,
                   help="force layout area, px^2")
    g.add_argument("--seed", type=int, default=d_layout.seed,
                   help="random seed for placement and 3D jitter")

    g = p.add_argument_group("stacking")
    g.add_argument("--layer-distance", type=float, default=d_stack.layer_distance,
                   help="gap after the farthest node of the previous layer, px")
    g.add_argument("--horizontal", action="store_true", default=d_stack.horizontal,
                   help="lay the stack on its side (270 degree turn)")
    g.add_argument("--3d", dest="three_d", action="store_true", default=d_stack.three_d,
                   help="tilt layers 65 degrees for a pseudo-3D view")
    g.add_argument("--split-by-level", action="store_true", default=d_stack.split_by_level,
                   help="lay out the whole network once, then pull the layers apart")
    g.add_argument("--sort-layers", action="store_true", default=d_stack.sort_layers,
                   help="stack smaller layers first")
    g.add_argument("--anchor-layers", action="store_true", default=d_stack.anchor_layers,
                   help="lift each layer so its lowest node sits at its offset")

    g = p.add_argument_group("output")
    for fmt in FORMATS:
        g.add_argument(f"--{fmt}", type=Path, default=None, metavar="PATH",
                       help=f"write {fmt} output here")
    g.add_argument("--report-format", choices=("text", "json"), default="text",
                   help="layer report as a text table or JSON")
    g.add_argument("--labels", action="store_true", help="draw node labels in the SVG")
    g.add_argument("--manifest", type=Path, default=None,
                   help="run manifest path (default: <first output>.manifest.json)")
    return p


def spec_from_args(args, parser) -> RunSpec:
    outputs = [(fmt, getattr(args, fmt)) for fmt in FORMATS if getattr(args, fmt)]
    if not outputs:
        parser.error("at least one of --json/--gexf/--svg/--report is required")
    if args.input is None and args.nodes is None:
        parser.error("--input or --nodes is required")
    try:
        layout = LayoutConfig(algorithm=args.layout, iterations=args.iterations,
                              speed=args.speed, gravity=args.gravity, area=args.area,
                              seed=args.seed)
        stacking = StackConfig(layer_distance=args.layer_distance, horizontal=args.horizontal,
                               three_d=args.three_d, split_by_level=args.split_by_level,
                               sort_layers=args.sort_layers,
                               anchor_layers=args.anchor_layers)
    except ValueError as exc:
        parser.error(str(exc))
    return RunSpec(input=args.input, layers=args.layers, nodes=args.nodes,
                   layer_attr=args.layer_attr, layout=layout, stacking=stacking,
                   outputs=outputs, glyph_width=args.glyph_width, labels=args.labels,
                   report_format=args.report_format, manifest=args.manifest)


def _fail(code, msg):
    print(f"error: {msg}", file=sys.stderr)
    return code


def main(argv=None) -> int:
    parser = build_parser()
    spec = spec_from_args(parser.parse_args(argv), parser)
    try:
        graph = load_graph(spec)
    except ParseError as exc:
        return _fail(1, f"parse error: {exc}")
    except MissingLayerAttribute as exc:
        return _fail(2, str(exc))
    except (LayerStackError, ValueError) as exc:
        return _fail(1, str(exc))
    except OSError as exc:
        return _fail(1, f"cannot read input: {exc}")

    try:
        blobs = produce(spec, graph)
    except LayerStackError as exc:
        return _fail(1, str(exc))
    try:
        for path, blob in blobs:
            Path(path).write_bytes(blob)
    except OSError as exc:
        return _fail(3, f"cannot write output: {exc}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
