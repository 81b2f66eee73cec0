"""Run the full pipeline through the command line front end.

The same options are available from a shell as ``layerstack --input ...``.
Every run also writes a manifest recording the configuration and seed,
named after the first output in flag order (json, gexf, svg, report).
"""

import json
from pathlib import Path

from layerstack.cli import main

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
OUT = Path(__file__).resolve().parent / "out"
OUT.mkdir(exist_ok=True)

code = main([
    "--input", str(DATA / "diseasome.edges"),
    "--nodes", str(DATA / "diseasome_nodes.csv"),
    "--layer-attr", "type",
    "--layout", "circle",
    "--layer-distance", "120",
    "--labels",
    "--svg", str(OUT / "diseasome.svg"),
    "--gexf", str(OUT / "diseasome.gexf"),
    "--json", str(OUT / "diseasome.json"),
    "--report", str(OUT / "diseasome.txt"),
])
print("exit status", code)
print((OUT / "diseasome.txt").read_text())
manifest = json.loads((OUT / "diseasome.json.manifest.json").read_text())
print("layers:", manifest["layers"], "seed:", manifest["seed"])
