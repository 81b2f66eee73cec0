"""Per-layer node placement.

Every layout takes a layer, the graph it belongs to and a
:class:`LayoutConfig`, and returns an ``(n, 2)`` array of positions aligned
with ``layer.members``. Layouts never read existing node positions and
never touch nodes outside the layer.

Circle, grid and linear are overlap-free: node centres are spaced by at
least the sum of both radii. Random placement ignores node size. The two
force-directed layouts measure distances between node *boundaries* (radius
plus half the label width on each side) so nodes and labels repel as solid
bodies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Layer, MultilayerGraph, biggest_node
from .errors import EmptyLayer

ALGORITHMS = ("circle", "grid", "linear", "random", "fr", "forceatlas")

PADDING = 4.0  # px between neighbouring node footprints
EPS = 0.01  # px, floor for boundary distances
GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))


@dataclass(frozen=True)
class LayoutConfig:
    algorithm: str = "fr"
    iterations: int = 100
    speed: float = 1.0
    gravity: float = 10.0
    area: float = 10000.0
    seed: int = 42

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown layout {self.algorithm!r}; choose from {ALGORITHMS}")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if not self.area > 0:
            raise ValueError("area must be positive")
        if not self.speed > 0:
            raise ValueError("speed must be positive")
        if not self.gravity >= 0:
            raise ValueError("gravity must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


def _footprint(layer, graph):
    if not layer.members:
        raise EmptyLayer(layer.key)
    nodes = [graph.nodes[m] for m in layer.members]
    sizes = np.array([n.size for n in nodes], dtype=float)
    widths = np.array([n.label_width for n in nodes], dtype=float)
    return sizes, widths


def layer_extent(layer: Layer, graph: MultilayerGraph) -> float:
    """Side of the square a layer is placed in:
    ``biggest.size + biggest.label_width * len(members)``."""
    big = biggest_node(layer, graph)
    return big.size + big.label_width * len(layer.members)


def layout_circle(layer, graph, cfg=None, origin=(0.0, 0.0)):
    """Members in id order, counterclockwise from angle 0, equally spaced.

    The radius is the largest of half the layer extent, the circumference
    needed to fit every footprint ``2*size + label_width + PADDING``, and the
    radius at which the chord between neighbours clears the two largest
    nodes.
    """
    sizes, widths = _footprint(layer, graph)
    n = len(sizes)
    r = max(layer_extent(layer, graph) / 2.0,
            float(np.sum(2 * sizes + widths + PADDING)) / (2 * math.pi))
    if n > 1:
        top = np.sort(sizes)[-2:]
        r = max(r, (top.sum() + PADDING) / (2 * math.sin(math.pi / n)))
    angles = 2 * math.pi * np.arange(n) / n
    return np.column_stack([origin[0] + r * np.cos(angles),
                            origin[1] + r * np.sin(angles)])


def layout_grid(layer, graph, cfg=None, origin=(0.0, 0.0)):
    sizes, widths = _footprint(layer, graph)
    n = len(sizes)
    cols = math.isqrt(n - 1) + 1  # ceil(sqrt(n))
    pitch = float(np.max(2 * sizes + widths)) + PADDING
    k = np.arange(n)
    return np.column_stack([origin[0] + (k % cols) * pitch,
                            origin[1] + (k // cols) * pitch])


def layout_linear(layer, graph, cfg=None, origin=(0.0, 0.0)):
    sizes, widths = _footprint(layer, graph)
    gaps = sizes[:-1] + widths[:-1] + sizes[1:] + PADDING
    x = origin[0] + np.concatenate([[0.0], np.cumsum(gaps)])
    return np.column_stack([x, np.full(len(sizes), float(origin[1]))])


def layout_random(layer, graph, cfg, origin=(0.0, 0.0)):
    """Uniform in the layer's extent square, seeded by ``seed ^ ordinal``."""
    sizes, _ = _footprint(layer, graph)
    half = layer_extent(layer, graph) / 2.0
    rng = np.random.default_rng(cfg.seed ^ layer.ordinal)
    return np.asarray(origin, dtype=float) + rng.uniform(-half, half, size=(len(sizes), 2))


def _edge_index(layer, graph):
    index = {m: i for i, m in enumerate(layer.members)}
    pairs = [(index[e.source], index[e.target]) for e in graph.edges_within(layer.members)]
    return np.array(pairs, dtype=int).reshape(-1, 2)


def _pair_geometry(xy, sizes, widths):
    """Unit vectors i->j pushing i away from j, and boundary distances."""
    n = len(xy)
    delta = xy[:, None, :] - xy[None, :, :]
    center = np.hypot(delta[..., 0], delta[..., 1])
    coincident = center < 1e-9
    np.fill_diagonal(coincident, False)
    with np.errstate(invalid="ignore", divide="ignore"):
        unit = delta / center[..., None]
    if coincident.any():
        # deterministic, antisymmetric fallback direction
        i, j = np.nonzero(coincident)
        lo, hi = np.minimum(i, j), np.maximum(i, j)
        theta = GOLDEN_ANGLE * (lo * n + hi)
        sign = np.where(i < j, 1.0, -1.0)
        unit[i, j, 0] = sign * np.cos(theta)
        unit[i, j, 1] = sign * np.sin(theta)
    idx = np.arange(n)
    unit[idx, idx] = 0.0
    boundary = (center - sizes[:, None] - sizes[None, :]
                - (widths[:, None] + widths[None, :]) / 2.0)
    boundary = np.maximum(boundary, EPS)
    return unit, boundary


def _gravity(xy, origin, strength):
    to_origin = np.asarray(origin, dtype=float) - xy
    dist = np.hypot(to_origin[:, 0], to_origin[:, 1])
    out = np.zeros_like(xy)
    moving = dist > 0
    out[moving] = strength * to_origin[moving] / dist[moving, None]
    return out


def _attraction(unit, boundary, edges, magnitude, n):
    force = np.zeros((n, 2))
    if len(edges):
        s, t = edges[:, 0], edges[:, 1]
        pull = unit[s, t] * magnitude(boundary[s, t])[:, None]
        # unit[s, t] points from t to s
        np.add.at(force, s, -pull)
        np.add.at(force, t, pull)
    return force


def _force_area(layer, graph, cfg):
    return max(cfg.area, layer_extent(layer, graph) ** 2)


def fr_temperatures(cfg: LayoutConfig, area: float) -> np.ndarray:
    """Per-iteration displacement cap, cooling linearly towards 0."""
    t0 = 0.1 * math.sqrt(area) * cfg.speed
    return t0 * (1.0 - np.arange(cfg.iterations) / cfg.iterations)


def _clamp(disp, cap):
    length = np.hypot(disp[:, 0], disp[:, 1])
    scale = np.ones_like(length)
    over = length > cap
    scale[over] = cap / length[over]
    return disp * scale[:, None]


def layout_fruchterman_reingold(layer, graph, cfg, origin=(0.0, 0.0)):
    """Spring-electrical layout with attraction d^2/k and repulsion k^2/d.

    ``k = sqrt(A / n)`` with ``A = max(cfg.area, extent**2)``. Starts from
    :func:`layout_random`; each step's displacement is capped by a linearly
    cooling temperature.
    """
    sizes, widths = _footprint(layer, graph)
    n = len(sizes)
    area = _force_area(layer, graph, cfg)
    k = math.sqrt(area / n)
    edges = _edge_index(layer, graph)
    xy = layout_random(layer, graph, cfg, origin)
    pull = cfg.gravity * 0.01 * k

    for t in fr_temperatures(cfg, area):
        unit, d = _pair_geometry(xy, sizes, widths)
        rep = k * k / d
        np.fill_diagonal(rep, 0.0)
        disp = np.einsum("ij,ijc->ic", rep, unit)
        disp += _attraction(unit, d, edges, lambda x: x * x / k, n)
        disp += _gravity(xy, origin, pull)
        xy = xy + _clamp(disp, t)
    return xy


def layout_force_atlas(layer, graph, cfg, origin=(0.0, 0.0)):
    """Degree-weighted repulsion ``k_r (deg_i+1)(deg_j+1) / d`` with linear
    attraction ``d`` along edges and ``k_r = area / 100``."""
    sizes, widths = _footprint(layer, graph)
    n = len(sizes)
    area = _force_area(layer, graph, cfg)
    k = math.sqrt(area / n)
    edges = _edge_index(layer, graph)
    mass = np.ones(n)
    if len(edges):
        np.add.at(mass, edges.ravel(), 1.0)
    kr = cfg.area / 100.0
    xy = layout_random(layer, graph, cfg, origin)
    pull = cfg.gravity * 0.01 * k
    step = cfg.speed * 0.1
    cap = 10.0 * cfg.speed

    for _ in range(cfg.iterations):
        unit, d = _pair_geometry(xy, sizes, widths)
        rep = kr * np.outer(mass, mass) / d
        np.fill_diagonal(rep, 0.0)
        force = np.einsum("ij,ijc->ic", rep, unit)
        force += _attraction(unit, d, edges, lambda x: x, n)
        force += _gravity(xy, origin, pull)
        xy = xy + _clamp(force * step, cap)
    return xy


LAYOUTS = {
    "circle": layout_circle,
    "grid": layout_grid,
    "linear": layout_linear,
    "random": layout_random,
    "fr": layout_fruchterman_reingold,
    "forceatlas": layout_force_atlas,
}


def layout_layer(layer: Layer, graph: MultilayerGraph, cfg: LayoutConfig,
                 origin=(0.0, 0.0)) -> np.ndarray:
    """Run ``cfg.algorithm`` on ``layer``; rows follow ``layer.members``."""
    return LAYOUTS[cfg.algorithm](layer, graph, cfg, origin)
