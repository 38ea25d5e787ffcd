"""Seeded random instances for the verification suites."""

from __future__ import annotations

import random

from .graphs import Color, ColoredGraph, W_COLOR, Z_COLOR


def random_permutation(rng: random.Random, n: int) -> tuple[int, ...]:
    values = list(range(1, n + 1))
    rng.shuffle(values)
    return tuple(values)


def random_colored_graph(
    rng: random.Random,
    max_vertices: int,
    *,
    min_vertices: int = 1,
    colors: tuple[str, ...] = ("z", "w"),
    edge_prob: float = 0.4,
    connected: bool = False,
    root: int | None = None,
) -> ColoredGraph:
    n = rng.randint(min_vertices, max_vertices)
    cs = [Color(rng.choice(colors)) for _ in range(n)]
    edges = set()
    if connected:
        for v in range(2, n + 1):
            u = rng.randint(1, v - 1)
            edges.add((u, v))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in edges and rng.random() < edge_prob:
                edges.add((i, j))
    r = root if root is not None else rng.randint(1, n)
    return ColoredGraph(tuple(cs), frozenset(edges), r)


def random_single_w_graph(rng: random.Random, max_vertices: int) -> ColoredGraph:
    """Connected graph with exactly one w vertex and a random root."""
    n = rng.randint(1, max_vertices)
    wv = rng.randint(1, n)
    cs = [W_COLOR if v == wv else Z_COLOR for v in range(1, n + 1)]
    edges = set()
    for v in range(2, n + 1):
        edges.add((rng.randint(1, v - 1), v))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in edges and rng.random() < 0.3:
                edges.add((i, j))
    return ColoredGraph(tuple(cs), frozenset(edges), rng.randint(1, n))


def random_star_pair(
    rng: random.Random, max_vertices: int
) -> tuple[ColoredGraph, ColoredGraph]:
    """Two graphs whose roots share a color."""
    g = random_colored_graph(rng, max_vertices)
    h = random_colored_graph(rng, max_vertices)
    shared = g.color(g.root)
    colors = list(h.colors)
    colors[h.root - 1] = shared
    return g, ColoredGraph(tuple(colors), h.edges, h.root)


def random_comb_pair(
    rng: random.Random,
    max_g: int = 5,
    max_h: int = 4,
    *,
    all_z: bool = False,
) -> tuple[ColoredGraph, ColoredGraph]:
    """A base graph and a z-rooted attachment."""
    palette = ("z",) if all_z else ("z", "w")
    g = random_colored_graph(rng, max_g, colors=palette)
    h = random_colored_graph(rng, max_h, colors=palette)
    colors = list(h.colors)
    colors[h.root - 1] = Z_COLOR
    return g, ColoredGraph(tuple(colors), h.edges, h.root)


def random_retract_instance(
    rng: random.Random, max_base: int = 5, max_pendant: int = 3
) -> tuple[ColoredGraph, int, frozenset[int]]:
    """A graph with a pendant piece hanging off a single cut vertex."""
    base = random_colored_graph(rng, max_base, min_vertices=1)
    cut = rng.randint(1, base.n)
    k = rng.randint(1, max_pendant)
    colors = list(base.colors) + [
        Color(rng.choice(("z", "w"))) for _ in range(k)
    ]
    pendant = list(range(base.n + 1, base.n + k + 1))
    edges = set(base.edges)
    for v in pendant:
        edges.add((cut, v))
    for a_idx in range(len(pendant)):
        for b_idx in range(a_idx + 1, len(pendant)):
            if rng.random() < 0.5:
                edges.add((pendant[a_idx], pendant[b_idx]))
    graph = ColoredGraph(tuple(colors), frozenset(edges), base.root)
    return graph, cut, frozenset(pendant)


def disjoint_union(g: ColoredGraph, h: ColoredGraph) -> ColoredGraph:
    """g and h side by side, keeping g's root."""
    colors = g.colors + h.colors
    edges = set(g.edges)
    for i, j in h.edges:
        edges.add((i + g.n, j + g.n))
    return ColoredGraph(colors, frozenset(edges), g.root)
