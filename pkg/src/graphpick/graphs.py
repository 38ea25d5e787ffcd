"""Vertex-colored rooted simple graphs and the star/comb/retract constructions.

Vertices are numbered 1..n.  A color is ``z``, ``w`` or a general rational
loop label r; the colored adjacency matrix carries the usual 0/1 entries
off the diagonal and minus the label on the diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .linalg import SymMatrix, inverse_entry
from .ratfun import Polynomial, RatFun, ratfun_from_json

_RF_Z = RatFun(Polynomial.variable("z"))
_RF_W = RatFun(Polynomial.variable("w"))
_RF_ONE = RatFun(1)
_RF_ZERO = RatFun(0)


class GraphFormatError(ValueError):
    """Malformed graph input (JSON shape, ids, colors, edges)."""


@dataclass(frozen=True)
class Color:
    """Vertex color: the diagonal of the adjacency matrix is minus the label."""

    kind: str
    weight: RatFun | None = None

    def __post_init__(self):
        if self.kind not in ("z", "w", "general"):
            raise ValueError(f"unknown color kind {self.kind!r}")
        if (self.kind == "general") != (self.weight is not None):
            raise ValueError("general colors carry a weight; z/w colors do not")

    def label(self) -> RatFun:
        if self.kind == "z":
            return _RF_Z
        if self.kind == "w":
            return _RF_W
        return self.weight

    def diagonal(self) -> RatFun:
        return -self.label()

    def __str__(self):
        if self.kind == "general":
            return f"general({self.weight})"
        return self.kind


Z_COLOR = Color("z")
W_COLOR = Color("w")


def general_color(weight: RatFun) -> Color:
    return Color("general", weight)


@dataclass(frozen=True)
class ColoredGraph:
    """Rooted simple undirected graph with per-vertex colors.

    ``edges`` holds pairs (i, j) with i < j; vertices are 1..len(colors).
    """

    colors: tuple[Color, ...]
    edges: frozenset[tuple[int, int]]
    root: int = 1

    def __post_init__(self):
        n = len(self.colors)
        if n == 0:
            raise ValueError("graph needs at least one vertex")
        if not (1 <= self.root <= n):
            raise ValueError(f"root {self.root} out of range 1..{n}")
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (1 <= i < j <= n):
                raise ValueError(f"edge ({i}, {j}) out of range or unordered")

    @classmethod
    def build(
        cls,
        colors: Sequence[Color | str],
        edges: Iterable[tuple[int, int]] = (),
        root: int = 1,
    ) -> ColoredGraph:
        cs = tuple(Color(c) if isinstance(c, str) else c for c in colors)
        es = frozenset(
            (min(i, j), max(i, j)) for i, j in edges
        )
        return cls(cs, es, root)

    @property
    def n(self) -> int:
        return len(self.colors)

    def color(self, v: int) -> Color:
        return self.colors[v - 1]

    def neighbors(self, v: int) -> list[int]:
        out = []
        for i, j in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return sorted(out)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_zw_colored(self) -> bool:
        return all(c.kind in ("z", "w") for c in self.colors)


def colored_adjacency(g: ColoredGraph) -> SymMatrix:
    """Adjacency matrix with the color diagonal (-z, -w or -label)."""
    n = g.n
    rows = [[_RF_ZERO] * n for _ in range(n)]
    for v in range(1, n + 1):
        rows[v - 1][v - 1] = g.color(v).diagonal()
    for i, j in g.edges:
        rows[i - 1][j - 1] = _RF_ONE
        rows[j - 1][i - 1] = _RF_ONE
    return SymMatrix(tuple(tuple(r) for r in rows))


def relabel(g: ColoredGraph, perm: Sequence[int]) -> ColoredGraph:
    """Transport colors, edges and root along a permutation.

    ``perm[i-1]`` is the new index of vertex i; must be a bijection of 1..n.
    """
    n = g.n
    if len(perm) != n or sorted(perm) != list(range(1, n + 1)):
        raise ValueError("relabeling map is not a bijection of 1..n")
    colors = [None] * n
    for v in range(1, n + 1):
        colors[perm[v - 1] - 1] = g.color(v)
    edges = {(min(perm[i - 1], perm[j - 1]), max(perm[i - 1], perm[j - 1])) for i, j in g.edges}
    return ColoredGraph(tuple(colors), frozenset(edges), perm[g.root - 1])


def star_product(g: ColoredGraph, h: ColoredGraph) -> ColoredGraph:
    """Glue h onto g at their roots.

    g keeps its numbering; h's non-root vertices follow in ascending order.
    The shared root keeps g's numbering and color (the root colors must
    agree, otherwise the gluing is meaningless).
    """
    if g.color(g.root) != h.color(h.root):
        raise ValueError("incompatible roots")
    mapping = {h.root: g.root}
    nxt = g.n + 1
    for v in range(1, h.n + 1):
        if v == h.root:
            continue
        mapping[v] = nxt
        nxt += 1
    colors = list(g.colors) + [
        h.color(v) for v in range(1, h.n + 1) if v != h.root
    ]
    edges = set(g.edges)
    for i, j in h.edges:
        a, b = mapping[i], mapping[j]
        edges.add((min(a, b), max(a, b)))
    return ColoredGraph(tuple(colors), frozenset(edges), g.root)


def comb_product_z(g: ColoredGraph, h: ColoredGraph) -> ColoredGraph:
    """Attach a fresh copy of h at every z-colored vertex of g.

    h must be rooted at a z-colored vertex; each copy is glued by
    identifying its root with the attachment vertex.  Copies are numbered
    after g's vertices, in ascending order of their attachment vertex.
    """
    if h.color(h.root).kind != "z":
        raise ValueError("incompatible comb root")
    colors = list(g.colors)
    edges = set(g.edges)
    nxt = g.n + 1
    h_rest = [v for v in range(1, h.n + 1) if v != h.root]
    for attach in range(1, g.n + 1):
        if g.color(attach).kind != "z":
            continue
        mapping = {h.root: attach}
        for v in h_rest:
            mapping[v] = nxt
            colors.append(h.color(v))
            nxt += 1
        for i, j in h.edges:
            a, b = mapping[i], mapping[j]
            edges.add((min(a, b), max(a, b)))
    return ColoredGraph(tuple(colors), frozenset(edges), g.root)


def retract(
    g: ColoredGraph, cut: int, k_subgraph: Iterable[int]
) -> ColoredGraph:
    """Collapse a pendant subgraph hanging off ``cut`` into a general color.

    ``k_subgraph`` lists the vertices to delete; together with ``cut``
    they induce a piece attached to the rest of the graph only at ``cut``.
    The cut vertex is recolored with minus the reciprocal of the pendant
    piece's representing function at the cut, which leaves the root
    representing function unchanged.
    """
    n = g.n
    ks = set(k_subgraph)
    if not (1 <= cut <= n):
        raise ValueError(f"cut vertex {cut} out of range")
    if cut in ks:
        raise ValueError("cut vertex must not be part of the deleted subgraph")
    if g.root in ks:
        raise ValueError("root must not be part of the deleted subgraph")
    for v in ks:
        if not (1 <= v <= n):
            raise ValueError(f"subgraph vertex {v} out of range")
    for i, j in g.edges:
        if (i in ks) != (j in ks):
            outside = j if i in ks else i
            if outside != cut:
                raise ValueError(
                    f"edge ({i}, {j}) crosses the retraction cut away from vertex {cut}"
                )

    # pendant piece rooted at the cut, with the cut's original color
    k_order = [cut] + sorted(ks)
    k_index = {v: idx + 1 for idx, v in enumerate(k_order)}
    k_colors = tuple(g.color(v) for v in k_order)
    k_edges = frozenset(
        (min(k_index[i], k_index[j]), max(k_index[i], k_index[j]))
        for i, j in g.edges
        if i in k_index and j in k_index
    )
    piece = ColoredGraph(k_colors, k_edges, 1)
    f_piece = inverse_entry(colored_adjacency(piece), 1)
    g_piece = f_piece.reciprocal()

    keep = [v for v in range(1, n + 1) if v not in ks]
    new_index = {v: idx + 1 for idx, v in enumerate(keep)}
    colors = []
    for v in keep:
        if v == cut:
            colors.append(general_color(-g_piece))
        else:
            colors.append(g.color(v))
    edges = frozenset(
        (min(new_index[i], new_index[j]), max(new_index[i], new_index[j]))
        for i, j in g.edges
        if i in new_index and j in new_index
    )
    return ColoredGraph(tuple(colors), edges, new_index[g.root])


def distance(g: ColoredGraph, i: int, j: int) -> int | float:
    """Shortest-path edge count between vertices; inf when disconnected."""
    n = g.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("vertex out of range")
    if i == j:
        return 0
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {i}
    frontier = [i]
    steps = 0
    while frontier:
        steps += 1
        nxt = []
        for v in frontier:
            for u in adj[v]:
                if u in seen:
                    continue
                if u == j:
                    return steps
                seen.add(u)
                nxt.append(u)
        frontier = nxt
    return float("inf")


def components(g: ColoredGraph) -> tuple[frozenset[int], ...]:
    """Connected components, ordered by their smallest vertex."""
    n = g.n
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in g.edges:
        adj[a].append(b)
        adj[b].append(a)
    unseen = set(range(1, n + 1))
    blocks = []
    while unseen:
        start = min(unseen)
        block = {start}
        stack = [start]
        unseen.discard(start)
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u in unseen:
                    unseen.discard(u)
                    block.add(u)
                    stack.append(u)
        blocks.append(frozenset(block))
    return tuple(blocks)


# ----------------------------------------------------------------------
# JSON interface


def _color_from_json(value, where: str) -> Color:
    if value == "z":
        return Z_COLOR
    if value == "w":
        return W_COLOR
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        raise GraphFormatError(f"{where}: unsupported: fractional coloring")
    if isinstance(value, dict):
        try:
            return general_color(ratfun_from_json(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphFormatError(f"{where}: {exc}") from exc
    raise GraphFormatError(
        f"{where}: expected \"z\", \"w\" or a num/den object, got {value!r}"
    )


def graph_from_json(obj: dict) -> ColoredGraph:
    """Parse the graph interchange object; errors name the offending field."""
    if not isinstance(obj, dict):
        raise GraphFormatError("graph: expected a JSON object")
    verts = obj.get("vertices")
    if not isinstance(verts, list) or not verts:
        raise GraphFormatError("vertices: expected a non-empty list")
    n = len(verts)
    colors: list[Color | None] = [None] * n
    for idx, entry in enumerate(verts):
        where = f"vertices[{idx}]"
        if not isinstance(entry, dict):
            raise GraphFormatError(f"{where}: expected an object")
        vid = entry.get("id")
        if not isinstance(vid, int) or isinstance(vid, bool) or not (1 <= vid <= n):
            raise GraphFormatError(f"{where}.id: expected an integer in 1..{n}")
        if colors[vid - 1] is not None:
            raise GraphFormatError(f"{where}.id: duplicate id {vid}")
        if "color" not in entry:
            raise GraphFormatError(f"{where}.color: missing")
        colors[vid - 1] = _color_from_json(entry["color"], f"{where}.color")
    edges = obj.get("edges", [])
    if not isinstance(edges, list):
        raise GraphFormatError("edges: expected a list of pairs")
    seen = set()
    pairs = []
    for idx, e in enumerate(edges):
        where = f"edges[{idx}]"
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in e)
        ):
            raise GraphFormatError(f"{where}: expected a pair of vertex ids")
        a, b = e
        if not (1 <= a <= n and 1 <= b <= n):
            raise GraphFormatError(f"{where}: vertex id out of range 1..{n}")
        if a == b:
            raise GraphFormatError(f"{where}: self-loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(f"{where}: duplicate edge {list(key)}")
        seen.add(key)
        pairs.append(key)
    root = obj.get("root")
    if not isinstance(root, int) or isinstance(root, bool) or not (1 <= root <= n):
        raise GraphFormatError(f"root: expected an integer in 1..{n}")
    return ColoredGraph(tuple(colors), frozenset(pairs), root)


def graph_to_json(g: ColoredGraph) -> dict:
    vertices = []
    for v in range(1, g.n + 1):
        c = g.color(v)
        value = c.kind if c.kind in ("z", "w") else c.weight.to_json()
        vertices.append({"id": v, "color": value})
    return {
        "vertices": vertices,
        "edges": [[i, j] for i, j in g.sorted_edges()],
        "root": g.root,
    }
