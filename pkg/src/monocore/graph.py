"""Graph and edge-coloring data model plus core peeling.

Vertices are dense 0-based indices.  Edges are stored as sorted pairs
``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        es = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            e = norm_edge(u, v)
            if e in es:
                raise ValueError(f"duplicate edge {e}")
            es.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(frozenset(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on all ``n`` vertices keeping edges inside ``vertices``."""
        vs = set(vertices)
        return Graph(self.n, (e for e in self.edges if e[0] in vs and e[1] in vs))

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + [norm_edge(*e) for e in extra])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, ((i, i + 1) for i in range(n - 1)))


class ColoredGraph:
    """A graph with a total edge coloring into colors ``0..r-1``."""

    __slots__ = ("graph", "r", "color")

    def __init__(self, graph: Graph, r: int, color: Mapping[Edge, int]):
        if r < 1:
            raise ValueError("number of colors must be at least 1")
        col = {}
        for e, c in color.items():
            e = norm_edge(*e)
            if e not in graph.edges:
                raise ValueError(f"colored edge {e} is not in the graph")
            if not 0 <= c < r:
                raise ValueError(f"color {c} of edge {e} out of range for r={r}")
            col[e] = c
        missing = graph.edges - col.keys()
        if missing:
            raise ValueError(f"{len(missing)} edges left uncolored, e.g. {min(missing)}")
        self.graph = graph
        self.r = r
        self.color = col

    @property
    def n(self) -> int:
        return self.graph.n

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[Sequence[int]]]) -> "ColoredGraph":
        """Build from one edge list per color; classes must be edge-disjoint."""
        color: dict[Edge, int] = {}
        for c, es in enumerate(classes):
            for u, v in es:
                e = norm_edge(u, v)
                if e in color:
                    raise ValueError(f"edge {e} appears in colors {color[e]} and {c}")
                color[e] = c
        return cls(Graph(n, color), max(1, len(classes)), color)

    def class_edges(self, c: int) -> list[Edge]:
        return sorted(e for e, cc in self.color.items() if cc == c)

    def coloring_list(self) -> list[int]:
        """Colors in sorted-edge order."""
        return [self.color[e] for e in self.graph.sorted_edges()]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ColoredGraph)
            and self.r == other.r
            and self.graph == other.graph
            and self.color == other.color
        )

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.graph.m}, r={self.r})"


def color_class(cg: ColoredGraph, c: int) -> Graph:
    """Spanning subgraph formed by the edges of color ``c``."""
    if not 0 <= c < cg.r:
        raise ValueError(f"color {c} out of range for r={cg.r}")
    return Graph(cg.n, cg.class_edges(c))


def peel(n: int, adj: Sequence[Iterable[int]], d: int, alive: Iterable[int] | None = None) -> set[int]:
    """Peel vertices of degree < d from the subgraph induced by ``alive``.

    Works directly on adjacency lists so hot loops avoid building Graph
    objects.  Runs in O(n + m).
    """
    inside = [False] * n
    verts = range(n) if alive is None else alive
    for v in verts:
        inside[v] = True
    deg = [0] * n
    for v in range(n):
        if inside[v]:
            deg[v] = sum(1 for w in adj[v] if inside[w])
    queue = deque(v for v in range(n) if inside[v] and deg[v] < d)
    for v in queue:
        inside[v] = False
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if inside[w]:
                deg[w] -= 1
                if deg[w] < d:
                    inside[w] = False
                    queue.append(w)
    return {v for v in range(n) if inside[v]}


def core_numbers(g: Graph) -> list[int]:
    """Core number of every vertex (bucket-queue peeling, O(n + m))."""
    n = g.n
    deg = g.degrees()
    maxdeg = max(deg, default=0)
    bins = [0] * (maxdeg + 1)
    for dv in deg:
        bins[dv] += 1
    start = 0
    for k in range(maxdeg + 1):
        bins[k], start = start, start + bins[k]
    pos = [0] * n
    order = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        order[pos[v]] = v
        bins[deg[v]] += 1
    for k in range(maxdeg, 0, -1):
        bins[k] = bins[k - 1]
    if maxdeg >= 0 and n:
        bins[0] = 0
    for i in range(n):
        v = order[i]
        for w in g.adj[v]:
            if deg[w] > deg[v]:
                dw = deg[w]
                pw, pu = pos[w], bins[dw]
                u = order[pu]
                if u != w:
                    order[pu], order[pw] = w, u
                    pos[w], pos[u] = pu, pw
                bins[dw] += 1
                deg[w] -= 1
    return deg


def d_core(g: Graph, d: int) -> frozenset[int]:
    """Vertex set of the maximal subgraph of minimum degree >= d (may be empty)."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    return frozenset(peel(g.n, g.adj, d))


@dataclass(frozen=True)
class CoreReport:
    d: int
    per_color_core: tuple[frozenset[int], ...]
    best_color: int
    best_order: int
    per_color_edges: tuple[int, ...] = field(default=())


def max_mono_d_subgraph(cg: ColoredGraph, d: int) -> CoreReport:
    """Largest monochromatic subgraph of minimum degree >= d.

    The union of two d-subgraphs of one color is again a d-subgraph, so the
    largest one in color c is the d-core of that color class.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    n = cg.n
    adjs = [[[] for _ in range(n)] for _ in range(cg.r)]
    for (u, v), c in cg.color.items():
        adjs[c][u].append(v)
        adjs[c][v].append(u)
    cores = []
    edge_counts = []
    for c in range(cg.r):
        core = peel(n, adjs[c], d)
        cores.append(frozenset(core))
        edge_counts.append(sum(1 for v in core for w in adjs[c][v] if w in core) // 2)
    best = 0
    for c in range(1, cg.r):
        if len(cores[c]) > len(cores[best]):
            best = c
    return CoreReport(d, tuple(cores), best, len(cores[best]), tuple(edge_counts))
