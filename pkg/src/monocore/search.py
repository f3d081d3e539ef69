"""Computing f_G(d, r) and the two peeling-based procedures.

``exhaustive_f`` minimises, over all r-colorings of G, the order of the
largest monochromatic d-subgraph.  Small graphs use vertex bitmasks so the
inner core computation is a handful of integer operations.
"""

from __future__ import annotations

import logging
import math
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .bounds import is_power_of_two, recursion_threshold, split_degrees
from .graph import ColoredGraph, Edge, Graph, max_mono_d_subgraph, peel

log = logging.getLogger(__name__)

DEFAULT_BUDGET_BITS = 30


class BudgetExceeded(RuntimeError):
    pass


@dataclass
class SearchOutcome:
    value: int
    witness: ColoredGraph
    colorings_examined: int
    pruned: int = 0
    seed: int | None = None
    stats: dict = field(default_factory=dict)


def mask_core(adj: Sequence[int], alive: int, d: int) -> int:
    """d-core of the subgraph induced by bitmask ``alive`` (adjacency as bitmasks)."""
    changed = True
    while changed and alive:
        changed = False
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if (adj[v] & alive).bit_count() < d:
                alive ^= low
                changed = True
    return alive


def _check_budget(m: int, r: int, budget_bits: float, override: bool) -> None:
    bits = m * math.log2(r) if r > 1 else 0.0
    if bits > budget_bits and not override:
        raise BudgetExceeded(
            f"coloring space r^m = {r}^{m} is 2^{bits:.1f}, over the 2^{budget_bits:g} budget; "
            "pass override to run anyway"
        )


def score_coloring(g: Graph, edges: Sequence[Edge], colors: Sequence[int], d: int, r: int) -> int:
    """Largest monochromatic d-core order for a coloring given in ``edges`` order."""
    adjs = [[0] * g.n for _ in range(r)]
    for (u, v), c in zip(edges, colors):
        adjs[c][u] |= 1 << v
        adjs[c][v] |= 1 << u
    full = (1 << g.n) - 1
    return max(mask_core(a, full, d).bit_count() for a in adjs)


def _as_colored(g: Graph, edges: Sequence[Edge], colors: Sequence[int], r: int) -> ColoredGraph:
    return ColoredGraph(g, r, dict(zip(edges, colors)))


def brute_force_f(g: Graph, d: int, r: int) -> SearchOutcome:
    """Plain enumeration of all r^m colorings; no pruning, no symmetry."""
    from itertools import product

    edges = g.sorted_edges()
    best, best_cols, count = None, None, 0
    for cols in product(range(r), repeat=len(edges)):
        count += 1
        s = score_coloring(g, edges, cols, d, r)
        if best is None or s < best:
            best, best_cols = s, cols
    return SearchOutcome(best, _as_colored(g, edges, best_cols, r), count)


def exhaustive_f(
    g: Graph,
    d: int,
    r: int,
    budget_bits: float = DEFAULT_BUDGET_BITS,
    override: bool = False,
    prune: bool = True,
    quotient: bool = True,
) -> SearchOutcome:
    """Exact f_G(d, r) by depth-first branch and bound over edge colorings.

    Cores only grow as edges are added, so the largest core of a partial
    coloring bounds every completion from below; a branch is cut once that
    reaches the incumbent.  With ``quotient`` colors are introduced in
    increasing order along the edge order, which fixes the first edge to
    color 0 and removes the r! relabellings.
    """
    if d < 1 or r < 1:
        raise ValueError("d and r must be positive")
    edges = g.sorted_edges()
    m = len(edges)
    _check_budget(m, r, budget_bits, override)
    n = g.n
    full = (1 << n) - 1
    if m == 0:
        return SearchOutcome(0, ColoredGraph(g, r, {}), 1)

    adjs = [[0] * n for _ in range(r)]
    core_size = [0] * r
    colors = [0] * m
    best = [n + 1, None]
    stats = {"examined": 0, "pruned": 0}

    def dfs(i: int, partial: int, used: int) -> None:
        if prune and partial >= best[0]:
            stats["pruned"] += 1
            return
        if i == m:
            stats["examined"] += 1
            if partial < best[0]:
                best[0], best[1] = partial, colors[:]
            return
        u, v = edges[i]
        top = min(r, used + 1) if quotient else r
        for c in range(top):
            a = adjs[c]
            a[u] |= 1 << v
            a[v] |= 1 << u
            old = core_size[c]
            core_size[c] = mask_core(a, full, d).bit_count()
            colors[i] = c
            dfs(i + 1, max(partial, core_size[c]), max(used, c + 1))
            core_size[c] = old
            a[u] ^= 1 << v
            a[v] ^= 1 << u
            if prune and best[0] == 0:
                return

    dfs(0, 0, 0)
    witness = _as_colored(g, edges, best[1], r)
    return SearchOutcome(best[0], witness, stats["examined"], stats["pruned"],
                         stats={"edges": m, "quotient": quotient, "prune": prune})


def _objective(adjs: list[list[int]], c: int, full: int, d: int) -> tuple[int, int, int]:
    """(core order, min core degree - d + 1, core edges) of color class c."""
    core = mask_core(adjs[c], full, d)
    if not core:
        return 0, 0, 0
    edges = 0
    slack = None
    rest = core
    while rest:
        low = rest & -rest
        deg = (adjs[c][low.bit_length() - 1] & core).bit_count()
        edges += deg
        slack = deg if slack is None or deg < slack else slack
        rest ^= low
    return core.bit_count(), slack - d + 1, edges // 2


def anneal_min_coloring(
    g: Graph,
    d: int,
    r: int,
    budget: int,
    seed: int,
    t_start: float = 0.3,
    t_end: float = 0.01,
) -> SearchOutcome:
    """Simulated annealing towards a coloring with small monochromatic cores.

    Moves recolor one random edge to a different random color.  The energy
    ranks colorings lexicographically by the largest core's order, then by
    how close that core is to losing a vertex (its minimum degree), then by
    its edge count.  The returned value is an upper bound on f_G(d, r).
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    rng = random.Random(seed)
    edges = g.sorted_edges()
    m, n = len(edges), g.n
    full = (1 << n) - 1
    colors = [rng.randrange(r) for _ in range(m)]
    adjs = [[0] * n for _ in range(r)]
    for (u, v), c in zip(edges, colors):
        adjs[c][u] |= 1 << v
        adjs[c][v] |= 1 << u
    per = [_objective(adjs, c, full, d) for c in range(r)]

    def energy(per_color) -> float:
        o, s, e = max(per_color)
        return o + (s + e / (m + 1)) / (n + 1)

    cur = energy(per)
    best_e, best_cols = cur, colors[:]
    accepted = 0
    if m == 0 or r == 1:
        budget = 0
    cool = (t_end / t_start) ** (1.0 / max(1, budget))
    temp = t_start
    for _ in range(budget):
        i = rng.randrange(m)
        old = colors[i]
        new = rng.randrange(r - 1)
        if new >= old:
            new += 1
        u, v = edges[i]
        bit_u, bit_v = 1 << u, 1 << v
        adjs[old][u] ^= bit_v
        adjs[old][v] ^= bit_u
        adjs[new][u] |= bit_v
        adjs[new][v] |= bit_u
        saved = (per[old], per[new])
        per[old] = _objective(adjs, old, full, d)
        per[new] = _objective(adjs, new, full, d)
        e = energy(per)
        if e <= cur or rng.random() < math.exp((cur - e) / temp):
            colors[i] = new
            cur = e
            accepted += 1
            if e < best_e:
                best_e, best_cols = e, colors[:]
        else:
            adjs[new][u] ^= bit_v
            adjs[new][v] ^= bit_u
            adjs[old][u] |= bit_v
            adjs[old][v] |= bit_u
            per[old], per[new] = saved
        temp *= cool
    witness = _as_colored(g, edges, best_cols, r)
    value = max_mono_d_subgraph(witness, d).best_order if m else 0
    return SearchOutcome(value, witness, budget, 0, seed, stats={"accepted": accepted})


# --- greedy peeling of monochromatic d-graphs ------------------------------------------

@dataclass
class PeelOutcome:
    d: int
    per_color_deleted_edges: list[int]
    pieces: list[tuple[int, frozenset[int], int]]
    best_color: int
    union_vertex_set: frozenset[int]
    guarantee: float
    met: bool
    claimed_radicand: Fraction
    per_color_radicand: Fraction
    claimed_met: bool
    per_color_met: bool
    union_min_degree: int


def greedy_peel(cg: ColoredGraph, d: int) -> PeelOutcome:
    """Repeatedly strip the edges of a non-empty monochromatic d-core.

    Each round takes the lowest color whose class still has a d-core and
    deletes that core's edges.  When no class has a d-core left, every class
    is below the edge threshold of a core-free graph.
    """
    n, r = cg.n, cg.r
    adj: list[list[set[int]]] = [[set() for _ in range(n)] for _ in range(r)]
    for (u, v), c in cg.color.items():
        adj[c][u].add(v)
        adj[c][v].add(u)
    deleted = [0] * r
    deleted_adj: list[list[set[int]]] = [[set() for _ in range(n)] for _ in range(r)]
    pieces = []
    while True:
        for c in range(r):
            core = peel(n, adj[c], d)
            if core:
                break
        else:
            break
        count = 0
        for v in core:
            for w in [w for w in adj[c][v] if w in core]:
                adj[c][v].discard(w)
                adj[c][w].discard(v)
                deleted_adj[c][v].add(w)
                deleted_adj[c][w].add(v)
                count += 1
        deleted[c] += count
        pieces.append((c, frozenset(core), count))
    best = max(range(r), key=lambda c: (deleted[c], -c))
    union = frozenset(v for v in range(n) if deleted_adj[best][v])
    union_min = min((len(deleted_adj[best][v]) for v in union), default=0)
    q = deleted[best]
    guarantee = math.sqrt(2 * q)
    m = cg.graph.m
    threshold = (d - 1) * n - comb(d, 2)
    claimed = Fraction(2 * (m - threshold), r)
    per_color = Fraction(2 * (m - r * threshold), r)
    size = len(union)
    claimed_met = claimed <= 0 or size * size >= claimed
    per_color_met = per_color <= 0 or size * size >= per_color
    if not claimed_met:
        log.warning("union order %d below sqrt(%s) claimed for m=%d, n=%d, d=%d, r=%d",
                    size, claimed, m, n, d, r)
    return PeelOutcome(
        d, deleted, pieces, best, union, guarantee, size * size >= 2 * q,
        claimed, per_color, claimed_met, per_color_met, union_min,
    )


# --- recursive color splitting -------------------------------------------------------

def recursive_mono_find(cg: ColoredGraph, d: int) -> tuple[int, frozenset[int]]:
    """Find a monochromatic d-subgraph by halving the palette repeatedly.

    At each level the current colors are split into two halves, each half is
    treated as one color, and the search continues inside the larger core of
    the two merged classes.  The core degree used at each level comes from
    :func:`monocore.bounds.split_degrees`.
    """
    r = cg.r
    if not is_power_of_two(r):
        raise ValueError(f"number of colors must be a power of two, got r={r}")
    n = cg.n
    if r >= 2:
        need = recursion_threshold(d, r)
        if cg.graph.min_degree() < need:
            warnings.warn(
                f"min degree {cg.graph.min_degree()} below the splitting threshold {need}; "
                "result carries no size guarantee",
                stacklevel=2,
            )
    adj: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(r)]
    for (u, v), c in cg.color.items():
        adj[c][u].append(v)
        adj[c][v].append(u)

    def merged(colors: Sequence[int]) -> list[list[int]]:
        return [[w for c in colors for w in adj[c][v]] for v in range(n)]

    palette = list(range(r))
    alive = set(range(n))
    degrees = split_degrees(d, r) if r >= 2 else []
    for x in degrees:
        half = len(palette) // 2
        left, right = palette[:half], palette[half:]
        core_l = peel(n, merged(left), x, alive)
        core_r = peel(n, merged(right), x, alive)
        if len(core_r) > len(core_l):
            palette, alive = right, core_r
        else:
            palette, alive = left, core_l
    (color,) = palette
    return color, frozenset(peel(n, adj[color], d, alive))
