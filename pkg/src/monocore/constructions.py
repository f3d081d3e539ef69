"""Deterministic generators for the extremal graphs and colorings.

Every generator returns a :class:`ConstructionArtifact` whose ``claims`` are
computed from the parameters alone (closed forms), never read back from
the generated graph.  :func:`monocore.validate.validate_artifact` then
recomputes each claim from the graph and compares.

Vertex labels inside ``params`` and ``claims`` are 1-based, matching the
text file formats; the graph itself is 0-based.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Any

from .graph import ColoredGraph, Edge, Graph, norm_edge


class InfeasibleParameters(ValueError):
    """Raised when generator parameters violate a required inequality."""


@dataclass
class ConstructionArtifact:
    name: str
    colored: ColoredGraph
    params: dict[str, Any]
    claims: dict[str, Any]
    core_degree: int
    notes: list[str] = field(default_factory=list)


def multiset(degrees) -> dict[str, int]:
    """JSON-friendly degree multiset: ``{"degree": count}`` sorted by degree."""
    cnt = Counter(degrees)
    return {str(k): cnt[k] for k in sorted(cnt)}


def _one_based(vs) -> list[int]:
    return sorted(v + 1 for v in vs)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InfeasibleParameters(message)


# --- edge-count extremal graph (no k-core) ----------------------------------

def lemma21_edges(m: int, k: int) -> list[Edge]:
    return [(i - t, i) for i in range(m) for t in range(1, min(i, k - 1) + 1)]


def lemma21_extremal(m: int, k: int) -> ConstructionArtifact:
    """m vertices, (k-1)m - C(k,2) edges, empty k-core.

    Vertex i is joined to the min(i, k-1) vertices just before it.
    """
    _require(k >= 1, f"k >= 1 violated (k={k})")
    _require(m >= k, f"m >= k violated (m={m}, k={k})")
    g = Graph(m, lemma21_edges(m, k))
    cg = ColoredGraph(g, 1, {e: 0 for e in g.edges})
    claims = {
        "n": m,
        "edge_count": (k - 1) * m - comb(k, 2),
        "degree_multiset": multiset(min(i, k - 1) + min(k - 1, m - 1 - i) for i in range(m)),
        "per_color_core_orders": [0],
        "max_mono_core_order": 0,
    }
    return ConstructionArtifact("lemma21", cg, {"m": m, "k": k}, claims, k)


# --- The graph H and its two-copy overlay ----------------------------------------

def h_added_edges(d: int) -> list[Edge]:
    """Compensating edges (v_i, v_{jd+1}), 1 <= i <= j <= d-1, as 0-based pairs."""
    return [(i - 1, j * d) for i in range(1, d) for j in range(i, d)]


def h_edges(n: int, d: int) -> list[Edge]:
    power = [(i, i + t) for i in range(n) for t in range(1, d) if i + t < n]
    return power + h_added_edges(d)


def h_degrees(n: int, d: int) -> list[int]:
    """Degree of v_1..v_n (index 0..n-1) from the closed form."""
    deg = [2 * (d - 1)] * n
    for j in range(1, d):
        deg[j * d] += j
        deg[n - d + j] -= j
    return deg


def _check_h(n: int, d: int) -> None:
    _require(d >= 1, f"d >= 1 violated (d={d})")
    _require(n >= d * d + d, f"n >= d^2 + d violated (n={n}, d={d})")


def construct_H(n: int, d: int) -> ConstructionArtifact:
    """Path power P^(d-1) on v_1..v_n plus C(d,2) edges evening out the front.

    Every d-subgraph lives inside v_1..v_{d^2-d+1}.
    """
    _check_h(n, d)
    g = Graph(n, h_edges(n, d))
    cg = ColoredGraph(g, 1, {e: 0 for e in g.edges})
    prefix = d * d - d + 1
    claims = {
        "n": n,
        "edge_count": (d - 1) * n,
        "degree_multiset": multiset(h_degrees(n, d)),
        "per_color_cores": [list(range(1, prefix + 1))],
        "per_color_core_orders": [prefix],
        "max_mono_core_order": prefix,
    }
    params = {"n": n, "d": d, "added_edges": [[u + 1, v + 1] for u, v in h_added_edges(d)]}
    return ConstructionArtifact("H", cg, params, claims, d)


def _special_swaps(n: int, d: int) -> dict[int, int]:
    """Role swap v_{jd+1} <-> v_{n-d+1+j} for j = 1..d-1 (0-based positions)."""
    swaps = {}
    for j in range(1, d):
        swaps[j * d] = n - d + j
        swaps[n - d + j] = j * d
    return swaps


def _image_edges(edges: list[Edge], perm: list[int]) -> set[Edge]:
    return {norm_edge(perm[u], perm[v]) for u, v in edges}


def _conflicts(base: set[Edge], edges: list[Edge], perm: list[int]) -> int:
    return sum(1 for u, v in edges if norm_edge(perm[u], perm[v]) in base)


def _stride_permutation(n: int, d: int, swaps: dict[int, int]) -> list[int]:
    s = 2 * d - 1
    while gcd(s, n) != 1:
        s += 1
    perm = [(p * s) % n for p in range(n)]
    inv = {v: p for p, v in enumerate(perm)}
    for p, target in swaps.items():
        q = inv[target]
        perm[p], perm[q] = perm[q], perm[p]
        inv[perm[p]], inv[perm[q]] = p, q
    return perm


def _random_permutation(n: int, swaps: dict[int, int], rng: random.Random) -> list[int]:
    free = [p for p in range(n) if p not in swaps]
    targets = free[:]
    rng.shuffle(targets)
    perm = [0] * n
    for p, t in swaps.items():
        perm[p] = t
    for p, t in zip(free, targets):
        perm[p] = t
    return perm


def _repair(perm: list[int], base: set[Edge], edges: list[Edge], swaps: dict[int, int],
            rng: random.Random, steps: int) -> list[int]:
    """Swap free positions to drive the number of shared edges to zero."""
    n = len(perm)
    incident: list[list[Edge]] = [[] for _ in range(n)]
    for e in edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)
    free = [p for p in range(n) if p not in swaps]

    def local(p: int, q: int) -> int:
        es = set(incident[p]) | set(incident[q])
        return sum(1 for u, v in es if norm_edge(perm[u], perm[v]) in base)

    total = _conflicts(base, edges, perm)
    for _ in range(steps):
        if total == 0:
            break
        bad = [e for e in edges if norm_edge(perm[e[0]], perm[e[1]]) in base]
        u, v = rng.choice(bad)
        p = rng.choice([w for w in (u, v) if w not in swaps] or [u])
        if p in swaps:
            continue
        q = rng.choice(free)
        if q == p:
            continue
        before = local(p, q)
        perm[p], perm[q] = perm[q], perm[p]
        after = local(p, q)
        if after <= before:
            total += after - before
        else:
            perm[p], perm[q] = perm[q], perm[p]
    return perm


def overlay_H(n: int, d: int, seed: int = 0, max_retries: int = 1000) -> ConstructionArtifact:
    """Two edge-disjoint copies of H whose union is 4(d-1)-regular.

    Copy 0 is H itself.  Copy 1 is H relabelled by a permutation that sends
    each surplus vertex v_{jd+1} onto the deficient vertex v_{n-d+1+j} and
    back, so degrees add up to 4(d-1) everywhere.
    """
    _check_h(n, d)
    edges = h_edges(n, d)
    base = set(edges)
    swaps = _special_swaps(n, d)
    method = "stride"
    perm = _stride_permutation(n, d, swaps)
    if _conflicts(base, edges, perm):
        rng = random.Random(seed)
        for attempt in range(1, max_retries + 1):
            perm = _random_permutation(n, swaps, rng)
            perm = _repair(perm, base, edges, swaps, rng, steps=20 * n)
            if not _conflicts(base, edges, perm):
                method = f"random(seed={seed}, attempt={attempt})"
                break
        else:
            raise InfeasibleParameters(
                f"no edge-disjoint placement of two copies of H found for n={n}, d={d} "
                f"after {max_retries} attempts"
            )
    identity = list(range(n))
    cg = ColoredGraph.from_classes(n, [edges, sorted(_image_edges(edges, perm))])
    prefix = d * d - d + 1
    h_ms = multiset(h_degrees(n, d))
    claims = {
        "n": n,
        "edge_count": 2 * (d - 1) * n,
        "regular_degree": 4 * (d - 1),
        "per_color_edge_counts": [(d - 1) * n] * 2,
        "per_color_degree_multisets": [h_ms, h_ms],
        "color_classes_match_maps": True,
        "per_color_core_orders": [prefix, prefix],
        "max_mono_core_order": prefix,
    }
    params = {
        "n": n,
        "d": d,
        "seed": seed,
        "placement": method,
        "copy_maps": [[v + 1 for v in identity], [v + 1 for v in perm]],
    }
    return ConstructionArtifact("overlay", cg, params, claims, d)


# --- (d-1)-degenerate block ------------------------------------------------------

def degenerate_block_edges(y: int, d: int) -> tuple[list[Edge], list[int], list[int]]:
    """Edges of the block plus (full-degree vertices, deficient vertices).

    Local layout: path-power vertices b_1..b_z are 0..z-1, the d absorbing
    vertices a_1..a_d are z..y-1.
    """
    z = y - d
    edges = [(i, i + t) for i in range(z) for t in range(1, d) if i + t < z]
    demand = {}
    for j in range(1, d):
        demand[j - 1] = demand.get(j - 1, 0) + (d - j)
        demand[z - j] = demand.get(z - j, 0) + (d - j)
    capacity = {z + a: d - 1 for a in range(d)}
    for b in sorted(demand, key=lambda b: (-demand[b], b)):
        need = demand[b]
        if need == 0:
            continue
        chosen = sorted(capacity, key=lambda a: (-capacity[a], a))[:need]
        if len(chosen) < need or any(capacity[a] == 0 for a in chosen):
            raise InfeasibleParameters(f"degenerate block assignment failed for y={y}, d={d}")
        for a in chosen:
            capacity[a] -= 1
            edges.append((b, a))
    if any(capacity.values()):
        raise InfeasibleParameters(f"degenerate block left spare capacity for y={y}, d={d}")
    return edges, list(range(z)), list(range(z, y))


def degenerate_block(y: int, d: int) -> ConstructionArtifact:
    """(d-1)-degenerate graph: d vertices of degree d-1, the rest of degree 2(d-1)."""
    _require(d >= 1, f"d >= 1 violated (d={d})")
    _require(y >= 3 * d - 2, f"y >= 3d - 2 violated (y={y}, d={d})")
    edges, full, deficient = degenerate_block_edges(y, d)
    g = Graph(y, edges)
    cg = ColoredGraph(g, 1, {e: 0 for e in g.edges})
    claims = {
        "n": y,
        "edge_count": (d - 1) * y - comb(d, 2),
        "degree_multiset": multiset([d - 1] * d + [2 * (d - 1)] * (y - d)),
        "per_color_core_orders": [0],
        "max_mono_core_order": 0,
    }
    params = {"y": y, "d": d, "deficient": _one_based(deficient)}
    return ConstructionArtifact("degenerate", cg, params, claims, d)


# --- r-color construction with A_i / B_i blocks --------------------------------------

def circulant_steps(x: int, delta: int) -> list[int]:
    """Connection steps giving min degree >= delta on Z_x (exactly delta unless parity forbids)."""
    if delta <= 0:
        return []
    half = (delta + 1) // 2
    if delta % 2 == 0:
        return list(range(1, delta // 2 + 1))
    if x % 2 == 0:
        return list(range(1, delta // 2 + 1)) + [x // 2]
    return list(range(1, half + 1))


def circulant_edges(x: int, steps: list[int]) -> list[Edge]:
    es = {norm_edge(i, (i + s) % x) for i in range(x) for s in steps}
    return sorted(es)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def multicolor_block_size(m: int, d: int, k: int, r: int) -> Fraction:
    return Fraction(m * (d - 1) * (r - 1), k - (r + 1) * (d - 1))


def _pair_shares(total: int, parts: int, index: int) -> list[int]:
    """Split ``total`` over ``parts`` pairs as evenly as possible, rotating by ``index``."""
    base, rem = divmod(max(total, 0), parts)
    return [base + (1 if (t - index) % parts < rem else 0) for t in range(parts)]


def construct_multicolor(m: int, d: int, k: int, r: int, y: int | None = None,
                         split: str = "per_pair") -> ConstructionArtifact:
    """r-colored graph of min degree >= k whose largest monochromatic d-subgraph has order x.

    ``y`` defaults to m(d-1)(r-1)/(k-(r+1)(d-1)), which must then be an
    integer; passing ``y`` explicitly builds the same layout with other
    block sizes as long as every feasibility inequality holds.

    ``split="per_pair"`` asks every bipartite pair for the rounded-up share
    of an A-vertex's missing degree.  ``split="balanced"`` spreads each
    vertex's total over the r-1 pairs in floor/ceil shares instead, which
    stays feasible when r-1 does not divide k-(r+1)(d-1).
    """
    _require(split in ("per_pair", "balanced"), f"unknown split {split!r}")
    _require(r >= 2, f"r >= 2 violated (r={r})")
    _require(d >= 2, f"d >= 2 violated (d={d}); the d=1 case is trivial")
    _require(k > 2 * r * (d - 1), f"k > 2r(d-1) violated (k={k}, 2r(d-1)={2 * r * (d - 1)})")
    if y is None:
        yf = multicolor_block_size(m, d, k, r)
        _require(yf.denominator == 1, f"y = m(d-1)(r-1)/(k-(r+1)(d-1)) = {yf} is not an integer")
        y = int(yf)
    x = m + d - y
    n = (m + d) * r
    delta_b = k - (r - 1) * (d - 1)
    total_full = k - (r + 1) * (d - 1)
    total_def = k - r * (d - 1)
    p_main = _ceil_div(total_full, r - 1)
    p_def = _ceil_div(total_def, r - 1)
    _require(y >= 3 * d - 2, f"y >= 3d - 2 violated (y={y}, d={d}); degenerate block needs it")
    _require(x >= delta_b + 1, f"x >= k - (r-1)(d-1) + 1 violated (x={x}, need {delta_b + 1})")
    if split == "per_pair":
        lhs = (y - d) * p_main + d * p_def
        rhs = (d - 1) * (m + d)
        _require(
            lhs <= rhs,
            f"(y-d)*ceil((k-(r+1)(d-1))/(r-1)) + d*ceil((k-r(d-1))/(r-1)) <= (d-1)(m+d) "
            f"violated ({lhs} > {rhs})",
        )
    block_edges, full_local, def_local = degenerate_block_edges(y, d)
    order = full_local + def_local
    totals = [total_full] * len(full_local) + [total_def] * len(def_local)
    if split == "per_pair":
        shares = [[p_main] * (r - 1)] * len(full_local) + [[p_def] * (r - 1)] * len(def_local)
    else:
        shares = [_pair_shares(t, r - 1, a) for a, t in enumerate(totals)]
    slots = x * (d - 1)
    # need[t][a]: edges vertex a must still send into B_j for the t-th partner j
    need = [[max(0, shares[a][t] - (d - 1)) for a in range(y)] for t in range(r - 1)]
    for t, row in enumerate(need):
        _require(
            sum(row) <= slots and max(row) <= x,
            f"B-side routing needs sum {sum(row)} <= x(d-1) = {slots} and per-vertex <= x "
            f"(partner slot {t})",
        )

    size = m + d
    A = [[i * size + v for v in range(y)] for i in range(r)]
    B = [[i * size + y + v for v in range(x)] for i in range(r)]
    classes: list[list[Edge]] = [[] for _ in range(r)]
    steps = circulant_steps(x, delta_b)
    for i in range(r):
        classes[i] += [(B[i][u], B[i][v]) for u, v in circulant_edges(x, steps)]
        classes[i] += [(A[i][u], A[i][v]) for u, v in block_edges]

    # A_i x A_j: oriented (A_lo[p], A_hi[p+s]); lower color uses shifts 0..d-2, higher d-1..2d-3.
    for lo in range(r):
        for hi in range(lo + 1, r):
            for s in range(d - 1):
                classes[lo] += [(A[lo][p], A[hi][(p + s) % y]) for p in range(y)]
            for s in range(d - 1, 2 * d - 2):
                classes[hi] += [(A[lo][p], A[hi][(p + s) % y]) for p in range(y)]

    # A_i -> B_j: stubs laid out vertex-major, stub t lands on B_j[t mod x].
    for i in range(r):
        partners = [j for j in range(r) if j != i]
        for slot, j in enumerate(partners):
            demand = need[slot][:]
            spare = slots - sum(demand)
            v = 0
            while spare:
                if demand[v % y] < x:
                    demand[v % y] += 1
                    spare -= 1
                v += 1
            t = 0
            for a_local, dem in zip(order, demand):
                for _ in range(dem):
                    classes[i].append((A[i][a_local], B[j][t % x]))
                    t += 1

    cg = ColoredGraph.from_classes(n, classes)
    params = {
        "m": m, "d": d, "k": k, "r": r, "n": n, "y": y, "x": x,
        "y_from_formula": str(multicolor_block_size(m, d, k, r)),
        "split": split,
        "b_block_min_degree": delta_b,
        "pair_min_full": p_main,
        "pair_min_deficient": p_def,
        "total_full": total_full,
        "total_deficient": total_def,
        "circulant_steps": steps,
        "blocks": {
            "A": [_one_based(a) for a in A],
            "A_deficient": [_one_based(A[i][v] for v in def_local) for i in range(r)],
            "B": [_one_based(b) for b in B],
        },
    }
    claims = {
        "n": n,
        "min_degree_at_least_k": True,
        "per_pair_minimums_met": True,
        "per_color_cores": [_one_based(b) for b in B],
        "per_color_core_orders": [x] * r,
        "max_mono_core_order": x,
    }
    return ConstructionArtifact("multicolor", cg, params, claims, d)


# --- near-complete 2-coloring -----------------------------------------------------

def construct_near_complete(n: int, k: int, d: int) -> ConstructionArtifact:
    """Min degree n-k, red and blue d-cores both of order n-2d-k+3.

    Red clique on v_1..v_{n-M} and blue clique on u_1..u_M with M = 2d+k-3.
    Residues for the u_i -> v_j pattern run over 1..M.
    """
    _require(k >= 1, f"k >= 1 violated (k={k})")
    _require(d >= 2, f"d >= 2 violated (d={d})")
    M = 2 * d + k - 3
    _require(M >= 1, f"M = 2d+k-3 >= 1 violated (M={M})")
    _require(n >= 2 * M + 1, f"n >= 2(2d+k-3) + 1 violated (n={n}, need {2 * M + 1})")
    nv = n - M
    vtx = lambda j: j - 1          # v_j, 1-based j
    utx = lambda i: nv + i - 1     # u_i, 1-based i
    red = [(vtx(a), vtx(b)) for a in range(1, nv + 1) for b in range(a + 1, nv + 1)]
    blue = [(utx(a), utx(b)) for a in range(1, M + 1) for b in range(a + 1, M + 1)]
    for i in range(1, M + 1):
        for t in range(d - 1):
            blue.append((utx(i), vtx((i - 1 + t) % M + 1)))
        for t in range(d - 1, 2 * d - 2):
            red.append((utx(i), vtx((i - 1 + t) % M + 1)))
        for j in range(M + 1, nv + 1):
            blue.append((utx(i), vtx(j)))
    cg = ColoredGraph.from_classes(n, [red, blue])
    red_core = list(range(1, nv + 1))
    blue_core = sorted([utx(i) + 1 for i in range(1, M + 1)] + list(range(M + 1, nv + 1)))
    claims = {
        "n": n,
        "min_degree": n - k,
        "degree_multiset": multiset([n - k] * (2 * M) + [n - 1] * (n - 2 * M)),
        "per_color_edge_counts": [comb(nv, 2) + M * (d - 1), comb(M, 2) + M * (d - 1) + M * (nv - M)],
        "per_color_cores": [red_core, blue_core],
        "per_color_core_orders": [nv, nv],
        "max_mono_core_order": n - 2 * d - k + 3,
    }
    params = {"n": n, "k": k, "d": d, "M": M, "u_vertices": [utx(i) + 1 for i in range(1, M + 1)]}
    return ConstructionArtifact("nearcomplete", cg, params, claims, d)


# --- disjoint cliques -------------------------------------------------------------

def prop31_tight(n: int, t: int, d: int, r: int) -> ConstructionArtifact:
    """r vertex-disjoint copies of K_t, copy c in color c, plus isolated vertices."""
    _require(r >= 1 and t >= 1 and d >= 1, "r, t, d must be positive")
    _require(n >= r * t, f"n >= r*t violated (n={n}, r*t={r * t})")
    classes = []
    for c in range(r):
        off = c * t
        classes.append([(off + a, off + b) for a in range(t) for b in range(a + 1, t)])
    g = Graph(n, [e for cls in classes for e in cls])
    color = {norm_edge(*e): c for c, cls in enumerate(classes) for e in cls}
    cg = ColoredGraph(g, r, color)
    order = t if d <= t - 1 else 0
    claims = {
        "n": n,
        "edge_count": r * comb(t, 2),
        "per_color_core_orders": [order] * r,
        "max_mono_core_order": order,
    }
    return ConstructionArtifact("prop31tight", cg, {"n": n, "t": t, "d": d, "r": r}, claims, d)


FAMILIES = {
    "lemma21": lemma21_extremal,
    "H": construct_H,
    "overlay": overlay_H,
    "degenerate": degenerate_block,
    "multicolor": construct_multicolor,
    "nearcomplete": construct_near_complete,
    "prop31tight": prop31_tight,
}
