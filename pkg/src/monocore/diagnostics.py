"""Checkers for the edge-count and degree-sum facts behind core peeling."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graph import ColoredGraph, Graph, color_class, d_core


@dataclass(frozen=True)
class Lemma21Report:
    k: int
    applicable: bool
    edge_threshold: int
    exceeds: bool
    core_nonempty: bool
    consistent: bool


@dataclass(frozen=True)
class Lemma22Report:
    k: int
    X: frozenset[int]
    applicable: bool
    degree_sum: int
    bound: int
    holds: bool


@dataclass(frozen=True)
class PartitionDiagnostic:
    d: int
    R: frozenset[int]
    B: frozenset[int]
    C: frozenset[int]
    b_of: dict[int, int]
    r_of: dict[int, int]
    b_c: int
    r_c: int
    blue_sum: int
    red_sum: int
    blue_bound: int
    red_bound: int
    blue_applicable: bool
    red_applicable: bool
    lemma22_applicable: bool
    inequality_holds: bool


def extremal_edge_count(n: int, k: int) -> int:
    """Most edges an n-vertex graph can have without a k-core (n >= k)."""
    return (k - 1) * n - comb(k, 2)


def check_lemma21(g: Graph, k: int) -> Lemma21Report:
    """Too many edges force a non-empty k-core."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    threshold = extremal_edge_count(g.n, k)
    nonempty = bool(d_core(g, k))
    if g.n < k:
        return Lemma21Report(k, False, threshold, False, nonempty, True)
    exceeds = g.m > threshold
    return Lemma21Report(k, True, threshold, exceeds, nonempty, (not exceeds) or nonempty)


def lemma22_check(g: Graph, k: int) -> Lemma22Report:
    """Degree sum over the vertices outside the k-core, when there are at least k of them."""
    core = d_core(g, k)
    X = frozenset(range(g.n)) - core
    total = sum(g.degree(v) for v in X)
    bound = 2 * (k - 1) * len(X) - comb(k, 2)
    applicable = len(X) >= k
    return Lemma22Report(k, X, applicable, total, bound, (total <= bound) if applicable else True)


def partition_rbc(cg: ColoredGraph, d: int) -> PartitionDiagnostic:
    """Split vertices by membership in the red (color 0) and blue (color 1) d-cores.

    B holds the vertices missing from the blue core but inside the red one,
    R the reverse, and C those in neither core.  So B | C is exactly the
    complement of the blue core.  ``b_of`` counts blue edges at v that lie
    outside the blue core, for v in B | C; ``r_of`` is the red analogue on R | C.
    """
    if cg.r != 2:
        raise ValueError(f"partition needs exactly 2 colors, got r={cg.r}")
    red = color_class(cg, 0)
    blue = color_class(cg, 1)
    red_core = d_core(red, d)
    blue_core = d_core(blue, d)
    allv = frozenset(range(cg.n))
    B = red_core - blue_core
    R = blue_core - red_core
    C = allv - red_core - blue_core

    def outside_core_degree(g: Graph, core: frozenset[int], v: int) -> int:
        return sum(1 for w in g.adj[v] if not (v in core and w in core))

    b_of = {v: outside_core_degree(blue, blue_core, v) for v in B | C}
    r_of = {v: outside_core_degree(red, red_core, v) for v in R | C}
    b_c = sum(b_of[v] for v in C)
    r_c = sum(r_of[v] for v in C)
    blue_sum = sum(b_of.values())
    red_sum = sum(r_of.values())
    blue_bound = 2 * (d - 1) * (len(B) + len(C)) - comb(d, 2)
    red_bound = 2 * (d - 1) * (len(R) + len(C)) - comb(d, 2)
    blue_app = len(B) + len(C) >= d
    red_app = len(R) + len(C) >= d
    holds = (not blue_app or blue_sum <= blue_bound) and (not red_app or red_sum <= red_bound)
    return PartitionDiagnostic(
        d, R, B, C, b_of, r_of, b_c, r_c, blue_sum, red_sum, blue_bound, red_bound,
        blue_app, red_app, blue_app or red_app, holds,
    )
