"""Recompute construction claims from the graph itself."""

from __future__ import annotations

from typing import Any, Callable

from .constructions import ConstructionArtifact, h_edges, multiset
from .graph import ColoredGraph, max_mono_d_subgraph, norm_edge


def _class_degrees(cg: ColoredGraph, c: int) -> list[int]:
    deg = [0] * cg.n
    for (u, v), cc in cg.color.items():
        if cc == c:
            deg[u] += 1
            deg[v] += 1
    return deg


def _regular(cg: ColoredGraph, params, d) -> int | None:
    degs = set(cg.graph.degrees())
    return degs.pop() if len(degs) == 1 else None


def _maps_match(cg: ColoredGraph, params, d) -> bool:
    base = h_edges(params["n"], params["d"])
    for c, mp in enumerate(params["copy_maps"]):
        image = {norm_edge(mp[u] - 1, mp[v] - 1) for u, v in base}
        if image != set(cg.class_edges(c)):
            return False
    return True


def _pair_minimums(cg: ColoredGraph, params, d) -> bool:
    """Bipartite pairs: partner side exactly d-1, A side meets its requirement.

    Per-pair split checks every pair against its rounded-up share; the
    balanced split checks each A vertex's total over all pairs.
    """
    r = params["r"]
    blocks = params["blocks"]
    A = [{v - 1 for v in a} for a in blocks["A"]]
    A_def = [{v - 1 for v in a} for a in blocks["A_deficient"]]
    B = [{v - 1 for v in b} for b in blocks["B"]]
    balanced = params.get("split", "per_pair") == "balanced"
    for i in range(r):
        totals: dict[int, int] = {}
        for j in range(r):
            if i == j:
                continue
            side = A[j] | B[j]
            deg: dict[int, int] = {}
            for (u, v), c in cg.color.items():
                if c != i:
                    continue
                for a, b in ((u, v), (v, u)):
                    if a in A[i] and b in side:
                        deg[a] = deg.get(a, 0) + 1
                        deg[b] = deg.get(b, 0) + 1
            if any(deg.get(b, 0) != d - 1 for b in side):
                return False
            for a in A[i]:
                totals[a] = totals.get(a, 0) + deg.get(a, 0)
                if balanced:
                    continue
                want = params["pair_min_deficient"] if a in A_def[i] else params["pair_min_full"]
                if deg.get(a, 0) < want:
                    return False
        if balanced:
            for a in A[i]:
                want = params["total_deficient"] if a in A_def[i] else params["total_full"]
                if totals.get(a, 0) < want:
                    return False
    return True


CLAIMS: dict[str, Callable[[ColoredGraph, dict, int], Any]] = {
    "n": lambda cg, p, d: cg.n,
    "edge_count": lambda cg, p, d: cg.graph.m,
    "min_degree": lambda cg, p, d: cg.graph.min_degree(),
    "regular_degree": _regular,
    "degree_multiset": lambda cg, p, d: multiset(cg.graph.degrees()),
    "per_color_edge_counts": lambda cg, p, d: [len(cg.class_edges(c)) for c in range(cg.r)],
    "per_color_degree_multisets": lambda cg, p, d: [multiset(_class_degrees(cg, c)) for c in range(cg.r)],
    "per_color_cores": lambda cg, p, d: [
        sorted(v + 1 for v in core) for core in max_mono_d_subgraph(cg, d).per_color_core
    ],
    "per_color_core_orders": lambda cg, p, d: [
        len(core) for core in max_mono_d_subgraph(cg, d).per_color_core
    ],
    "max_mono_core_order": lambda cg, p, d: max_mono_d_subgraph(cg, d).best_order,
    "color_classes_match_maps": _maps_match,
    "min_degree_at_least_k": lambda cg, p, d: cg.graph.min_degree() >= p["k"],
    "per_pair_minimums_met": _pair_minimums,
}


def evaluate_claims(cg: ColoredGraph, params: dict, core_degree: int, claims: dict) -> dict[str, dict]:
    """Per-claim ``{"expected", "actual", "status"}``; unknown claim names fail."""
    out = {}
    for name, expected in claims.items():
        fn = CLAIMS.get(name)
        if fn is None:
            out[name] = {"expected": expected, "actual": None, "status": "unknown-claim"}
            continue
        actual = fn(cg, params, core_degree)
        out[name] = {
            "expected": expected,
            "actual": actual,
            "status": "pass" if actual == expected else "fail",
        }
    return out


def validate_artifact(art: ConstructionArtifact) -> dict[str, dict]:
    return evaluate_claims(art.colored, art.params, art.core_degree, art.claims)


def all_pass(results: dict[str, dict]) -> bool:
    return all(r["status"] == "pass" for r in results.values())
