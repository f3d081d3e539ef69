"""Command-line entry point: ``monocore <subcommand> ...``.

Exit codes: 0 success, 1 usage or parse error, 2 validation failure.
Results are JSON on stdout (``bounds`` may emit CSV); errors are JSON on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import bounds as bnd
from .constructions import FAMILIES, InfeasibleParameters
from .diagnostics import check_lemma21, lemma22_check, partition_rbc
from .formats import (FormatError, parse_coloring, parse_graph6, verify_manifest,
                      write_artifact, write_coloring)
from .graph import ColoredGraph, Graph, color_class, core_numbers, d_core, max_mono_d_subgraph
from .search import (DEFAULT_BUDGET_BITS, BudgetExceeded, anneal_min_coloring, exhaustive_f,
                     greedy_peel, recursive_mono_find)

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _labels(vs) -> list[int]:
    return sorted(v + 1 for v in vs)


def _emit(obj, stream=None) -> None:
    print(json.dumps(obj, indent=2, default=str), file=stream or sys.stdout)


def _read_text(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _load_graph(args) -> Graph:
    if getattr(args, "g6", None):
        return parse_graph6(args.g6)
    if not getattr(args, "graph", None):
        raise UsageError("a graph is required (--graph FILE or --g6 STRING)")
    for line in _read_text(args.graph).splitlines():
        if line.strip():
            return parse_graph6(line)
    raise UsageError(f"no graph6 line in {args.graph}")


def _load_colored(args) -> ColoredGraph:
    if not args.coloring:
        raise UsageError("--coloring FILE is required")
    g = _load_graph(args) if (args.graph or args.g6) else None
    return parse_coloring(_read_text(args.coloring), g)


def _outcome_json(o) -> dict:
    return {
        "value": o.value,
        "colorings_examined": o.colorings_examined,
        "pruned": o.pruned,
        "seed": o.seed,
        "stats": o.stats,
        "witness": write_coloring(o.witness),
    }


def _write_witness(args, o) -> None:
    if getattr(args, "witness_out", None):
        Path(args.witness_out).write_text(write_coloring(o.witness))


# --- subcommands ----------------------------------------------------------------------

def cmd_core(args) -> int:
    g = _load_graph(args)
    core = d_core(g, args.d)
    _emit({"n": g.n, "m": g.m, "d": args.d, "order": len(core), "core": _labels(core),
           "core_numbers": core_numbers(g)})
    return EXIT_OK


def cmd_mono(args) -> int:
    cg = _load_colored(args)
    rep = max_mono_d_subgraph(cg, args.d)
    _emit({"d": rep.d, "r": cg.r, "best_color": rep.best_color, "best_order": rep.best_order,
           "per_color_core": [_labels(c) for c in rep.per_color_core],
           "per_color_core_edges": list(rep.per_color_edges)})
    return EXIT_OK


def cmd_fexact(args) -> int:
    g = _load_graph(args)
    o = exhaustive_f(g, args.d, args.r, budget_bits=args.budget, override=args.override_budget)
    _write_witness(args, o)
    _emit({"d": args.d, "r": args.r, **_outcome_json(o)})
    return EXIT_OK


def cmd_fanneal(args) -> int:
    g = _load_graph(args)
    o = anneal_min_coloring(g, args.d, args.r, args.budget, args.seed)
    _write_witness(args, o)
    _emit({"d": args.d, "r": args.r, "upper_bound": True, **_outcome_json(o)})
    return EXIT_OK


def cmd_peel(args) -> int:
    cg = _load_colored(args)
    p = greedy_peel(cg, args.d)
    _emit({
        "d": p.d,
        "per_color_deleted_edges": p.per_color_deleted_edges,
        "pieces": [{"color": c, "vertices": _labels(vs), "edges": e} for c, vs, e in p.pieces],
        "best_color": p.best_color,
        "union_vertex_set": _labels(p.union_vertex_set),
        "union_order": len(p.union_vertex_set),
        "union_min_degree": p.union_min_degree,
        "guarantee": p.guarantee,
        "met": p.met,
        "claimed_radicand": str(p.claimed_radicand),
        "claimed_met": p.claimed_met,
        "per_color_radicand": str(p.per_color_radicand),
        "per_color_met": p.per_color_met,
    })
    return EXIT_OK


def cmd_rfind(args) -> int:
    cg = _load_colored(args)
    color, vs = recursive_mono_find(cg, args.d)
    _emit({"d": args.d, "r": cg.r, "color": color, "order": len(vs), "vertices": _labels(vs)})
    return EXIT_OK


_FAMILY_ARGS = {
    "lemma21": ("m", "k"),
    "H": ("n", "d"),
    "overlay": ("n", "d", "seed"),
    "degenerate": ("y", "d"),
    "multicolor": ("m", "d", "k", "r"),
    "nearcomplete": ("n", "k", "d"),
    "prop31tight": ("n", "t", "d", "r"),
}


def cmd_construct(args) -> int:
    names = _FAMILY_ARGS[args.family]
    missing = [f"--{a}" for a in names if getattr(args, a) is None]
    if missing:
        raise UsageError(f"construct {args.family} requires {' '.join(missing)}")
    kwargs = {a: getattr(args, a) for a in names}
    if args.family == "multicolor":
        kwargs["split"] = args.split
        if args.y is not None:
            kwargs["y"] = args.y
    art = FAMILIES[args.family](**kwargs)
    manifest = write_artifact(art, Path(args.out_dir), args.prefix)
    _emit(manifest)
    return EXIT_OK if manifest["all_pass"] else EXIT_INVALID


def cmd_verify(args) -> int:
    manifest = verify_manifest(Path(args.manifest))
    _emit(manifest)
    return EXIT_OK if manifest["all_pass"] else EXIT_INVALID


def parse_grid(spec: str | None) -> list[int | None]:
    """``"5"``, ``"5,7,9"`` or ``"start:stop[:step]"`` (stop inclusive)."""
    if spec is None:
        return [None]
    out: list[int | None] = []
    for part in spec.split(","):
        if ":" in part:
            bits = [int(x) for x in part.split(":")]
            step = bits[2] if len(bits) > 2 else 1
            out.extend(range(bits[0], bits[1] + 1, step))
        else:
            out.append(int(part))
    return out


def cmd_bounds(args) -> int:
    rows = []
    for n in parse_grid(args.n):
        for k in parse_grid(args.k):
            for d in parse_grid(args.d):
                for r in parse_grid(args.r):
                    for m in parse_grid(args.m):
                        if None in (n, k, d, r):
                            raise UsageError("bounds requires --n --k --d --r")
                        for rep in bnd.all_bounds(n, k, d, r, m):
                            rows.append({"n": n, "k": k, "d": d, "r": r, "m": m, **rep.as_dict()})
    if args.format == "json":
        _emit(rows)
    else:
        buf = io.StringIO()
        fields = ["n", "k", "d", "r", "m", "name", "value", "radicand", "decimal",
                  "applicable", "preconditions_checked"]
        w = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        for row in rows:
            row = dict(row, preconditions_checked="; ".join(row["preconditions_checked"]))
            w.writerow(row)
        sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_diagnose(args) -> int:
    cg = _load_colored(args)
    out: dict = {"d": args.d}
    if cg.r == 2:
        p = partition_rbc(cg, args.d)
        out["partition"] = {
            "R": _labels(p.R), "B": _labels(p.B), "C": _labels(p.C),
            "b_of": {str(v + 1): x for v, x in sorted(p.b_of.items())},
            "r_of": {str(v + 1): x for v, x in sorted(p.r_of.items())},
            "b_c": p.b_c, "r_c": p.r_c,
            "blue_sum": p.blue_sum, "blue_bound": p.blue_bound,
            "red_sum": p.red_sum, "red_bound": p.red_bound,
            "lemma22_applicable": p.lemma22_applicable,
            "inequality_holds": p.inequality_holds,
        }
    else:
        out["partition"] = {"skipped": f"needs r=2, got r={cg.r}"}
    out["lemma22_per_color"] = []
    for c in range(cg.r):
        rep = lemma22_check(color_class(cg, c), args.d)
        out["lemma22_per_color"].append({
            "color": c, "X_size": len(rep.X), "applicable": rep.applicable,
            "degree_sum": rep.degree_sum, "bound": rep.bound, "holds": rep.holds,
        })
    k = args.k if args.k is not None else args.d
    l21 = check_lemma21(cg.graph, k)
    out["lemma21"] = {"k": k, "applicable": l21.applicable, "edge_threshold": l21.edge_threshold,
                      "exceeds": l21.exceeds, "core_nonempty": l21.core_nonempty,
                      "consistent": l21.consistent}
    _emit(out)
    ok = out["partition"].get("inequality_holds", True) and all(
        x["holds"] for x in out["lemma22_per_color"]) and l21.consistent
    return EXIT_OK if ok else EXIT_INVALID


def _fexact_item(job):
    text, d, r, budget, override = job
    g = parse_graph6(text)
    o = exhaustive_f(g, d, r, budget_bits=budget, override=override)
    return g.n, g.m, g.min_degree(), o.value, write_coloring(o.witness)


def cmd_corpus_min(args) -> int:
    lines = [ln.strip() for ln in _read_text(args.corpus).splitlines() if ln.strip()]
    if args.min_degree is not None:
        lines = [ln for ln in lines if parse_graph6(ln).min_degree() >= args.min_degree]
    jobs = [(ln, args.d, args.r, args.budget, args.override_budget) for ln in lines]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            results = list(ex.map(_fexact_item, jobs))
    else:
        results = [_fexact_item(j) for j in jobs]
    per = [{"index": i, "graph6": ln, "n": n, "m": m, "min_degree": md, "value": v}
           for i, (ln, (n, m, md, v, _)) in enumerate(zip(lines, results))]
    best = min(range(len(per)), key=lambda i: per[i]["value"]) if per else None
    _emit({
        "d": args.d, "r": args.r, "count": len(per),
        "value": None if best is None else per[best]["value"],
        "argmin": best,
        "witness": None if best is None else results[best][4],
        "per_graph": per,
    })
    return EXIT_OK


# --- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="monocore", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def graph_args(sp, required_coloring=False):
        sp.add_argument("--graph", help="graph6 file (first line used), '-' for stdin")
        sp.add_argument("--g6", help="graph6 string")
        if required_coloring:
            sp.add_argument("--coloring", help="coloring file ('p colored' format)")

    sp = sub.add_parser("core", help="d-core of a graph")
    graph_args(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_core)

    sp = sub.add_parser("mono", help="largest monochromatic d-subgraph of a colored graph")
    graph_args(sp, True)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_mono)

    sp = sub.add_parser("fexact", help="exact f_G(d, r) by exhaustive search")
    graph_args(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--budget", type=float, default=DEFAULT_BUDGET_BITS,
                    help="log2 of the largest coloring space allowed")
    sp.add_argument("--override-budget", action="store_true")
    sp.add_argument("--witness-out")
    sp.set_defaults(func=cmd_fexact)

    sp = sub.add_parser("fanneal", help="annealing upper bound on f_G(d, r)")
    graph_args(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--budget", type=int, default=100000, help="number of moves")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--witness-out")
    sp.set_defaults(func=cmd_fanneal)

    sp = sub.add_parser("peel", help="greedy deletion of monochromatic d-cores")
    graph_args(sp, True)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_peel)

    sp = sub.add_parser("rfind", help="recursive color-splitting search")
    graph_args(sp, True)
    sp.add_argument("--d", type=int, required=True)
    sp.set_defaults(func=cmd_rfind)

    sp = sub.add_parser("construct", help="generate and validate an extremal construction")
    sp.add_argument("family", choices=sorted(FAMILIES))
    for name in ("n", "m", "k", "d", "r", "t", "y", "seed"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--split", choices=("per_pair", "balanced"), default="per_pair",
                    help="multicolor: how A-vertex demand is spread over bipartite pairs")
    sp.add_argument("--out-dir", default=".")
    sp.add_argument("--prefix")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("verify", help="re-validate a claims manifest against its files")
    sp.add_argument("manifest")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bounds", help="tabulate the closed-form bounds over a grid")
    for name in ("n", "k", "d", "r", "m"):
        sp.add_argument(f"--{name}", help="value, list a,b,c or range start:stop[:step]")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("diagnose", help="R/B/C partition and degree-sum checks")
    graph_args(sp, True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--k", type=int, help="core degree for the edge-threshold check (default d)")
    sp.set_defaults(func=cmd_diagnose)

    sp = sub.add_parser("corpus-min", help="minimum f_G(d, r) over a graph6 corpus")
    sp.add_argument("--corpus", required=True, help="file of graph6 lines, '-' for stdin")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--min-degree", type=int, help="skip graphs below this minimum degree")
    sp.add_argument("--budget", type=float, default=DEFAULT_BUDGET_BITS)
    sp.add_argument("--override-budget", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_corpus_min)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a subcommand is required")
        return args.func(args)
    except UsageError as e:
        _emit({"error": "usage", "message": str(e)}, sys.stderr)
        return EXIT_USAGE
    except FormatError as e:
        _emit({"error": "parse", "kind": e.kind, "offset": e.offset, "message": str(e)}, sys.stderr)
        return EXIT_USAGE
    except InfeasibleParameters as e:
        _emit({"error": "infeasible-parameters", "message": str(e)}, sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        _emit({"error": "budget-exceeded", "message": str(e)}, sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as e:
        _emit({"error": type(e).__name__, "message": str(e)}, sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
