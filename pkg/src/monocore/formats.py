"""Text formats: graph6, the ``p colored`` edge-coloring format, claims manifests.

Coloring format (1-based vertices, 0-based colors)::

    p colored <n> <m> <r>
    e <u> <v> <c>
    ...

Blank lines and lines starting with ``#`` or ``c `` are ignored.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Iterator

from .constructions import ConstructionArtifact
from .graph import ColoredGraph, Graph, norm_edge
from .validate import all_pass, evaluate_claims

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Parse failure; ``kind`` names the problem, ``offset`` locates it when known."""

    def __init__(self, kind: str, message: str, offset: int | None = None):
        self.kind = kind
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{kind}: {message}{where}")


# --- graph6 -----------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"n={n} too large for graph6")


def _decode_n(s: str) -> tuple[int, int]:
    """(n, number of header characters consumed)."""
    if not s:
        raise FormatError("malformed-length", "empty input", 0)
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] == "~":
        if len(s) < 8:
            raise FormatError("malformed-length", "truncated 8-byte size header", len(s))
        chunk, start = s[2:8], 2
    else:
        if len(s) < 4:
            raise FormatError("malformed-length", "truncated 4-byte size header", len(s))
        chunk, start = s[1:4], 1
    n = 0
    for i, ch in enumerate(chunk):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise FormatError("byte-out-of-range", f"byte {ord(ch)} not in 63..126", start + i)
        n = (n << 6) | val
    return n, start + len(chunk)


def write_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g``; bits run over the upper triangle column by column."""
    n = g.n
    bits = []
    for j in range(1, n):
        adj = g.adj[j]
        bits.extend(1 if i in adj else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return (GRAPH6_HEADER if header else "") + _encode_n(n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise FormatError("byte-out-of-range", f"byte {ord(ch)} not in 63..126", i)
    n, pos = _decode_n(s)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nbytes:
        raise FormatError("malformed-length",
                          f"expected {nbytes} data bytes for n={n}, got {len(body)}", pos)
    edges = []
    i, j = 0, 1
    for b_idx, ch in enumerate(body):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            k = b_idx * 6 + (5 - shift)
            bit = (val >> shift) & 1
            if k >= nbits:
                if bit:
                    raise FormatError("trailing-bits", "padding bits must be zero", pos + b_idx)
                continue
            if bit:
                edges.append((i, j))
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# --- coloring format ------------------------------------------------------------------

def write_coloring(cg: ColoredGraph) -> str:
    lines = [f"p colored {cg.n} {cg.graph.m} {cg.r}"]
    for (u, v) in cg.graph.sorted_edges():
        lines.append(f"e {u + 1} {v + 1} {cg.color[(u, v)]}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, g: Graph | None = None) -> ColoredGraph:
    """Parse a coloring; with ``g`` given, it must cover exactly g's edges.

    Without ``g`` the graph is taken to be the listed edges.
    """
    header = None
    color: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise FormatError("bad-header", "second header line", lineno)
            if len(parts) != 5 or parts[1] != "colored":
                raise FormatError("bad-header", f"expected 'p colored n m r', got {line!r}", lineno)
            try:
                header = tuple(int(x) for x in parts[2:])
            except ValueError:
                raise FormatError("bad-header", f"non-integer field in {line!r}", lineno) from None
            continue
        if parts[0] != "e" or len(parts) != 4:
            raise FormatError("bad-record", f"expected 'e u v c', got {line!r}", lineno)
        if header is None:
            raise FormatError("bad-header", "edge record before header", lineno)
        try:
            u, v, c = (int(x) for x in parts[1:])
        except ValueError:
            raise FormatError("bad-record", f"non-integer field in {line!r}", lineno) from None
        n, m, r = header
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise FormatError("unknown-edge", f"invalid vertex pair ({u}, {v}) for n={n}", lineno)
        if not 0 <= c < r:
            raise FormatError("color-out-of-range", f"color {c} not in 0..{r - 1}", lineno)
        e = norm_edge(u - 1, v - 1)
        if e in color:
            raise FormatError("duplicate-edge", f"edge ({u}, {v}) listed twice", lineno)
        if g is not None and e not in g.edges:
            raise FormatError("unknown-edge", f"edge ({u}, {v}) is not in the graph", lineno)
        color[e] = c
    if header is None:
        raise FormatError("bad-header", "missing 'p colored' header")
    n, m, r = header
    if g is None:
        g = Graph(n, color)
    elif g.n != n:
        raise FormatError("bad-header", f"header n={n} but graph has {g.n} vertices")
    missing = g.edges - color.keys()
    if missing:
        u, v = min(missing)
        raise FormatError("missing-edge", f"edge ({u + 1}, {v + 1}) has no color ({len(missing)} missing)")
    if m != len(color):
        raise FormatError("bad-header", f"header m={m} but {len(color)} edges listed")
    return ColoredGraph(g, r, color)


# --- claims manifests -----------------------------------------------------------------

def write_artifact(art: ConstructionArtifact, out_dir: Path, prefix: str | None = None) -> dict:
    """Write graph6, coloring and manifest files; return the manifest."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    prefix = prefix or art.name
    g6 = out_dir / f"{prefix}.g6"
    col = out_dir / f"{prefix}.col"
    g6.write_text(write_graph6(art.colored.graph) + "\n")
    col.write_text(write_coloring(art.colored))
    results = evaluate_claims(art.colored, art.params, art.core_degree, art.claims)
    manifest = {
        "construction": art.name,
        "params": art.params,
        "core_degree": art.core_degree,
        "files": {"graph6": g6.name, "coloring": col.name},
        "claims": art.claims,
        "status": {k: v["status"] for k, v in results.items()},
        "actual": {k: v["actual"] for k, v in results.items() if v["status"] != "pass"},
        "all_pass": all_pass(results),
    }
    (out_dir / f"{prefix}.json").write_text(json.dumps(manifest, indent=2) + "\n")
    return manifest


def verify_manifest(path: Path) -> dict:
    """Re-validate a manifest against its files; status is always recomputed."""
    path = Path(path)
    data = json.loads(path.read_text())
    base = path.parent
    g = parse_graph6((base / data["files"]["graph6"]).read_text().strip())
    cg = parse_coloring((base / data["files"]["coloring"]).read_text(), g)
    results = evaluate_claims(cg, data["params"], data["core_degree"], data["claims"])
    return {
        "construction": data["construction"],
        "params": data["params"],
        "core_degree": data["core_degree"],
        "files": data["files"],
        "claims": data["claims"],
        "status": {k: v["status"] for k, v in results.items()},
        "actual": {k: v["actual"] for k, v in results.items() if v["status"] != "pass"},
        "all_pass": all_pass(results),
    }
