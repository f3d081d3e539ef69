import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_coloring, random_graph
from oracles import graph6_decode_bits, graph6_encode_bits
from monocore.constructions import construct_near_complete, overlay_H
from monocore.formats import (FormatError, parse_coloring, parse_graph6, read_graph6_lines,
                              verify_manifest,
                              write_artifact, write_coloring, write_graph6)
from monocore.graph import Graph
from monocore.search import exhaustive_f


def test_graph6_known_strings():
    g = parse_graph6("D?{")
    assert g.n == 5 and sorted(g.edges) == [(0, 4), (1, 4), (2, 4), (3, 4)]
    n, edges = graph6_decode_bits("D?{")
    assert (n, sorted(edges)) == (5, sorted(g.edges))
    k2 = parse_graph6("A_")
    assert k2 == Graph.complete(2)
    assert parse_graph6("@") == Graph(1)
    assert parse_graph6("?") == Graph(0)


@st.composite
def graphs(draw):
    n = draw(st.integers(0, 70))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, draw(st.sets(st.sampled_from(pairs), max_size=60)) if pairs else [])


@settings(max_examples=150, deadline=None)
@given(graphs(), st.booleans())
def test_graph6_property_round_trip(g, header):
    assert parse_graph6(write_graph6(g, header=header)) == g


def test_read_graph6_lines_skips_blanks():
    gs = list(read_graph6_lines(["A_\n", "\n", "  D?{ \n"]))
    assert [g.m for g in gs] == [1, 4]


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<A_") == Graph.complete(2)


def _corpus(rng, count):
    for _ in range(count):
        n = rng.randint(0, 20)
        yield random_graph(rng, n, rng.random())


def test_graph6_corpus_round_trip_and_oracle(rng):
    lines = [graph6_encode_bits(g.n, sorted(g.edges)) for g in _corpus(rng, 1000)]
    for line in lines:
        g = parse_graph6(line)
        assert write_graph6(g) == line
        n, edges = graph6_decode_bits(line)
        assert (n, sorted(edges)) == (g.n, sorted(g.edges))


@pytest.mark.parametrize("n", [62, 63, 100, 258047 // 1000])
def test_graph6_size_headers(n, rng):
    g = random_graph(rng, n, 0.05)
    s = write_graph6(g)
    if n >= 63:
        assert s[0] == "~"
    assert parse_graph6(s) == g


def test_graph6_long_header_decoding():
    # the 8-byte form is valid for any n; decode a small n written that way
    s = "~~" + "".join(chr(((5 >> sh) & 63) + 63) for sh in (30, 24, 18, 12, 6, 0)) + "?{"
    g = parse_graph6(s)
    assert g.n == 5 and g.m == 4


@pytest.mark.parametrize("text,kind", [
    ("D?", "malformed-length"),
    ("D?{{", "malformed-length"),
    ("D?\x7f", "byte-out-of-range"),
    ("D? ", "malformed-length"),
    ("B", "malformed-length"),
    ("Bp", "trailing-bits"),
    ("~?", "malformed-length"),
])
def test_graph6_errors(text, kind):
    with pytest.raises(FormatError) as exc:
        parse_graph6(text)
    assert exc.value.kind == kind


def test_graph6_error_reports_offset():
    with pytest.raises(FormatError) as exc:
        parse_graph6("D?\x20{")
    assert exc.value.offset == 2


K3_TEXT = "p colored 3 3 2\ne 1 2 0\ne 1 3 0\ne 2 3 1\n"


def test_coloring_parse_k3():
    cg = parse_coloring(K3_TEXT, Graph.complete(3))
    assert cg.r == 2 and cg.color == {(0, 1): 0, (0, 2): 0, (1, 2): 1}
    assert write_coloring(cg) == K3_TEXT


def test_coloring_whitespace_and_comments():
    text = "# header\n  p   colored 3 3 2\n\ne 2 1 0\nc a comment\ne 1  3 0\n e 3 2 1 \n"
    cg = parse_coloring(text)
    assert cg == parse_coloring(K3_TEXT)


@pytest.mark.parametrize("text,kind", [
    ("p colored 3 3 2\ne 1 2 0\ne 1 3 0\ne 2 3 2\n", "color-out-of-range"),
    ("p colored 3 3 2\ne 1 2 0\ne 1 3 0\n", "missing-edge"),
    ("p colored 3 3 2\ne 1 2 0\ne 1 3 0\ne 2 3 1\ne 2 1 1\n", "duplicate-edge"),
    ("p colored 4 3 2\ne 1 2 0\ne 1 3 0\ne 2 3 1\n", "bad-header"),
    ("p colored 3 4 2\ne 1 2 0\ne 1 3 0\ne 2 3 1\n", "bad-header"),
    ("e 1 2 0\n", "bad-header"),
    ("p colored 3 3 2\ne 1 2 x\n", "bad-record"),
    ("p colored 3 3 2\nf 1 2 0\n", "bad-record"),
    ("p colored 3 3 2\ne 1 1 0\n", "unknown-edge"),
])
def test_coloring_errors(text, kind):
    with pytest.raises(FormatError) as exc:
        parse_coloring(text, Graph.complete(3))
    assert exc.value.kind == kind


def test_coloring_unknown_edge():
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(FormatError) as exc:
        parse_coloring(K3_TEXT, g)
    assert exc.value.kind == "unknown-edge"


def test_coloring_round_trip_random(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 15), rng.random())
        cg = random_coloring(rng, g, rng.randint(1, 4))
        assert parse_coloring(write_coloring(cg), g) == cg
        assert parse_coloring(write_coloring(cg)) == cg


def test_coloring_round_trip_witnesses(rng):
    for _ in range(40):
        g = random_graph(rng, 6, 0.5)
        if g.m > 10:
            continue
        for r in (2, 3):
            w = exhaustive_f(g, 2, r).witness
            assert parse_coloring(write_coloring(w), g) == w


def test_manifest_write_and_verify(tmp_path):
    art = construct_near_complete(12, 3, 2)
    manifest = write_artifact(art, tmp_path)
    assert manifest["all_pass"]
    again = verify_manifest(tmp_path / "nearcomplete.json")
    assert again == verify_manifest(tmp_path / "nearcomplete.json")
    assert again["status"] == manifest["status"]


def test_verify_recomputes_status(tmp_path):
    import json

    write_artifact(overlay_H(60, 2), tmp_path)
    path = tmp_path / "overlay.json"
    data = json.loads(path.read_text())
    data["claims"]["max_mono_core_order"] = 2
    data["status"] = {k: "pass" for k in data["status"]}
    path.write_text(json.dumps(data))
    out = verify_manifest(path)
    assert out["status"]["max_mono_core_order"] == "fail" and not out["all_pass"]
