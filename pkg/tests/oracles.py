"""Independent brute-force references.  Nothing here imports the code paths it checks."""

from itertools import combinations, product


def induced_min_degree_ok(n, edges, subset, d):
    s = set(subset)
    deg = {v: 0 for v in s}
    for u, v in edges:
        if u in s and v in s:
            deg[u] += 1
            deg[v] += 1
    return all(x >= d for x in deg.values())


def max_d_subgraph_order(n, edges, d):
    """Largest vertex subset whose induced subgraph has min degree >= d (0 if none)."""
    edges = list(edges)
    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            if induced_min_degree_ok(n, edges, subset, d):
                return size
    return 0


def max_d_subgraph_sets(n, edges, d):
    """All maximum-order subsets (used to check the core is the unique maximum)."""
    edges = list(edges)
    for size in range(n, 0, -1):
        hits = [set(s) for s in combinations(range(n), size)
                if induced_min_degree_ok(n, edges, s, d)]
        if hits:
            return hits
    return []


def max_mono_order(n, colored_edges, r, d):
    """colored_edges: list of ((u, v), c)."""
    best = 0
    for c in range(r):
        es = [e for e, cc in colored_edges if cc == c]
        best = max(best, max_d_subgraph_order(n, es, d))
    return best


def f_value_by_subsets(n, edges, d, r):
    """min over all r^m colorings of the subset-enumeration max mono order."""
    edges = list(edges)
    best = None
    for cols in product(range(r), repeat=len(edges)):
        v = max_mono_order(n, list(zip(edges, cols)), r, d)
        best = v if best is None else min(best, v)
    return best


def graph6_decode_bits(s):
    """Bit-string reference decoder for n <= 62: returns (n, sorted edge list)."""
    n = ord(s[0]) - 63
    bits = "".join(format(ord(ch) - 63, "06b") for ch in s[1:])
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    assert set(bits[k:]) <= {"0"}
    assert len(bits) - k < 6
    return n, edges


def graph6_encode_bits(n, edges):
    es = set(edges)
    bits = "".join("1" if (i, j) in es else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(n + 63) + "".join(chr(int(bits[k:k + 6], 2) + 63) for k in range(0, len(bits), 6))
