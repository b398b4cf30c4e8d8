"""Independent oracles for the test suite.

Everything here is deliberately written from scratch against the published
definitions (graph6 format note, line-graph reduction, brute-force
enumeration) and shares no algorithmic path with the package code it
checks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


# -- reference graph6 decoder (straight from the format note) -----------------


def decode_graph6_reference(line: str) -> tuple[int, set[frozenset[int]]]:
    data = [ord(ch) - 63 for ch in line.strip()]
    assert all(0 <= x <= 63 for x in data)
    if data[0] <= 62:
        n = data[0]
        data = data[1:]
    elif data[1] <= 62:
        n = (data[1] << 12) + (data[2] << 6) + data[3]
        data = data[4:]
    else:
        n = 0
        for x in data[2:8]:
            n = (n << 6) + x
        data = data[8:]
    bits = []
    for x in data:
        bits.extend((x >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    edges = set()
    idx = 0
    for j in range(n):
        for i in range(j):
            if bits[idx]:
                edges.add(frozenset((i, j)))
            idx += 1
    return n, edges


# -- line graph + exhaustive vertex coloring ------------------------------------


def line_graph(n: int, pairs: list[tuple[int, int]]):
    """Vertices are edge indices; adjacency = shares an endpoint."""
    m = len(pairs)
    adj = [set() for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            if set(pairs[a]) & set(pairs[b]):
                adj[a].add(b)
                adj[b].add(a)
    return adj


def max_independent_set_size(adj: list[set[int]]) -> int:
    n = len(adj)
    best = 0

    def rec(i, chosen, banned):
        nonlocal best
        if n - i + len(chosen) <= best:
            return
        if i == n:
            best = max(best, len(chosen))
            return
        if i in banned:
            rec(i + 1, chosen, banned)
            return
        rec(i + 1, chosen | {i}, banned | adj[i])
        rec(i + 1, chosen, banned)

    rec(0, set(), set())
    return best


def vertex_colorable(adj: list[set[int]], k: int) -> bool:
    """Exhaustive backtracking k-colorability of a vertex-colored graph."""
    n = len(adj)
    if n == 0:
        return True
    if k <= 0:
        return False
    if max_independent_set_size(adj) * k < n:
        return False
    colors = [-1] * n
    order = sorted(range(n), key=lambda v: -len(adj[v]))

    def rec(i, used):
        if i == n:
            return True
        v = order[i]
        seen = {colors[w] for w in adj[v] if colors[w] >= 0}
        for c in range(min(used + 1, k)):
            if c in seen:
                continue
            colors[v] = c
            if rec(i + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return rec(0, 0)


def chromatic_index_via_line_graph(n: int, pairs: list[tuple[int, int]]) -> int:
    """chi'(G) computed as the chromatic number of the line graph."""
    if not pairs:
        return 0
    adj = line_graph(n, pairs)
    deg = [0] * n
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    delta = max(deg)
    k = delta
    while not vertex_colorable(adj, k):
        k += 1
    return k


# -- literal brute-force edge-coloring decisions ---------------------------------


def brute_force_colorable(n: int, pairs: list[tuple[int, int]], k: int) -> bool:
    """Try every assignment in k^m; only usable for tiny graphs."""
    m = len(pairs)
    for assign in itertools.product(range(k), repeat=m):
        ok = True
        for a in range(m):
            for b in range(a + 1, m):
                if assign[a] == assign[b] and set(pairs[a]) & set(pairs[b]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return m == 0


# -- recursive Kierstead-path enumerator (independent of fans.py) ---------------


def kierstead_paths_reference(g, phi, e1: int, max_edges: int) -> set[tuple[int, ...]]:
    """All Kierstead-path vertex sequences over e1, found by blind recursion."""
    a, b = g.pair(e1)
    found: set[tuple[int, ...]] = set()

    def missing(v):
        return phi.missing(v)

    def grow(seq):
        found.add(tuple(seq))
        if len(seq) - 1 >= max_edges:
            return
        last = seq[-1]
        allowed = set()
        for h in seq:
            allowed |= missing(h)
        for z in g.neighbors(last):
            if z in seq:
                continue
            c = phi.color_of(g.edge_id(last, z))
            if c is not None and c in allowed:
                grow(seq + [z])

    grow([a, b])
    grow([b, a])
    found.discard((b, a))  # single edge counted once, canonical orientation
    if a > b:
        found.discard((a, b))
        found.add((b, a))
    return found


# -- brute-force partition classifier ---------------------------------------------


def classify_partition_reference(g, q: Fraction, c: int):
    """X1 / N(X1) / Z1 / Z2 by direct set-building with Fraction thresholds."""
    delta = g.delta
    x1 = {v for v in g.vertices() if Fraction(g.degree(v)) <= 3 * q - 2 * delta}
    nx1 = set()
    for x in x1:
        nx1 |= set(g.neighbors(x))
    rest = set(g.vertices()) - x1 - nx1
    z1 = {v for v in rest if g.degree(v) >= delta - c}
    z2 = rest - z1
    return x1, nx1, z1, z2
