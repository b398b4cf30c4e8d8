"""Exhaustive corpus of pairwise non-isomorphic small graphs.

Graphs are generated by vertex augmentation with canonical-form dedup: the
canonical code is the lexicographically smallest row-by-row adjacency
encoding over all vertex orderings that respect the iterated
degree-refinement classes.  The known counts (1, 2, 4, 11, 34, 156, 1044,
12346 graphs on 1..8 vertices; 853 and 11117 connected on 7 and 8) pin the
generator down in tests.
"""

from __future__ import annotations

import os

from critlab.graph6 import write_graph6
from critlab.graphs import Graph

CACHE_DIR = os.path.join(os.path.dirname(__file__), "_cache")

GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def refinement_classes(n: int, adj: tuple[int, ...]) -> list[int]:
    """Iterated neighborhood refinement; returns canonical class ids."""
    color = [0] * n
    while True:
        sig = []
        for v in range(n):
            nb = adj[v]
            nbc = []
            w = 0
            while nb:
                if nb & 1:
                    nbc.append(color[w])
                nb >>= 1
                w += 1
            sig.append((color[v], tuple(sorted(nbc))))
        keys = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [keys[s] for s in sig]
        if new == color:
            return color
        color = new


def canonical_code(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically smallest (row_1, ..., row_{n-1}) adjacency encoding
    over refinement-class-respecting orderings; a complete isomorphism
    invariant."""
    if n == 0:
        return ()
    color = refinement_classes(n, adj)
    by_class: dict[int, list[int]] = {}
    for v, c in enumerate(color):
        by_class.setdefault(c, []).append(v)
    position_class = []
    for c in sorted(by_class):
        position_class.extend([c] * len(by_class[c]))

    best: list[int] | None = None
    perm = [0] * n
    used = [False] * n

    def rec(pos: int, rows: list[int]):
        nonlocal best
        if pos == n:
            if best is None or rows < best:
                best = rows[:]
            return
        for v in by_class[position_class[pos]]:
            if used[v]:
                continue
            av = adj[v]
            bits = 0
            for i in range(pos):
                bits = (bits << 1) | ((av >> perm[i]) & 1)
            rows.append(bits)
            # prune branches whose prefix already exceeds the best code
            if best is None or rows <= best[: pos + 1]:
                used[v] = True
                perm[pos] = v
                rec(pos + 1, rows)
                used[v] = False
            rows.pop()

    rec(0, [])
    assert best is not None
    return tuple(best[1:])  # row 0 is always empty


def code_to_adj(n: int, code: tuple[int, ...]) -> tuple[int, ...]:
    adj = [0] * n
    for j in range(1, n):
        row = code[j - 1]
        for i in range(j):
            if (row >> (j - 1 - i)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return tuple(adj)


def adj_to_graph(n: int, adj: tuple[int, ...]) -> Graph:
    edges = []
    for u in range(n):
        nb = adj[u] >> (u + 1)
        w = u + 1
        while nb:
            if nb & 1:
                edges.append((u, w))
            nb >>= 1
            w += 1
    return Graph(n, edges)


def all_graphs(n: int) -> list[tuple[int, ...]]:
    """Canonical codes of all graphs on exactly n vertices."""
    if n < 1:
        return []
    level: set[tuple[int, ...]] = {()}  # the 1-vertex graph
    for size in range(2, n + 1):
        nxt: set[tuple[int, ...]] = set()
        for code in level:
            adj = code_to_adj(size - 1, code)
            for mask in range(1 << (size - 1)):
                child = tuple(
                    (adj[v] | (1 << (size - 1)) if (mask >> v) & 1 else adj[v])
                    for v in range(size - 1)
                ) + (mask,)
                nxt.add(canonical_code(size, child))
        level = nxt
    return sorted(level)


def is_connected_adj(n: int, adj: tuple[int, ...]) -> bool:
    if n <= 1:
        return True
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        nb = adj[u] & ~seen
        w = 0
        while nb:
            if nb & 1:
                seen |= 1 << w
                stack.append(w)
            nb >>= 1
            w += 1
    return seen == (1 << n) - 1


def _cache_path(name: str) -> str:
    os.makedirs(CACHE_DIR, exist_ok=True)
    return os.path.join(CACHE_DIR, name)


def graphs_g6(n: int, connected: bool = False) -> list[str]:
    """graph6 lines of all (optionally connected) graphs on n vertices,
    cached on disk after the first generation."""
    tag = "conn" if connected else "all"
    cache = _cache_path(f"graphs_{tag}_{n}.g6")
    if os.path.exists(cache):
        with open(cache, "r", encoding="ascii") as fh:
            return [line.strip() for line in fh if line.strip()]
    out = []
    for code in all_graphs(n):
        adj = code_to_adj(n, code)
        if connected and not is_connected_adj(n, adj):
            continue
        out.append(write_graph6(adj_to_graph(n, adj)))
    with open(cache, "w", encoding="ascii") as fh:
        fh.write("\n".join(out) + "\n")
    return out


def graphs_up_to(n: int, connected: bool = False) -> list[str]:
    lines: list[str] = []
    for size in range(1, n + 1):
        lines.extend(graphs_g6(size, connected))
    return lines
