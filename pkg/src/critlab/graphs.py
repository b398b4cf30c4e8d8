"""Simple undirected graphs with stable vertex and edge identifiers.

Vertices are the dense integers 0..n-1.  Edge identifiers are assigned in
input order and never reused: deleting an edge leaves a hole, so ids of the
surviving edges are stable across deletions.  Graph values are immutable
after construction and safe to share between threads.
"""

from __future__ import annotations

import math
from fractions import Fraction


class GraphError(ValueError):
    """Raised for malformed graph constructions or unknown identifiers."""


class Graph:
    """An immutable simple graph (no loops, no parallel edges)."""

    __slots__ = ("n", "_pairs", "_adj", "_deg", "_ids")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        self.n = n
        pairs: list[tuple[int, int] | None] = []
        ids: dict[tuple[int, int], int] = {}
        adj: list[set[int]] = [set() for _ in range(n)]
        for uv in edges:
            if uv is None:        # hole left by a deleted edge
                pairs.append(None)
                continue
            u, v = uv
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in ids:
                raise GraphError(f"parallel edge ({u},{v})")
            ids[(u, v)] = len(pairs)
            pairs.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
        self._pairs = tuple(pairs)
        self._ids = ids
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._deg = tuple(len(s) for s in adj)

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._ids)

    @property
    def delta(self) -> int:
        return max(self._deg, default=0)

    def degree(self, v: int) -> int:
        return self._deg[v]

    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def vertices(self) -> range:
        return range(self.n)

    def edge_ids(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self._pairs) if p is not None)

    def edges(self):
        """Yield (edge_id, u, v) for every live edge, ascending by id."""
        for i, p in enumerate(self._pairs):
            if p is not None:
                yield i, p[0], p[1]

    def pair(self, e: int) -> tuple[int, int]:
        if not (0 <= e < len(self._pairs)) or self._pairs[e] is None:
            raise GraphError(f"unknown edge id {e}")
        return self._pairs[e]

    def edge_id(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._ids[(u, v)]
        except KeyError:
            raise GraphError(f"no edge ({u},{v})") from None

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._ids

    def pairs(self) -> list[tuple[int, int]]:
        """Live edge endpoint pairs, ascending by edge id."""
        return [p for p in self._pairs if p is not None]

    def average_degree(self) -> Fraction:
        if self.n == 0:
            return Fraction(0)
        return Fraction(2 * self.m, self.n)

    # -- edits (return new graphs) ---------------------------------------

    def delete_edge(self, e: int) -> Graph:
        """G - e.  Surviving edges keep their ids; the vertex set is unchanged."""
        self.pair(e)  # validates
        return Graph(self.n, (p if i != e else None for i, p in enumerate(self._pairs)))

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph(self.n, list(self._pairs) + [(u, v)])

    # -- global structure -------------------------------------------------

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        stack.append(w)
            out.append(sorted(comp))
        return out

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        # Identity of the edge *set*; edge-id layout is not part of equality.
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._ids.keys() == other._ids.keys()

    def __hash__(self):
        return hash((self.n, frozenset(self._ids)))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- standard constructors --------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least 1 vertex")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    if leaves < 0:
        raise GraphError("star needs a nonnegative number of leaves")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def woodall_example(delta: int, k: int) -> Graph:
    """The low-degree-vertex example with average degree exactly (2/3)(delta+2).

    k vertices of degree 4 (set A, ids 0..k-1) whose neighbors all have
    degree delta, and 2k vertices of degree delta (set B, ids k..3k-1),
    each adjacent to exactly two A-vertices and delta-2 B-vertices.

    Wiring: B sits on a cycle; A-vertex i is attached to the B-index block
    {4i, 4i+1, 4i+2, 4i+3} mod 2k, covering every B-index exactly twice;
    B-B edges form a circulant of degree delta-2 (offsets 1..(delta-2)//2,
    plus the antipode k when delta-2 is odd).  Triangle-freeness is not
    guaranteed by this wiring.
    """
    if delta < 6:
        raise GraphError("woodall_example requires delta >= 6")
    k_min = max(2, math.ceil((delta - 1) / 2))
    if k < k_min:
        raise GraphError(
            f"woodall_example requires k >= {k_min} for delta={delta}: "
            f"a ({delta - 2})-regular circulant on 2k={2 * k} vertices needs "
            f"2k-1 >= {delta - 2}, and the A-blocks need 2k >= 4"
        )
    b = 2 * k
    edges: list[tuple[int, int]] = []
    for i in range(k):
        for j in range(4):
            edges.append((i, k + (4 * i + j) % b))
    # offsets stay below b/2, so each scan emits every circulant edge once
    for off in range(1, (delta - 2) // 2 + 1):
        for i in range(b):
            edges.append((k + i, k + (i + off) % b))
    if (delta - 2) % 2 == 1:
        for i in range(k):
            edges.append((k + i, k + i + k))
    return Graph(3 * k, edges)
