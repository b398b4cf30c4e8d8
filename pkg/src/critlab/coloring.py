"""Proper partial edge colorings, Kempe chains and flips, dual colorings.

Colors are the integers 1..k.  A coloring is a single-owner mutable value:
clone before sharing.  All queries are read-only; the chain/flip/dual
operations return fresh colorings and leave their input untouched.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph, GraphError


class ColoringError(ValueError):
    """Improper assignment, bad color, or unsatisfied precondition."""


class StaleChainError(ColoringError):
    """The coloring changed since the chain was computed."""


class PartialEdgeColoring:
    """Assignment EdgeId -> color in 1..k (or none), proper at all times.

    Maintains per-vertex used-color bitmasks and a per-vertex
    "which edge carries color c" table for O(1) chain walking.
    """

    __slots__ = ("graph", "k", "_color", "_used", "_at", "uncolored")

    def __init__(self, graph: Graph, k: int):
        if k < 0:
            raise ColoringError("palette size must be nonnegative")
        self.graph = graph
        self.k = k
        size = max((e for e, _, _ in graph.edges()), default=-1) + 1
        self._color = [0] * size  # 0 = uncolored
        self._used = [0] * graph.n  # bit c set  <=>  color c present
        self._at = [[-1] * (k + 1) for _ in range(graph.n)]
        self.uncolored = set(graph.edge_ids())

    # -- queries -------------------------------------------------------------

    def color_of(self, e: int) -> int | None:
        c = self._color[e]
        return c if c else None

    def is_colored(self, e: int) -> bool:
        return self._color[e] != 0

    def used_colors(self, v: int) -> set[int]:
        mask = self._used[v]
        return {c for c in range(1, self.k + 1) if (mask >> c) & 1}

    def missing(self, v: int) -> set[int]:
        mask = self._used[v]
        return {c for c in range(1, self.k + 1) if not (mask >> c) & 1}

    def edge_at(self, v: int, c: int) -> int | None:
        e = self._at[v][c]
        return None if e == -1 else e

    def free_mask(self, v: int) -> int:
        full = ((1 << (self.k + 1)) - 1) & ~1
        return full & ~self._used[v]

    # -- mutation --------------------------------------------------------------

    def assign(self, e: int, c: int) -> None:
        if not 1 <= c <= self.k:
            raise ColoringError(f"color {c} outside 1..{self.k}")
        if self._color[e]:
            raise ColoringError(f"edge {e} already colored")
        u, v = self.graph.pair(e)
        if (self._used[u] >> c) & 1 or (self._used[v] >> c) & 1:
            raise ColoringError(f"color {c} already present at an endpoint of edge {e}")
        self._color[e] = c
        for w in (u, v):
            self._used[w] |= 1 << c
            self._at[w][c] = e
        self.uncolored.discard(e)

    def unassign(self, e: int) -> None:
        c = self._color[e]
        if not c:
            raise ColoringError(f"edge {e} not colored")
        u, v = self.graph.pair(e)
        self._color[e] = 0
        for w in (u, v):
            self._used[w] &= ~(1 << c)
            self._at[w][c] = -1
        self.uncolored.add(e)

    def clone(self) -> PartialEdgeColoring:
        other = PartialEdgeColoring.__new__(PartialEdgeColoring)
        other.graph = self.graph
        other.k = self.k
        other._color = self._color[:]
        other._used = self._used[:]
        other._at = [row[:] for row in self._at]
        other.uncolored = set(self.uncolored)
        return other

    # -- validation ---------------------------------------------------------------

    def is_proper(self) -> bool:
        seen: dict[tuple[int, int], int] = {}
        for e, u, v in self.graph.edges():
            c = self._color[e]
            if not c:
                continue
            if c > self.k:
                return False
            for w in (u, v):
                if (w, c) in seen:
                    return False
                seen[(w, c)] = e
        return True

    def check_consistency(self) -> None:
        """Recompute masks and tables from scratch; raise on any mismatch."""
        if not self.is_proper():
            raise ColoringError("coloring is not proper")
        used = [0] * self.graph.n
        at = [[-1] * (self.k + 1) for _ in range(self.graph.n)]
        unc = set()
        for e, u, v in self.graph.edges():
            c = self._color[e]
            if c:
                used[u] |= 1 << c
                used[v] |= 1 << c
                at[u][c] = e
                at[v][c] = e
            else:
                unc.add(e)
        if used != self._used or at != self._at or unc != self.uncolored:
            raise ColoringError("internal bookkeeping out of sync")

    # -- value semantics -------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PartialEdgeColoring):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.k == other.k
            and self._color == other._color
        )

    def __hash__(self):
        return hash((self.k, tuple(self._color)))

    def assignment(self) -> dict[int, int]:
        return {e: c for e, c in enumerate(self._color) if c}

    def to_json_obj(self) -> dict:
        edges = []
        for e, u, v in self.graph.edges():
            c = self._color[e]
            edges.append({"u": u, "v": v, "color": c if c else None})
        return {"k": self.k, "edges": edges}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    def __repr__(self):
        done = sum(1 for c in self._color if c)
        return f"PartialEdgeColoring(k={self.k}, colored={done}, uncolored={len(self.uncolored)})"


def total_coloring(graph: Graph, k: int, colors: dict[int, int]) -> PartialEdgeColoring:
    """Build a coloring from an explicit EdgeId -> color map."""
    phi = PartialEdgeColoring(graph, k)
    for e, c in colors.items():
        phi.assign(e, c)
    return phi


# -- spec operations ---------------------------------------------------------------


def missing_colors(phi: PartialEdgeColoring, v: int) -> set[int]:
    """The set of colors in 1..k absent at v."""
    return phi.missing(v)


@dataclass(frozen=True)
class KempeChain:
    """A connected component of E_alpha union E_beta: a path or even cycle.

    For paths, vertices run end to end (len(edges)+1 of them; a degenerate
    single-vertex chain has no edges).  For cycles, vertices has one entry
    per edge and the closing edge returns to vertices[0].
    """

    colors: tuple[int, int]
    kind: str  # "path" | "cycle"
    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    edge_colors: tuple[int, ...]  # snapshot for staleness detection

    @property
    def endpoints(self) -> tuple[int, ...]:
        return (self.vertices[0], self.vertices[-1]) if self.kind == "path" else ()

    def __len__(self):
        return len(self.edges)


def kempe_chain(phi: PartialEdgeColoring, v: int, alpha: int, beta: int) -> KempeChain:
    """The (alpha, beta)-chain through v; degenerate if v touches neither color."""
    if alpha == beta:
        raise ColoringError("chain colors must differ")
    for c in (alpha, beta):
        if not 1 <= c <= phi.k:
            raise ColoringError(f"color {c} outside 1..{phi.k}")

    def step(w: int, c: int) -> int | None:
        return phi.edge_at(w, c)

    if step(v, alpha) is None and step(v, beta) is None:
        return KempeChain((alpha, beta), "path", (), (v,), ())

    def walk(start: int, first: int):
        verts = [start]
        edges = []
        w, c = start, first
        while True:
            e = step(w, c)
            if e is None:
                return verts, edges, False
            edges.append(e)
            a, b = phi.graph.pair(e)
            w = b if a == w else a
            verts.append(w)
            if w == start and len(edges) >= 2:
                return verts, edges, True
            c = beta if c == alpha else alpha

    first = alpha if step(v, alpha) is not None else beta
    verts, edges, closed = walk(v, first)
    if closed:
        cyc_verts = tuple(verts[:-1])
        chain = KempeChain((alpha, beta), "cycle", tuple(edges), cyc_verts, ())
        return _normalize_cycle(phi, chain)
    other = beta if first == alpha else alpha
    if step(v, other) is not None:
        back_verts, back_edges, _ = walk(v, other)
        verts = list(reversed(back_verts)) + verts[1:]
        edges = list(reversed(back_edges)) + edges
    # canonical orientation: smaller endpoint first
    if verts[0] > verts[-1]:
        verts.reverse()
        edges.reverse()
    ecolors = tuple(phi.color_of(e) for e in edges)
    return KempeChain((alpha, beta), "path", tuple(edges), tuple(verts), ecolors)


def _normalize_cycle(phi: PartialEdgeColoring, chain: KempeChain) -> KempeChain:
    verts = list(chain.vertices)
    edges = list(chain.edges)
    n = len(verts)
    i = verts.index(min(verts))
    verts = verts[i:] + verts[:i]
    edges = edges[i:] + edges[:i]
    # prefer the rotation direction with the smaller second vertex
    if n > 2 and verts[1] > verts[-1]:
        verts = [verts[0]] + verts[:0:-1]
        edges = edges[::-1]
    ecolors = tuple(phi.color_of(e) for e in edges)
    return KempeChain(chain.colors, "cycle", tuple(edges), tuple(verts), ecolors)


def kempe_flip(phi: PartialEdgeColoring, chain: KempeChain) -> PartialEdgeColoring:
    """Swap the chain's two colors along its edges; returns a new coloring."""
    alpha, beta = chain.colors
    for e, c in zip(chain.edges, chain.edge_colors):
        if phi.color_of(e) != c:
            raise StaleChainError(
                f"edge {e} no longer carries color {c}; recompute the chain"
            )
    out = phi.clone()
    for e in chain.edges:
        out.unassign(e)
    for e, c in zip(chain.edges, chain.edge_colors):
        out.assign(e, beta if c == alpha else alpha)
    return out


def dual_coloring(phi: PartialEdgeColoring, x: int, y: int, z: int) -> PartialEdgeColoring:
    """From a coloring of G-xy to one of G-xz: xy takes xz's color, xz is freed.

    Requires xz colored, xy uncolored, and the color of xz missing at y.
    """
    g = phi.graph
    exy = g.edge_id(x, y)
    exz = g.edge_id(x, z)
    if phi.is_colored(exy):
        raise ColoringError("edge xy must be the uncolored edge")
    c = phi.color_of(exz)
    if c is None:
        raise ColoringError("edge xz must be colored")
    if c not in phi.missing(y):
        raise ColoringError(f"color {c} of xz is not missing at y={y}")
    out = phi.clone()
    out.unassign(exz)
    out.assign(exy, c)
    return out


def is_elementary(phi: PartialEdgeColoring, X) -> tuple[bool, tuple[int, int, int] | None]:
    """Are the missing sets of X pairwise disjoint?  Witness: (u, v, shared color)."""
    verts = sorted(set(X))
    seen: dict[int, int] = {}
    for v in verts:
        for c in sorted(phi.missing(v)):
            if c in seen:
                return False, (seen[c], v, c)
            seen[c] = v
    return True, None
