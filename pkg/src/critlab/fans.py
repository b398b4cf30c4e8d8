"""Tree structures grown from an uncolored edge: Vizing fans, Kierstead
paths, simple brooms, Tashkinov trees, and their elementarity checks.

Every structure is a sequence (y0, e1, y1, ..., ep, yp) whose vertices are
distinct and where each edge after e1 carries a color missing at an earlier
vertex of the sequence.  Growth is deterministic: smallest eligible color
first, then smallest vertex id, so failure witnesses reproduce exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coloring import PartialEdgeColoring, is_elementary
from .verdicts import LemmaVerdict

KINDS = ("vizing_fan", "kierstead_path", "simple_broom", "tashkinov_tree")


@dataclass(frozen=True)
class FanTree:
    kind: str
    vertices: tuple[int, ...]  # y0..yp
    edges: tuple[int, ...]     # e1..ep (edge ids; e1 is the uncolored edge)
    colors: tuple[int | None, ...]  # color of each ei under the source coloring

    @property
    def p(self) -> int:
        return len(self.edges)

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "edges": list(self.edges),
            "colors": list(self.colors),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


class MalformedTree(ValueError):
    pass


def _snapshot(phi: PartialEdgeColoring, kind: str, verts, edges) -> FanTree:
    return FanTree(kind, tuple(verts), tuple(edges), tuple(phi.color_of(e) for e in edges))


def validate_tree(phi: PartialEdgeColoring, t: FanTree) -> None:
    """Check the structural invariants of t's kind; raise MalformedTree."""
    g = phi.graph
    verts, edges = t.vertices, t.edges
    if t.kind not in KINDS:
        raise MalformedTree(f"unknown kind {t.kind}")
    if len(verts) != len(edges) + 1 or not edges:
        raise MalformedTree("sequence must be (y0, e1, y1, ..., ep, yp)")
    if len(set(verts)) != len(verts) or len(set(edges)) != len(edges):
        raise MalformedTree("vertices and edges must be distinct")
    if phi.is_colored(edges[0]):
        raise MalformedTree("e1 must be uncolored")
    if set(g.pair(edges[0])) != {verts[0], verts[1]}:
        raise MalformedTree("e1 must join y0 and y1")
    for i in range(2, len(verts)):
        e = edges[i - 1]
        u, v = g.pair(e)
        if v == verts[i]:
            r = u
        elif u == verts[i]:
            r = v
        else:
            raise MalformedTree(f"edge e{i} must end at y{i}")
        ri = verts.index(r)
        if ri >= i:
            raise MalformedTree(f"edge e{i} must start at an earlier vertex")
        c = phi.color_of(e)
        if c is None:
            raise MalformedTree(f"edge e{i} must be colored")
        if all(c not in phi.missing(verts[h]) for h in range(i)):
            raise MalformedTree(f"color of e{i} is missing at no earlier vertex")
        if t.kind == "vizing_fan" and ri != 0:
            raise MalformedTree("vizing fan edges must all leave y0")
        if t.kind == "kierstead_path" and ri != i - 1:
            raise MalformedTree("kierstead path edges must chain y(i-1) to yi")
        if t.kind == "simple_broom":
            want = 1 if i == 2 else 2
            if ri != want:
                raise MalformedTree("broom edges must be e2=y1y2 and ei=y2yi")
            if i >= 3:
                gam = phi.missing(verts[0]) | phi.missing(verts[1])
                if c not in gam:
                    raise MalformedTree("simple-broom leaf color must be missing at y0 or y1")


def build_vizing_fan(phi: PartialEdgeColoring, y0: int, y1: int) -> FanTree:
    """Greedy maximal fan centered at y0 over the uncolored edge y0y1:
    append a neighbor z of y0 whose spoke color is missing at the last fan
    vertex, smallest color first."""
    g = phi.graph
    e1 = g.edge_id(y0, y1)
    if phi.is_colored(e1):
        raise MalformedTree("edge y0y1 must be uncolored")
    verts = [y0, y1]
    edges = [e1]
    used = {y0, y1}
    while True:
        nxt = None
        for c in sorted(phi.missing(verts[-1])):
            e = phi.edge_at(y0, c)
            if e is None:
                continue
            u, v = g.pair(e)
            z = v if u == y0 else u
            if z not in used:
                nxt = (z, e)
                break
        if nxt is None:
            break
        verts.append(nxt[0])
        edges.append(nxt[1])
        used.add(nxt[0])
    return _snapshot(phi, "vizing_fan", verts, edges)


def fan_elementary(phi: PartialEdgeColoring, t: FanTree):
    return is_elementary(phi, t.vertices)


def enumerate_kierstead_paths(phi: PartialEdgeColoring, e1: int, max_edges: int = 3) -> list[FanTree]:
    """All Kierstead paths with at most max_edges edges extending e1, from
    both orientations of e1 (the bare one-edge path is listed once)."""
    g = phi.graph
    if phi.is_colored(e1):
        raise MalformedTree("e1 must be uncolored")
    a, b = g.pair(e1)
    out: list[FanTree] = []

    def grow(verts, edges):
        if len(edges) >= max_edges:
            return
        last = verts[-1]
        miss = set()
        for h in verts:
            miss |= phi.missing(h)
        for z in g.neighbors(last):
            if z in verts:
                continue
            e = g.edge_id(last, z)
            c = phi.color_of(e)
            if c is None or c not in miss:
                continue
            cur_v = verts + [z]
            cur_e = edges + [e]
            out.append(_snapshot(phi, "kierstead_path", cur_v, cur_e))
            grow(cur_v, cur_e)

    out.append(_snapshot(phi, "kierstead_path", [a, b], [e1]))
    grow([a, b], [e1])
    grow([b, a], [e1])
    return out


def check_p4(phi: PartialEdgeColoring, K: FanTree) -> list[LemmaVerdict]:
    """The four statements about a 4-vertex Kierstead path (y0,e1,y1,e2,y2,e3,y3):
    (1) y0, y1 have disjoint missing sets; (2) d(y2) < Delta forces V(K)
    elementary; (3) d(y1) < Delta likewise; (4) y3 misses at most one color
    of missing(y0) | missing(y1)."""
    validate_tree(phi, K)
    if K.kind != "kierstead_path" or len(K.vertices) != 4:
        raise MalformedTree("check_p4 needs a 4-vertex Kierstead path")
    g = phi.graph
    delta = g.delta
    y0, y1, y2, y3 = K.vertices
    scope = K.vertices
    verdicts = []

    shared = phi.missing(y0) & phi.missing(y1)
    verdicts.append(
        LemmaVerdict(
            "p4.1", not shared, True, scope,
            None if not shared else {"shared_colors": sorted(shared)},
        )
    )

    for item, hyp_vertex in (("p4.2", y2), ("p4.3", y1)):
        applicable = g.degree(hyp_vertex) < delta
        if applicable:
            ok, wit = is_elementary(phi, K.vertices)
            verdicts.append(
                LemmaVerdict(
                    item, ok, True, scope,
                    None if ok else {"pair": wit[:2], "shared_color": wit[2]},
                )
            )
        else:
            verdicts.append(LemmaVerdict(item, True, False, scope, None))

    gamma = phi.missing(y0) | phi.missing(y1)
    overlap = phi.missing(y3) & gamma
    verdicts.append(
        LemmaVerdict(
            "p4.4", len(overlap) <= 1, True, scope,
            None if len(overlap) <= 1 else {"overlap": sorted(overlap)},
        )
    )
    return verdicts


def enumerate_simple_brooms(phi: PartialEdgeColoring, e1: int, max_p: int | None = None) -> list[FanTree]:
    """Maximal simple brooms over e1, one per (orientation, y2) choice;
    every sub-broom of a listed broom is also a simple broom, so checking
    the maximal ones covers them all."""
    g = phi.graph
    if phi.is_colored(e1):
        raise MalformedTree("e1 must be uncolored")
    a, b = g.pair(e1)
    out = []
    for y0, y1 in ((a, b), (b, a)) if a != b else ((a, b),):
        gam = phi.missing(y0) | phi.missing(y1)
        for y2 in g.neighbors(y1):
            if y2 == y0:
                continue
            e2 = g.edge_id(y1, y2)
            c2 = phi.color_of(e2)
            if c2 is None or c2 not in gam:
                continue
            verts = [y0, y1, y2]
            edges = [e1, e2]
            for u in g.neighbors(y2):
                if max_p is not None and len(edges) >= max_p:
                    break
                if u in verts:
                    continue
                e = g.edge_id(y2, u)
                c = phi.color_of(e)
                if c is None or c not in gam:
                    continue
                verts.append(u)
                edges.append(e)
            out.append(_snapshot(phi, "simple_broom", verts, edges))
    return out


def check_broom(phi: PartialEdgeColoring, B: FanTree) -> LemmaVerdict:
    """Elementarity of a simple broom under the hypotheses that y0 and y1
    miss at least 4 colors in total and min(d(y1), d(y2)) < Delta; reported
    not-applicable when the hypotheses fail."""
    validate_tree(phi, B)
    if B.kind != "simple_broom" or len(B.vertices) < 3:
        raise MalformedTree("check_broom needs a simple broom with >= 3 vertices")
    g = phi.graph
    y0, y1, y2 = B.vertices[:3]
    gam = phi.missing(y0) | phi.missing(y1)
    applicable = len(gam) >= 4 and min(g.degree(y1), g.degree(y2)) < g.delta
    if not applicable:
        return LemmaVerdict("broom", True, False, B.vertices, {"gamma_size": len(gam)})
    ok, wit = is_elementary(phi, B.vertices)
    return LemmaVerdict(
        "broom", ok, True, B.vertices,
        None if ok else {"pair": wit[:2], "shared_color": wit[2]},
    )


def build_tashkinov_tree(phi: PartialEdgeColoring, e1: int) -> FanTree:
    """Greedy maximal Tashkinov tree from e1: repeatedly attach the colored
    boundary edge whose color is missing somewhere in the tree, choosing the
    smallest color, then the smallest attachment, then the smallest new vertex."""
    g = phi.graph
    if phi.is_colored(e1):
        raise MalformedTree("e1 must be uncolored")
    a, b = g.pair(e1)
    verts = [a, b] if a < b else [b, a]
    edges = [e1]
    inside = set(verts)
    miss = phi.missing(verts[0]) | phi.missing(verts[1])
    while True:
        best = None
        for r in verts:
            for z in g.neighbors(r):
                if z in inside:
                    continue
                e = g.edge_id(r, z)
                c = phi.color_of(e)
                if c is None or c not in miss:
                    continue
                key = (c, r, z)
                if best is None or key < best[0]:
                    best = (key, z, e)
        if best is None:
            break
        _, z, e = best
        verts.append(z)
        edges.append(e)
        inside.add(z)
        miss |= phi.missing(z)
    return _snapshot(phi, "tashkinov_tree", verts, edges)
