"""Exact chromatic-index decisions, constructive (Delta+1)-coloring, and
edge-criticality tests.

"no" answers come from exhausted search; running out of budget is a third,
explicit outcome and is never treated as "no".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _kernel
from .coloring import PartialEdgeColoring, total_coloring
from .graphs import Graph


class BudgetExhausted(RuntimeError):
    """A solve hit its node or wall limit before reaching a verdict."""

    def __init__(self, message: str, progress=None):
        super().__init__(message)
        self.progress = progress


@dataclass(frozen=True)
class SolveBudget:
    node_limit: int | None = None
    wall_limit: float | None = None

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.wall_limit is not None and self.wall_limit <= 0:
            raise ValueError("wall_limit must be positive")


NO_BUDGET = SolveBudget()


@dataclass(frozen=True)
class Decision:
    """Outcome of a k-colorability decision."""

    status: str  # "yes" | "no" | "budget"
    coloring: dict[int, int] | None  # EdgeId -> color, for "yes"
    nodes: int

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"

    @property
    def is_no(self) -> bool:
        return self.status == "no"


def is_k_edge_colorable(g: Graph, k: int, budget: SolveBudget = NO_BUDGET) -> Decision:
    """Exact decision; a "yes" carries a re-validated total k-coloring."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    ids = g.edge_ids()
    pairs = [g.pair(e) for e in ids]
    status, colors, nodes = _kernel.solve(
        g.n,
        pairs,
        k,
        node_limit=budget.node_limit or 0,
        wall_limit=budget.wall_limit or 0.0,
    )
    if status == _kernel.YES:
        mapping = dict(zip(ids, colors))
        phi = total_coloring(g, k, mapping)
        if not phi.is_proper():
            raise AssertionError("kernel returned an improper coloring")
        return Decision("yes", mapping, nodes)
    if status == _kernel.NO:
        return Decision("no", None, nodes)
    return Decision("budget", None, nodes)


def chromatic_index(g: Graph, budget: SolveBudget = NO_BUDGET) -> int:
    """Delta or Delta+1 (0 for an edgeless graph); raises BudgetExhausted."""
    if g.m == 0:
        return 0
    d = is_k_edge_colorable(g, g.delta, budget)
    if d.status == "budget":
        raise BudgetExhausted(f"chromatic_index undecided after {d.nodes} nodes")
    return g.delta if d.is_yes else g.delta + 1


def color_minus_edge(
    g: Graph, e: int, k: int, budget: SolveBudget = NO_BUDGET
) -> PartialEdgeColoring | None:
    """A proper k-coloring of G-e, materialized over G with e uncolored.

    Returns None when no such coloring exists; raises BudgetExhausted on a
    blown budget.
    """
    ids = [i for i in g.edge_ids() if i != e]
    pairs = [g.pair(i) for i in ids]
    status, colors, nodes = _kernel.solve(
        g.n,
        pairs,
        k,
        node_limit=budget.node_limit or 0,
        wall_limit=budget.wall_limit or 0.0,
    )
    if status == _kernel.BUDGET:
        raise BudgetExhausted(f"coloring of G-e undecided after {nodes} nodes")
    if status == _kernel.NO:
        return None
    phi = PartialEdgeColoring(g, k)
    for i, c in zip(ids, colors):
        phi.assign(i, c)
    return phi


def enumerate_k_edge_colorings(
    g: Graph,
    k: int,
    skip_edge: int | None = None,
    up_to_symmetry: bool = True,
    limit: int | None = None,
):
    """Yield every proper total k-coloring of g (skip_edge left uncolored).

    With up_to_symmetry, one representative per palette-permutation orbit is
    produced (colors appear in first-use order), which is lossless for any
    color-name-invariant predicate.  Deterministic order.
    """
    ids = [e for e in g.edge_ids() if e != skip_edge]
    pairs = [g.pair(e) for e in ids]
    m = len(pairs)
    free = [(1 << k) - 1 for _ in range(g.n)]
    col = [-1] * m
    found = 0

    def materialize():
        phi = PartialEdgeColoring(g, k)
        for e, c in zip(ids, col):
            phi.assign(e, c + 1)
        return phi

    def rec(done, maxc):
        nonlocal found
        if limit is not None and found >= limit:
            return
        if done == m:
            found += 1
            yield materialize()
            return
        best, best_cnt = -1, k + 1
        for i in range(m):
            if col[i] >= 0:
                continue
            u, v = pairs[i]
            cnt = (free[u] & free[v]).bit_count()
            if cnt < best_cnt:
                best, best_cnt = i, cnt
                if cnt == 0:
                    return
        u, v = pairs[best]
        cand = free[u] & free[v]
        if up_to_symmetry:
            cand &= (1 << min(k, maxc + 2)) - 1
        while cand:
            bit = cand & -cand
            cand ^= bit
            c = bit.bit_length() - 1
            col[best] = c
            free[u] &= ~bit
            free[v] &= ~bit
            yield from rec(done + 1, max(maxc, c))
            col[best] = -1
            free[u] |= bit
            free[v] |= bit

    yield from rec(0, -1)


# -- Vizing's constructive algorithm ------------------------------------------------


def vizing_color(g: Graph) -> PartialEdgeColoring:
    """A proper total (Delta+1)-coloring built by fan rotation plus at most
    one Kempe flip per edge insertion (Misra-Gries scheme)."""
    phi = PartialEdgeColoring(g, g.delta + 1)
    for e, x, y in g.edges():
        _insert(phi, e, x, y)
    if not phi.is_proper() or phi.uncolored:
        raise AssertionError("vizing_color produced an invalid coloring")
    return phi


def _lowest(mask: int) -> int:
    return ((mask & -mask).bit_length()) - 1


def _insert(phi: PartialEdgeColoring, e: int, x: int, y: int) -> None:
    g = phi.graph
    # maximal fan at x starting from y: next spoke's color is missing at the
    # previous fan vertex; deterministic (smallest color first)
    fan = [y]
    fan_edges = [e]
    in_fan = {y}
    while True:
        fm = phi.free_mask(fan[-1])
        nxt = None
        while fm:
            c = _lowest(fm)
            fm &= fm - 1
            e2 = phi.edge_at(x, c)
            if e2 is not None:
                a, b = g.pair(e2)
                z = b if a == x else a
                if z not in in_fan:
                    nxt = (z, e2)
                    break
        if nxt is None:
            break
        fan.append(nxt[0])
        fan_edges.append(nxt[1])
        in_fan.add(nxt[0])

    cx = _lowest(phi.free_mask(x))
    d = _lowest(phi.free_mask(fan[-1]))
    # invert the (cx, d) path from x (no-op when x already misses d)
    _invert_path(phi, x, d, cx)
    # w: first fan vertex missing d whose prefix is still a fan after the
    # inversion; such a w always exists (Misra-Gries)
    w = None
    for i, z in enumerate(fan):
        if i > 0:
            c = phi.color_of(fan_edges[i])
            if not (phi.free_mask(fan[i - 1]) >> c) & 1:
                break  # prefix fan property lost; no valid w beyond here
        if (phi.free_mask(z) >> d) & 1:
            w = i
            break
    assert w is not None, "Vizing fan invariant violated"
    for i in range(1, w + 1):
        c = phi.color_of(fan_edges[i])
        phi.unassign(fan_edges[i])
        phi.assign(fan_edges[i - 1], c)
    phi.assign(fan_edges[w], d)


def _invert_path(phi: PartialEdgeColoring, x: int, d: int, cx: int) -> None:
    """Swap colors d and cx along the maximal path from x starting with d."""
    path = []
    w, c = x, d
    while True:
        e = phi.edge_at(w, c)
        if e is None:
            break
        path.append(e)
        a, b = phi.graph.pair(e)
        w = b if a == w else a
        c = cx if c == d else d
    olds = [phi.color_of(e) for e in path]
    for e in path:
        phi.unassign(e)
    for e, c0 in zip(path, olds):
        phi.assign(e, cx if c0 == d else d)


# -- criticality ---------------------------------------------------------------------


@dataclass(frozen=True)
class CriticalityVerdict:
    chi_prime: int
    is_critical: bool
    witness: dict = field(default_factory=dict)
    nodes: int = 0


def is_critical_edge(g: Graph, e: int, budget: SolveBudget = NO_BUDGET) -> bool:
    """Does deleting e drop the chromatic index?  Exact per definition."""
    chi = chromatic_index(g, budget)
    if chi <= g.delta:
        return False  # class one: chi' cannot drop below Delta via edge deletion
    d = is_k_edge_colorable(g.delete_edge(e), g.delta, budget)
    if d.status == "budget":
        raise BudgetExhausted("criticality of edge undecided")
    return d.is_yes


def is_edge_delta_critical(g: Graph, budget: SolveBudget = NO_BUDGET) -> CriticalityVerdict:
    """Class two and every edge critical; short-circuits on the first
    non-critical edge and uses connectivity as a pre-filter."""
    if g.m == 0:
        raise ValueError("criticality needs at least one edge")
    total_nodes = 0
    d = is_k_edge_colorable(g, g.delta, budget)
    total_nodes += d.nodes
    if d.status == "budget":
        raise BudgetExhausted(f"class undecided after {total_nodes} nodes")
    if d.is_yes:
        return CriticalityVerdict(g.delta, False, {"delta_coloring": d.coloring}, total_nodes)
    chi = g.delta + 1
    if not g.is_connected():
        # an edge-Delta-critical graph is connected
        return CriticalityVerdict(
            chi, False, {"disconnected": [len(c) for c in g.components()]}, total_nodes
        )
    certificates = {}
    for e in g.edge_ids():
        de = is_k_edge_colorable(g.delete_edge(e), g.delta, budget)
        total_nodes += de.nodes
        if de.status == "budget":
            raise BudgetExhausted(
                f"criticality undecided at edge {e}",
                progress={"checked": sorted(certificates), "nodes": total_nodes},
            )
        if de.is_no:
            return CriticalityVerdict(chi, False, {"non_critical_edge": e}, total_nodes)
        certificates[e] = de.coloring
    return CriticalityVerdict(chi, True, {"per_edge_colorings": certificates}, total_nodes)
