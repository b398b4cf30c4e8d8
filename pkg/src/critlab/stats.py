"""Degree-threshold neighbor statistics: sigma_q, its Woodall specialization,
and the p parameters that cap how far sigma can fall below its lemma bound.
"""

from __future__ import annotations

from .exactreal import ExactReal
from .graphs import Graph, GraphError


def _at_least(d: int, q, strict: bool) -> bool:
    # d >= q (or d > q) decided exactly; q may be int, Fraction or ExactReal.
    if isinstance(q, ExactReal):
        return (ExactReal(d) - q).sign() > 0 if strict else (ExactReal(d) - q).sign() >= 0
    return d > q if strict else d >= q


def sigma_q(g: Graph, x: int, y: int, q, strict: bool = False) -> int:
    """Number of neighbors of y other than x with degree >= q (or > q if strict)."""
    if not g.has_edge(x, y):
        raise GraphError(f"({x},{y}) is not an edge")
    return sum(1 for z in g.neighbors(y) if z != x and _at_least(g.degree(z), q, strict))


def sigma(g: Graph, x: int, y: int) -> int:
    """The specialization of sigma_q at q = 2*Delta - d(x) - d(y) + 2."""
    q = 2 * g.delta - g.degree(x) - g.degree(y) + 2
    return sigma_q(g, x, y, q)


def p_params(g: Graph, x: int) -> tuple[int, int]:
    """(p_min(x), p(x)): worst sigma slack over neighbors, capped at floor(d/2)-1."""
    d = g.degree(x)
    if d < 1:
        raise GraphError(f"vertex {x} has no neighbors")
    delta = g.delta
    p_min = min(sigma(g, x, y) for y in g.neighbors(x)) - delta + d - 1
    return p_min, min(p_min, d // 2 - 1)


def p_params_q(g: Graph, x: int, q) -> tuple[int, int]:
    """(p_min(x,q), p(x,q)): as p_params but for sigma_q, capped at floor(d/2)-3."""
    d = g.degree(x)
    if d < 1:
        raise GraphError(f"vertex {x} has no neighbors")
    delta = g.delta
    p_min = min(sigma_q(g, x, y, q) for y in g.neighbors(x)) - delta + d - 1
    return p_min, min(p_min, d // 2 - 3)
