"""Executable adjacency-lemma predicates and the non-criticality pruner.

Each checker evaluates, over its full quantifier range, an inequality that
is a theorem for edge-Delta-critical graphs; a failing instance therefore
certifies non-criticality.  The checkers never assume criticality: on
arbitrary graphs they simply report where the inequality breaks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .coloring import PartialEdgeColoring, kempe_chain, kempe_flip
from .discharge import claim4_report
from .exactreal import as_exact, exact_floor_div
from .fans import check_broom, check_p4, enumerate_kierstead_paths, enumerate_simple_brooms
from .graphs import Graph
from .solver import NO_BUDGET, BudgetExhausted, SolveBudget, color_minus_edge
from .stats import p_params, p_params_q, sigma, sigma_q
from .verdicts import LemmaVerdict, NonCriticalityCertificate


def check_val(g: Graph) -> LemmaVerdict:
    """Vizing's Adjacency Lemma: every edge xy has at least Delta-d(x)+1
    Delta-degree neighbors of y besides x."""
    delta = g.delta
    for _, u, v in g.edges():
        for x, y in ((u, v), (v, u)):
            have = sigma_q(g, x, y, delta)
            need = delta - g.degree(x) + 1
            if have < need:
                return LemmaVerdict(
                    "val", False, True, (x, y),
                    {"sigma_delta": have, "required": need},
                )
    return LemmaVerdict("val", True)


def check_w22(g: Graph) -> LemmaVerdict:
    """For every edge xy, at least Delta-sigma(x,y) vertices z in N(x)-y
    satisfy sigma(x,z) >= 2*Delta-d(x)-sigma(x,y)."""
    delta = g.delta
    for _, u, v in g.edges():
        for x, y in ((u, v), (v, u)):
            s_xy = sigma(g, x, y)
            need = delta - s_xy
            thr = 2 * delta - g.degree(x) - s_xy
            have = sum(1 for z in g.neighbors(x) if z != y and sigma(g, x, z) >= thr)
            if have < need:
                return LemmaVerdict(
                    "w22", False, True, (x, y),
                    {"sigma_xy": s_xy, "required": need, "have": have, "threshold": thr},
                )
    return LemmaVerdict("w22", True)


def check_w23(g: Graph) -> LemmaVerdict:
    """Every vertex x has at least d(x)-p(x)-1 neighbors y with
    sigma(x,y) >= Delta-p(x)-1."""
    delta = g.delta
    for x in g.vertices():
        if g.degree(x) == 0:
            continue
        _, p = p_params(g, x)
        need = g.degree(x) - p - 1
        thr = delta - p - 1
        have = sum(1 for y in g.neighbors(x) if sigma(g, x, y) >= thr)
        if have < need:
            return LemmaVerdict(
                "w23", False, True, (x,),
                {"p": p, "required": need, "have": have, "threshold": thr},
            )
    return LemmaVerdict("w23", True)


def _in_window(g: Graph, x: int, q) -> bool:
    # Delta/2 < q <= Delta - d(x)/2 - 2, decided exactly
    qe = as_exact(q)
    half_delta = Fraction(g.delta, 2)
    upper = g.delta - Fraction(g.degree(x), 2) - 2
    return (qe - half_delta).sign() > 0 and (qe - upper).sign() <= 0


def check_ppp(g: Graph, q, strict: bool = False) -> LemmaVerdict:
    """For edges xy whose x-side falls in the q-window, at least
    Delta-sigma_q(x,y)-2 vertices z in N(x)-y satisfy
    sigma_q(x,z) >= 2*Delta-d(x)-sigma_q(x,y)-4."""
    delta = g.delta
    applicable = 0
    skipped = 0
    for _, u, v in g.edges():
        for x, y in ((u, v), (v, u)):
            if not _in_window(g, x, q):
                skipped += 1
                continue
            applicable += 1
            s_xy = sigma_q(g, x, y, q, strict)
            need = delta - s_xy - 2
            thr = 2 * delta - g.degree(x) - s_xy - 4
            have = sum(
                1 for z in g.neighbors(x) if z != y and sigma_q(g, x, z, q, strict) >= thr
            )
            if have < need:
                return LemmaVerdict(
                    "ppp", False, True, (x, y),
                    {"sigma_q_xy": s_xy, "required": need, "have": have,
                     "threshold": thr, "q": str(q)},
                )
    return LemmaVerdict(
        "ppp", True, applicable > 0, None,
        {"applicable_pairs": applicable, "skipped_pairs": skipped},
    )


def check_pp(g: Graph, q, strict: bool = False) -> LemmaVerdict:
    """For vertices x in the q-window, at least d(x)-p(x,q)-3 neighbors y
    satisfy sigma_q(x,y) >= Delta-p(x,q)-5."""
    delta = g.delta
    applicable = 0
    skipped = 0
    for x in g.vertices():
        if g.degree(x) == 0 or not _in_window(g, x, q):
            skipped += 1
            continue
        applicable += 1
        _, p = p_params_q(g, x, q)
        need = g.degree(x) - p - 3
        thr = delta - p - 5
        have = sum(1 for y in g.neighbors(x) if sigma_q(g, x, y, q, strict) >= thr)
        if have < need:
            return LemmaVerdict(
                "pp", False, True, (x,),
                {"p_q": p, "required": need, "have": have, "threshold": thr, "q": str(q)},
            )
    return LemmaVerdict(
        "pp", True, applicable > 0, None,
        {"applicable_vertices": applicable, "skipped_vertices": skipped},
    )


def check_lemfact(phi: PartialEdgeColoring, x: int, y: int, q) -> list[LemmaVerdict]:
    """The three inequalities tying Z = {z in N(x)-y : d(z) > q,
    phi(xz) missing at y} to the degree profile around the uncolored edge xy.

    Preconditions d(x) < q <= Delta-1 are reported as not-applicable.
    Floors are mathematical floors (toward minus infinity), evaluated
    exactly even for irrational q.
    """
    g = phi.graph
    delta = g.delta
    e1 = g.edge_id(x, y)
    if phi.is_colored(e1):
        raise ValueError("xy must be the uncolored edge of phi")
    qe = as_exact(q)
    dx, dy = g.degree(x), g.degree(y)
    scope = (x, y)
    if not ((qe - dx).sign() > 0 and (qe - (delta - 1)).sign() <= 0):
        na = {"q": str(q), "reason": "q outside (d(x), Delta-1]"}
        return [LemmaVerdict(f"lemfact.{i}", True, False, scope, na) for i in (1, 2, 3)]

    miss_y = phi.missing(y)
    zset = []
    for z in g.neighbors(x):
        if z == y:
            continue
        c = phi.color_of(g.edge_id(x, z))
        if c in miss_y and (as_exact(g.degree(z)) - qe).sign() > 0:
            zset.append(z)

    gap = delta - qe  # positive since q <= Delta-1
    out = []

    need1 = delta - dy + 1 - exact_floor_div(dx + dy - delta - 2, gap)
    out.append(
        LemmaVerdict(
            "lemfact.1", len(zset) >= need1, True, scope,
            {"Z": zset, "required": need1, "q": str(q)} if len(zset) < need1 else None,
        )
    )

    total = as_exact(0)
    for z in zset:
        total = total + (as_exact(g.degree(z)) - qe)
    rhs = (delta - dy + 1) * gap - dx - dy + delta + 2
    ok2 = (total - rhs).sign() >= 0
    out.append(
        LemmaVerdict(
            "lemfact.2", ok2, True, scope,
            None if ok2 else {"Z": zset, "surplus": str(total), "required": str(rhs), "q": str(q)},
        )
    )

    bad = None
    for z in zset:
        need3 = 2 * delta - dx - dy + 1 - exact_floor_div(dx + dy + g.degree(z) - 2 * delta - 2, gap)
        have = sigma_q(g, x, z, q)
        if have < need3:
            bad = {"z": z, "sigma_q": have, "required": need3, "q": str(q)}
            break
    out.append(LemmaVerdict("lemfact.3", bad is None, True, scope, bad))
    return out


# -- the pruning cascade ------------------------------------------------------


@dataclass
class PruneResult:
    certificate: NonCriticalityCertificate | None
    stages: list[tuple[str, str]] = field(default_factory=list)
    inconclusive: bool = True
    budget_exhausted: bool = False

    @property
    def pruned(self) -> bool:
        return self.certificate is not None


def _perturbations(phi: PartialEdgeColoring, count: int, rng: random.Random):
    """phi plus up to count proper colorings reachable by random Kempe flips."""
    out = [phi]
    seen = {hash(phi)}
    cur = phi
    attempts = 0
    while len(out) < count + 1 and attempts < 8 * (count + 1):
        attempts += 1
        v = rng.randrange(phi.graph.n)
        a = rng.randint(1, phi.k)
        b = rng.randint(1, phi.k)
        if a == b:
            continue
        chain = kempe_chain(cur, v, a, b)
        if not chain.edges:
            continue
        cur = kempe_flip(cur, chain)
        if hash(cur) not in seen:
            seen.add(hash(cur))
            out.append(cur)
    return out


def prune(
    g: Graph,
    budget: SolveBudget = NO_BUDGET,
    edge_samples: int | None = None,
    coloring_samples: int = 4,
    flip_samples: int = 8,
    claim4: bool = False,
    seed: int = 0,
) -> PruneResult:
    """Cheap-to-expensive cascade of non-criticality probes.

    Stages: (a) connectivity and the per-edge degree-sum bound, (b) VAL,
    (c) the two Woodall counting lemmas, (d) coloring-dependent probes on
    sampled edges (Kierstead-path items 1 and 4, brooms, the three
    Z-inequalities, and, behind the claim4 flag for Delta >= 6, the
    Y2-partition inequality).  A certificate is sound evidence of
    non-criticality; None is inconclusive, never a criticality proof.
    """
    res = PruneResult(None)
    delta = g.delta
    if g.m == 0:
        raise ValueError("prune needs at least one edge")

    # stage a: structure
    if not g.is_connected():
        res.certificate = NonCriticalityCertificate(
            "disconnected", "a", "critical graphs are connected",
            data={"components": [len(c) for c in g.components()]},
        )
        res.stages.append(("a", "certificate"))
        res.inconclusive = False
        return res
    for _, u, v in g.edges():
        if g.degree(u) + g.degree(v) < delta + 2:
            res.certificate = NonCriticalityCertificate(
                "degree-sum", "a", "every edge of a critical graph has d(x)+d(y) >= Delta+2",
                edge=(u, v), data={"d_u": g.degree(u), "d_v": g.degree(v), "delta": delta},
            )
            res.stages.append(("a", "certificate"))
            res.inconclusive = False
            return res
    res.stages.append(("a", "pass"))

    # stage b: VAL
    vd = check_val(g)
    if not vd.holds:
        res.certificate = NonCriticalityCertificate(
            "VAL", "b", "Vizing's Adjacency Lemma fails", edge=vd.scope, data=vd.witness or {},
        )
        res.stages.append(("b", "certificate"))
        res.inconclusive = False
        return res
    res.stages.append(("b", "pass"))

    # stage c: Woodall counting lemmas
    for name, verdict in (("w22", check_w22(g)), ("w23", check_w23(g))):
        if not verdict.holds:
            res.certificate = NonCriticalityCertificate(
                name, "c", f"{name} counting lemma fails",
                edge=verdict.scope if len(verdict.scope or ()) == 2 else None,
                data=verdict.witness or {},
            )
            res.stages.append(("c", "certificate"))
            res.inconclusive = False
            return res
    res.stages.append(("c", "pass"))

    # stage d: coloring-dependent probes
    rng = random.Random(seed)
    edge_ids = list(g.edge_ids())
    if edge_samples is not None and edge_samples < len(edge_ids):
        edge_ids = sorted(rng.sample(edge_ids, edge_samples))
    solved_any = False
    for e in edge_ids:
        try:
            phi0 = color_minus_edge(g, e, delta, budget)
        except BudgetExhausted:
            res.budget_exhausted = True
            continue
        if phi0 is None:
            continue  # no Delta-coloring of G-e at this edge; probe elsewhere
        solved_any = True
        colorings = _perturbations(phi0, min(coloring_samples - 1, flip_samples), rng)
        for phi in colorings:
            cert = _probe_coloring(g, phi, e, claim4)
            if cert is not None:
                res.certificate = cert
                res.stages.append(("d", "certificate"))
                res.inconclusive = False
                return res
    res.stages.append(("d", "pass" if solved_any else "no-colorings"))
    res.inconclusive = True
    return res


def _probe_coloring(g: Graph, phi: PartialEdgeColoring, e: int,
                    claim4: bool) -> NonCriticalityCertificate | None:
    delta = g.delta
    u, v = g.pair(e)
    for K in enumerate_kierstead_paths(phi, e, max_edges=3):
        if len(K.vertices) == 2:
            shared = phi.missing(K.vertices[0]) & phi.missing(K.vertices[1])
            if shared:
                return NonCriticalityCertificate(
                    "p4-violation", "d",
                    "missing sets of the uncolored edge's endpoints intersect (item 1)",
                    edge=(u, v), coloring=phi.to_json_obj(),
                    data={"path": list(K.vertices), "shared_colors": sorted(shared)},
                )
        if len(K.vertices) != 4:
            continue
        for verdict in check_p4(phi, K):
            if verdict.lemma in ("p4.1", "p4.4") and verdict.applicable and not verdict.holds:
                return NonCriticalityCertificate(
                    "p4-violation", "d", f"Kierstead-path item {verdict.lemma[-1]} fails",
                    edge=(u, v), coloring=phi.to_json_obj(),
                    data={"path": list(K.vertices), **(verdict.witness or {})},
                )
    for B in enumerate_simple_brooms(phi, e):
        verdict = check_broom(phi, B)
        if verdict.applicable and not verdict.holds:
            return NonCriticalityCertificate(
                "broom-violation", "d", "hypothesis-satisfying simple broom is not elementary",
                edge=(u, v), coloring=phi.to_json_obj(),
                data={"broom": list(B.vertices), **(verdict.witness or {})},
            )
    for x, y in ((u, v), (v, u)):
        for q in range(g.degree(x) + 1, delta):
            for verdict in check_lemfact(phi, x, y, q):
                if verdict.applicable and not verdict.holds:
                    return NonCriticalityCertificate(
                        "lemfact-violation", "d",
                        f"Z-inequality {verdict.lemma} fails at q={q}",
                        edge=(x, y), coloring=phi.to_json_obj(),
                        data=dict(verdict.witness or {}),
                    )
        if claim4 and delta >= 6:
            # synthetic q puts every vertex of degree <= d(x) into X1; the
            # verdict is backed by the Kierstead-path/Y2 chain (item 4)
            q_syn = Fraction(2 * delta + g.degree(x), 3)
            rep = claim4_report(phi, x, y, q_syn)
            if rep.size_identity_ok and not rep.holds:
                return NonCriticalityCertificate(
                    "p4-violation", "d",
                    "claim-4 probe: Y2 partition inequality fails "
                    "(Kierstead-path item 4 / subclaim chain)",
                    edge=(x, y), coloring=phi.to_json_obj(),
                    data={"q": str(q_syn), "Y": list(rep.y_all), "Y1": list(rep.y1),
                          "Y2": list(rep.y2), "required": rep.required},
                )
    return None
