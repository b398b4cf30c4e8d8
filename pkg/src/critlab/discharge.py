"""The discharging engine: exact charge redistribution, the degree-threshold
vertex partition, and the structural claims as evaluable predicates.

Everything here is exact arithmetic in Q[sqrt(2)]; the claims never gate a
computation, they only gate verdicts.  On a graph that is actually
edge-Delta-critical (with q from the bound calculator and Delta >= 56) a
failing claim would be a counterexample to a theorem; on anything else a
failure is just a fact about that graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coloring import PartialEdgeColoring
from .exactreal import ExactReal, as_exact
from .graphs import Graph
from .verdicts import LemmaVerdict


@dataclass(frozen=True)
class ChargeLedger:
    """Initial charge M(x) = d(x), final charge M'(x), and every transfer."""

    q: ExactReal
    initial: tuple[int, ...]
    final: tuple[ExactReal, ...]
    transfers: tuple[tuple[int, int, ExactReal], ...]  # (donor, recipient, amount)

    def conserved(self) -> bool:
        total = as_exact(0)
        for x in self.final:
            total = total + x
        return total == sum(self.initial)

    def to_json_obj(self) -> dict:
        return {
            "q": str(self.q),
            "initial": list(self.initial),
            "final": [str(x) for x in self.final],
            "transfers": [[d, r, str(a)] for d, r, a in self.transfers],
        }


def discharge(g: Graph, q) -> ChargeLedger:
    """Each (>q)-vertex sends its surplus d(y)-q in equal shares to its
    (<q)-neighbors; a donor with no such neighbor keeps its surplus."""
    qe = as_exact(q)
    if qe.sign() <= 0:
        raise ValueError("q must be positive")
    final: list[ExactReal] = [as_exact(d) for d in g.degrees()]
    transfers = []
    for y in g.vertices():
        dy = g.degree(y)
        if (as_exact(dy) - qe).sign() <= 0:
            continue
        recipients = [x for x in g.neighbors(y) if (as_exact(g.degree(x)) - qe).sign() < 0]
        if not recipients:
            continue
        share = (as_exact(dy) - qe) / len(recipients)
        for x in recipients:
            transfers.append((y, x, share))
            final[y] = final[y] - share
            final[x] = final[x] + share
    return ChargeLedger(qe, g.degrees(), tuple(final), tuple(transfers))


@dataclass(frozen=True)
class PartitionReport:
    q: ExactReal
    c: int
    x1: tuple[int, ...]
    n_x1: tuple[int, ...]
    z1: tuple[int, ...]
    z2: tuple[int, ...]
    b1: ExactReal
    b2: ExactReal

    def to_json_obj(self) -> dict:
        return {
            "q": str(self.q), "c": self.c,
            "X1": list(self.x1), "N_X1": list(self.n_x1),
            "Z1": list(self.z1), "Z2": list(self.z2),
            "b1": str(self.b1), "b2": str(self.b2),
        }


def partition(g: Graph, q, c: int) -> PartitionReport:
    """X1 = low-degree vertices (d <= 3q-2*Delta), its neighborhood, and the
    split of the rest at degree Delta-c; b1/b2 are the two charge lower
    bounds built from the class sizes."""
    if c <= 0:
        raise ValueError("c must be a positive integer")
    qe = as_exact(q)
    delta = g.delta
    low = 3 * qe - 2 * delta
    x1 = [x for x in g.vertices() if (as_exact(g.degree(x)) - low).sign() <= 0]
    x1set = set(x1)
    nx1 = sorted({z for x in x1 for z in g.neighbors(x)})
    core = x1set | set(nx1)
    z1, z2 = [], []
    for z in g.vertices():
        if z in core:
            continue
        (z1 if g.degree(z) >= delta - c else z2).append(z)
    b1 = (
        (2 + 2 * (delta - qe)) * len(x1)
        + qe * len(nx1)
        + as_exact((delta - c) * len(z1))
        + (3 * qe - 2 * delta) * len(z2)
    )
    b2 = (2 + 2 * (delta - qe)) * len(x1) + (g.n - len(x1)) * qe
    return PartitionReport(qe, c, tuple(x1), tuple(nx1), tuple(z1), tuple(z2), b1, b2)


def verify_claims(g: Graph, q, c: int, ledger: ChargeLedger | None = None) -> dict[str, LemmaVerdict]:
    """Claims 1, 2, 3 and 5 as exact predicates over any graph.

    claim1: d(x) <= Delta-q+2 forces M'(x) >= d(x) + 2(Delta-q).
    claim2: x outside X1 forces M'(x) >= q.
    claim3: X1's neighbors all exceed degree q, and |N(X1)| >= 2|X1|.
    claim5: |Z1(c)| >= ((5c+2)Delta - (6c+3)q + 3c+2) / (c*Delta) * |N(X1)|.
    """
    qe = as_exact(q)
    delta = g.delta
    if ledger is None:
        ledger = discharge(g, qe)
    part = partition(g, qe, c)
    out: dict[str, LemmaVerdict] = {}

    bad = None
    for x in g.vertices():
        dx = g.degree(x)
        if (as_exact(dx) - (delta - qe + 2)).sign() <= 0:
            want = as_exact(dx) + 2 * (delta - qe)
            if (ledger.final[x] - want).sign() < 0:
                bad = LemmaVerdict(
                    "claim1", False, True, (x,),
                    {"final": str(ledger.final[x]), "required": str(want)},
                )
                break
    out["claim1"] = bad or LemmaVerdict("claim1", True)

    bad = None
    low = 3 * qe - 2 * delta
    for x in g.vertices():
        if (as_exact(g.degree(x)) - low).sign() > 0:
            if (ledger.final[x] - qe).sign() < 0:
                bad = LemmaVerdict(
                    "claim2", False, True, (x,),
                    {"final": str(ledger.final[x]), "required": str(qe)},
                )
                break
    out["claim2"] = bad or LemmaVerdict("claim2", True)

    bad = None
    for y in part.n_x1:
        if (as_exact(g.degree(y)) - qe).sign() <= 0:
            bad = LemmaVerdict(
                "claim3", False, True, (y,),
                {"degree": g.degree(y), "required": f"> {qe}"},
            )
            break
    if bad is None and len(part.n_x1) < 2 * len(part.x1):
        bad = LemmaVerdict(
            "claim3", False, True, None,
            {"N_X1": len(part.n_x1), "X1": len(part.x1)},
        )
    out["claim3"] = bad or LemmaVerdict("claim3", True)

    need = ((5 * c + 2) * delta - (6 * c + 3) * qe + 3 * c + 2) / (c * delta) * len(part.n_x1)
    ok5 = (as_exact(len(part.z1)) - need).sign() >= 0
    out["claim5"] = LemmaVerdict(
        "claim5", ok5, True, None,
        None if ok5 else {"Z1": len(part.z1), "required": str(need)},
    )
    return out


@dataclass(frozen=True)
class Claim4Report:
    """The Y / Y1 / Y2 split of N(y) seen from an uncolored edge xy, plus
    the partition inequality |Y2| >= Delta - 2 d(x) + 3."""

    x: int
    y: int
    q: ExactReal
    y_all: tuple[int, ...]
    y1: tuple[int, ...]
    y2: tuple[int, ...]
    size_identity_ok: bool  # |Y| == Delta - d(x) + 1
    required: int
    holds: bool

    def to_json_obj(self) -> dict:
        return {
            "x": self.x, "y": self.y, "q": str(self.q),
            "Y": list(self.y_all), "Y1": list(self.y1), "Y2": list(self.y2),
            "size_identity_ok": self.size_identity_ok,
            "required": self.required, "holds": self.holds,
        }


def claim4_report(phi: PartialEdgeColoring, x: int, y: int, q) -> Claim4Report:
    """Y = neighbors w of y (w != x) whose edge color is missing at x;
    Y1 = Y inside N(X1), Y2 = Y outside X1 and N(X1)."""
    g = phi.graph
    delta = g.delta
    e1 = g.edge_id(x, y)
    if phi.is_colored(e1):
        raise ValueError("xy must be the uncolored edge of phi")
    qe = as_exact(q)
    part = partition(g, qe, 1)  # c is irrelevant for X1/N(X1)
    miss_x = phi.missing(x)
    y_all = []
    for w in g.neighbors(y):
        if w == x:
            continue
        c = phi.color_of(g.edge_id(y, w))
        if c in miss_x:
            y_all.append(w)
    x1 = set(part.x1)
    nx1 = set(part.n_x1)
    y1 = [w for w in y_all if w in nx1]
    y2 = [w for w in y_all if w not in x1 and w not in nx1]
    required = delta - 2 * g.degree(x) + 3
    return Claim4Report(
        x, y, qe, tuple(y_all), tuple(y1), tuple(y2),
        len(y_all) == delta - g.degree(x) + 1,
        required,
        len(y2) >= required,
    )
