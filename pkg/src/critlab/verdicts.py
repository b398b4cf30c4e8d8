"""Verdict and certificate records shared by the lemma checkers, the fan
machinery, and the pruner."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class LemmaVerdict:
    """Outcome of one lemma predicate.

    holds is meaningful only when applicable; a failing verdict carries the
    quantifier instance in scope and enough counts in witness to recheck the
    failure from the graph alone.
    """

    lemma: str
    holds: bool
    applicable: bool = True
    scope: tuple | None = None
    witness: dict | None = None

    def to_json_obj(self) -> dict:
        return {
            "lemma": self.lemma,
            "holds": self.holds,
            "applicable": self.applicable,
            "scope": list(self.scope) if self.scope is not None else None,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class NonCriticalityCertificate:
    """Checkable evidence that a graph is not edge-Delta-critical.

    reason is one of: disconnected, degree-sum, VAL, w22, w23, p4-violation,
    broom-violation, lemfact-violation.  Coloring-dependent reasons embed the
    coloring so the violation re-validates in polynomial time.
    """

    reason: str
    stage: str  # cascade stage: "a" | "b" | "c" | "d"
    detail: str = ""
    edge: tuple[int, int] | None = None
    coloring: dict | None = None  # to_json_obj() of the witnessing coloring
    data: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {
            "reason": self.reason,
            "stage": self.stage,
            "detail": self.detail,
            "edge": list(self.edge) if self.edge else None,
            "coloring": self.coloring,
            "data": self.data,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))
