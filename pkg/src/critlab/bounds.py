"""Average-degree lower bounds for edge-chromatic-critical graphs: the new
piecewise bound, its derivation chain, and the table of historical bounds.

The threshold q and everything derived from it live in Q[sqrt(2)]; published
decimal coefficients are reproduced as exact rationals.  Decimals appear
only for values outside Q[sqrt(2)] (square roots of non-squares) and are
rounded to 10 significant digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Context, Decimal, localcontext
from fractions import Fraction

from .exactreal import ExactReal, as_exact
from .graphs import Graph

MIN_DELTA = 56


def _require_delta(delta: int) -> None:
    if delta < MIN_DELTA:
        raise ValueError(f"the bound machinery assumes Delta >= {MIN_DELTA}")


@dataclass(frozen=True)
class QValue:
    value: ExactReal
    branch: str  # "first" (sqrt2 term) | "second" (3/4*Delta - 2)


def q_of(delta: int) -> QValue:
    """min of the two threshold formulas, decided exactly; the first wins
    for Delta >= 66, the second for 56 <= Delta <= 65."""
    _require_delta(delta)
    first = ExactReal(-2, 2 * (delta - 1)) / ExactReal(1, 2)
    second = ExactReal(Fraction(3, 4) * delta - 2)
    # sqrt(2) is irrational, so the two terms are never equal
    if (first - second).sign() < 0:
        return QValue(first, "first")
    return QValue(second, "second")


@dataclass(frozen=True)
class Theorem1Bound:
    delta: int
    value: Fraction
    improves_woodall: bool  # value >= (2/3)(Delta+2)


def bound_theorem1(delta: int) -> Theorem1Bound:
    """The published piecewise lower bound on the average degree."""
    _require_delta(delta)
    if delta >= 66:
        value = Fraction(69241, 100000) * delta - Fraction(15658, 100000)
    elif delta == 65:
        value = Fraction(69392, 100000) * delta - Fraction(20642, 100000)
    else:
        value = Fraction(68706, 100000) * delta + Fraction(19815, 100000)
    return Theorem1Bound(delta, value, value >= Fraction(2, 3) * (delta + 2))


@dataclass(frozen=True)
class ChainReport:
    """The derivation pipeline behind the published coefficients."""

    delta: int
    c: int
    q: ExactReal
    branch: str
    q_star: ExactReal
    a: ExactReal
    first_route: bool  # Delta - q - c > 0
    f_c: ExactReal
    f_prime_c: ExactReal
    f1: ExactReal
    f2: ExactReal
    bound: ExactReal
    improves_woodall: bool


def bound_chain(delta: int, c: int = 18) -> ChainReport:
    """Recompute the bound from first principles with exact arithmetic.

    Route one (Delta-q-c > 0) balances the two charge lower bounds through
    f(c); the other route drops the Z2 class and uses f'(c).  The published
    coefficients round this chain's output downward, so the chain value is
    always >= the piecewise line.
    """
    _require_delta(delta)
    if c <= 0:
        raise ValueError("c must be a positive integer")
    qv = q_of(delta)
    q = qv.value
    if qv.branch == "first":
        q_star = ExactReal(0, 2 * delta) / ExactReal(1, 2)
        a = 1 + ExactReal(1) / ExactReal(1, 2)
    else:
        q_star = ExactReal(Fraction(3, 4) * delta)
        a = as_exact(2)
    gap = delta - q  # > 0 since q < (3/4)Delta
    numer = (5 * c + 2) * delta - (6 * c + 3) * q + 3 * c + 2
    f_c = (3 - as_exact(c) / gap) * numer / (c * delta)
    f_prime_c = 2 * numer / (c * delta)
    f1_den = (18 * c + 6) * delta - (18 * c + 9) * q_star
    if f1_den.sign() == 0:
        raise ValueError("degenerate chain: f1 denominator vanishes")
    f1 = (2 * c * delta - 3 * c * q_star) / f1_den
    f2 = 9 * c + 6 + (18 * c + 9) * a - ((5 * c * c + 2 * c) * delta
                                         - (6 * c * c + 3 * c) * q
                                         + 3 * c * c + 2 * c) / gap
    first_route = (gap - c).sign() > 0
    f_used = f_c if first_route else f_prime_c
    den = 3 + f_used
    if den.sign() == 0:
        raise ValueError("degenerate chain: 3 + f(c) vanishes")
    bound = q + (2 + 2 * delta - 3 * q) / den
    improves = (bound - Fraction(2, 3) * (delta + 2)).sign() >= 0
    return ChainReport(
        delta, c, q, qv.branch, q_star, a, first_route,
        f_c, f_prime_c, f1, f2, bound, improves,
    )


# -- historical bound table ---------------------------------------------------


@dataclass(frozen=True)
class BoundRow:
    name: str
    value: Fraction | Decimal
    exact: bool
    note: str = ""

    def value_str(self) -> str:
        return str(self.value)


def _sqrt_value(add: int, radicand: int, div: int) -> tuple[Fraction | Decimal, bool]:
    """(add + sqrt(radicand)) / div, exact when the root is an integer."""
    r = math.isqrt(radicand)
    if r * r == radicand:
        return Fraction(add + r, div), True
    with localcontext() as ctx:
        ctx.prec = 30
        val = (Decimal(add) + Decimal(radicand).sqrt()) / Decimal(div)
    return Context(prec=10).plus(val), False


def bound_table(delta: int, n: int | None = None) -> list[BoundRow]:
    """Every historical lower bound applicable at this Delta, oldest first,
    plus the new bound when Delta >= 56 and the conjectured target when the
    vertex count is supplied."""
    if delta < 2:
        raise ValueError("bound table needs Delta >= 2")
    rows: list[BoundRow] = []

    if delta % 2 == 1:
        rows.append(BoundRow("fiorini", Fraction(delta + 1, 2), True, "odd Delta"))
    else:
        rows.append(BoundRow("fiorini", Fraction(delta + 2, 2), True, "even Delta"))

    if delta in (9, 11, 13):
        rows.append(BoundRow("haile", Fraction(3 * (delta + 2), 5), True, "Delta in {9,11,13}"))
    elif delta == 15:
        val, exact = _sqrt_value(15, 29, 2)
        rows.append(BoundRow("haile", val, exact, "Delta = 15"))
    elif delta >= 10 and delta % 2 == 0:
        rows.append(BoundRow(
            "haile", Fraction(delta + 6, 2) - Fraction(12, delta + 4), True, "even Delta >= 10"))
    elif delta >= 17:
        rows.append(BoundRow(
            "haile", Fraction(delta + 7, 2) - Fraction(16, delta + 5), True, "odd Delta >= 17"))

    val, exact = _sqrt_value(delta, 2 * delta - 1, 2)
    rows.append(BoundRow("sanders_zhao", val, exact))

    t = 1
    while 2 * t * t < delta:
        t += 1
    rows.append(BoundRow(
        "woodall_t", Fraction(t * (delta + t - 1), 2 * t - 1), True, f"t = {t}"))

    if delta >= 15:
        rows.append(BoundRow("woodall_23", Fraction(2 * (delta + 2), 3), True, "(2/3)(Delta+2)"))
    elif delta >= 8:
        rows.append(BoundRow("woodall_23", Fraction(2 * delta, 3) + 1, True, "(2/3)Delta + 1"))
    else:
        rows.append(BoundRow("woodall_23", Fraction(2 * (delta + 1), 3), True, "(2/3)(Delta+1)"))

    if delta >= MIN_DELTA:
        rows.append(BoundRow("theorem1", bound_theorem1(delta).value, True))

    if n is not None:
        if n <= 0:
            raise ValueError("n must be positive")
        rows.append(BoundRow(
            "conjecture_target", Fraction(delta) - 1 + Fraction(3, n), True, f"n = {n}"))
    return rows


# -- the conjectured target as a graph predicate -------------------------------


def conjecture_target(delta: int, n: int) -> Fraction:
    return Fraction(delta) - 1 + Fraction(3, n)


def conjecture_holds(g: Graph) -> bool:
    """Does the graph meet the conjectured average-degree target
    d_bar >= Delta - 1 + 3/n?  Exact rational comparison."""
    if g.n == 0:
        raise ValueError("empty graph")
    return g.average_degree() >= conjecture_target(g.delta, g.n)
