"""Finiteness criteria for knots, framed knots, links and knotted tori.

Every criterion checks its dimension hypotheses first and raises
``DomainError`` naming the violated one.  Inequalities with half-integer
bounds are doubled so everything stays in integers, e.g.
``m < p + 3q/2 + 2`` is tested as ``2m < 2p + 3q + 4``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .fcs import LatticePoint, LineEquation, fcs_line_witness


class DimTriple(NamedTuple):
    p: int
    q: int
    m: int

    def __str__(self) -> str:
        return f"(p={self.p}, q={self.q}, m={self.m})"


class Verdict(str, enum.Enum):
    FINITE = "finite"
    INFINITE = "infinite"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FinitenessVerdict:
    value: Verdict
    condition: str | None = None
    witness: LatticePoint | None = None

    def __post_init__(self):
        if self.value is Verdict.FINITE and (self.condition or self.witness):
            raise ValueError("a finite verdict carries no explanation")

    @property
    def infinite(self) -> bool:
        return self.value is Verdict.INFINITE

    def __str__(self) -> str:
        return self.value.value

    def explain(self) -> str:
        if not self.infinite:
            return "finite"
        text = f"infinite: {self.condition}"
        if self.witness is not None:
            text += f" {self.witness}"
        return text


FINITE = FinitenessVerdict(Verdict.FINITE)


def _infinite(condition: str, witness: LatticePoint | None = None) -> FinitenessVerdict:
    return FinitenessVerdict(Verdict.INFINITE, condition, witness)


class DomainError(ValueError):
    """A dimension hypothesis of a criterion does not hold."""

    def __init__(self, constraint: str, **values: int):
        self.constraint = constraint
        self.values = values
        shown = ", ".join(f"{k}={v}" for k, v in values.items())
        super().__init__(f"hypothesis {constraint} violated for ({shown})")


# -- hypothesis checks -------------------------------------------------------
# Each returns the name of the first violated hypothesis, or None.

def knot_domain(q: int, m: int) -> str | None:
    if not m > q + 2:
        return "m > q+2"
    return None


def framed_domain(p: int, q: int, m: int) -> str | None:
    if not m > q + 2:
        return "m > q+2"
    if not 1 <= p <= m - q:
        return "1 <= p <= m-q"
    return None


def link_domain(p: int, q: int, m: int) -> str | None:
    if p < 1 or q < 1:
        return "p, q >= 1"
    if not p < m - 2:
        return "p < m-2"
    if not q < m - 2:
        return "q < m-2"
    return None


def tori_domain(p: int, q: int, m: int) -> str | None:
    if p < 1:
        return "p >= 1"
    if not m > 2 * p + q + 2:
        return "m > 2p+q+2"
    if not 2 * m < 2 * p + 3 * q + 4:
        return "m < p+3q/2+2"
    return None


def _require(constraint: str | None, **values: int) -> None:
    if constraint is not None:
        raise DomainError(constraint, **values)


# -- criteria ----------------------------------------------------------------

def knot_infinite(q: int, m: int) -> FinitenessVerdict:
    """Knots S^q -> S^m."""
    _require(knot_domain(q, m), q=q, m=m)
    if 2 * m < 3 * q + 4 and (q + 1) % 4 == 0:
        return _infinite("4 | q+1 and m < 3q/2+2")
    return FINITE


def framed_knot_conditions(p: int, q: int, m: int) -> list[str]:
    """Names of the framed-knot conditions that hold; empty means finite."""
    _require(framed_domain(p, q, m), p=p, q=q, m=m)
    fired = []
    if (q + 1) % 4 == 0 and 2 * m < 2 * p + 3 * q + 2:
        fired.append("4 | q+1 and m < p+3q/2+1")
    if (q + 1) % 2 == 0 and m == 2 * q + 1:
        fired.append("2 | q+1 and m = 2q+1")
    if q % 2 == 0 and m == p + 2 * q:
        fired.append("2 | q and m = p+2q")
    return fired


def framed_knot_infinite(p: int, q: int, m: int) -> FinitenessVerdict:
    """Framed knots D^p x S^q -> S^m."""
    fired = framed_knot_conditions(p, q, m)
    return _infinite(fired[0]) if fired else FINITE


def _fcs_witness(p: int, q: int, m: int) -> LatticePoint | None:
    eq = LineEquation(m - p - 2, m - q - 2, m - 3)
    return fcs_line_witness(m - p, m - q, eq)


def link_unknotted_infinite(p: int, q: int, m: int) -> FinitenessVerdict:
    """Links S^p | S^q -> S^m with both components unknotted.

    Infinite exactly when the line (m-p-2)x + (m-q-2)y = m-3 meets
    FCS(m-p, m-q); the first such point is kept as the witness.
    """
    _require(link_domain(p, q, m), p=p, q=q, m=m)
    witness = _fcs_witness(p, q, m)
    if witness is not None:
        return _infinite(f"FCS({m - p},{m - q}) meets {m - p - 2}x+{m - q - 2}y={m - 3} at", witness)
    return FINITE


def link_zero_infinite(n: int, q: int, m: int) -> FinitenessVerdict:
    """Links S^n | S^q -> S^m whose second component is unknotted.

    This group splits as the fully unknotted link group plus the knot
    group of the first component, so it is infinite iff one of those is.
    """
    unknotted = link_unknotted_infinite(n, q, m)
    if unknotted.infinite:
        return unknotted
    knot = knot_infinite(n, m)
    if knot.infinite:
        return _infinite(f"knot({n},{m})")
    return FINITE


def knotted_tori_infinite(p: int, q: int, m: int) -> FinitenessVerdict:
    """Knotted tori S^p x S^q -> S^m below the metastable range."""
    _require(tori_domain(p, q, m), p=p, q=q, m=m)
    if (q + 1) % 4 == 0:
        return _infinite("4 | q+1")
    if (p + q + 1) % 4 == 0:
        return _infinite("4 | p+q+1")
    witness = _fcs_witness(p + q, q, m)
    if witness is not None:
        return _infinite(f"FCS({m - p - q},{m - q}) meets {m - p - q - 2}x+{m - q - 2}y={m - 3} at", witness)
    return FINITE


def knotted_tori_infinite_via_components(p: int, q: int, m: int) -> FinitenessVerdict:
    """Same question answered through the pieces of the exact sequence.

    The torus group is infinite iff one of the unknotted link group of
    S^{p+q} | S^q, the knot group of S^{p+q}, or the framed knot group of
    D^p x S^q is infinite.  All three constituents are in their own domains
    whenever (p, q, m) is.
    """
    _require(tori_domain(p, q, m), p=p, q=q, m=m)
    link = link_unknotted_infinite(p + q, q, m)
    if link.infinite:
        return _infinite(f"link_u({p + q},{q},{m})", link.witness)
    if knot_infinite(p + q, m).infinite:
        return _infinite(f"knot({p + q},{m})")
    if framed_knot_infinite(p, q, m).infinite:
        return _infinite(f"framed({p},{q},{m})")
    return FINITE


def connected_sum_infinite(p1: int, q1: int, p2: int, q2: int, m: int) -> FinitenessVerdict | None:
    """Sufficient condition for infinitely many knotted connected sums.

    Returns an infinite verdict when either torus summand is known to be
    infinite, and None (unknown) otherwise; finiteness of both summands
    says nothing about the sum.
    """
    values = dict(p1=p1, q1=q1, p2=p2, q2=q2, m=m)
    if not q1 >= p1 >= p2:
        raise DomainError("q1 >= p1 >= p2", **values)
    if not m > 2 * p1 + q1 + 2:
        raise DomainError("m > 2p1+q1+2", **values)
    if p2 + q2 != p1 + q1:
        raise DomainError("p2+q2 = p1+q1", **values)
    for tag, (p, q) in (("first", (p1, q1)), ("second", (p2, q2))):
        if tori_domain(p, q, m) is not None:
            continue
        verdict = knotted_tori_infinite(p, q, m)
        if verdict.infinite:
            return _infinite(f"{tag} summand S^{p} x S^{q}: {verdict.condition}", verdict.witness)
    return None
