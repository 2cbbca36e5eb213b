"""Finiteness-checking lattice sets FCS(i, j).

FCS(i, j) is a set of lattice points (x, y) with x, y > 0.  It depends
only on the parities of i and j.  Three parity columns are given
explicitly as lists of clauses; a point is a member when at least one
clause holds.  The fourth column (i even, j odd) is the mirror image of
the (odd, even) column in the diagonal x = y.

The clauses live in ``CLAUSES`` as plain data so the transcription can be
audited (and mutated by tests) in one place.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1

    @classmethod
    def of(cls, n: int) -> "Parity":
        return cls(n % 2)


class FcsDescriptor(NamedTuple):
    i_parity: Parity
    j_parity: Parity

    @classmethod
    def of(cls, i: int, j: int) -> "FcsDescriptor":
        return cls(Parity.of(i), Parity.of(j))


class LatticePoint(NamedTuple):
    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class LineEquation:
    """The line a*x + b*y = c with positive coefficients."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"line coefficients must be >= 1, got a={self.a}, b={self.b}")

    def __str__(self) -> str:
        return f"{self.a}x+{self.b}y={self.c}"

    def holds(self, p: LatticePoint) -> bool:
        return self.a * p.x + self.b * p.y == self.c


# -- coordinate predicates ---------------------------------------------------

@dataclass(frozen=True)
class Eq:
    value: int

    def __call__(self, n: int) -> bool:
        return n == self.value


@dataclass(frozen=True)
class AtLeast:
    value: int

    def __call__(self, n: int) -> bool:
        return n >= self.value


@dataclass(frozen=True)
class Residue:
    """n = residue (mod modulus).  ``4|x+3`` is stored as Residue(4, 1)."""

    modulus: int
    residue: int

    def __call__(self, n: int) -> bool:
        return n % self.modulus == self.residue


@dataclass(frozen=True)
class Clause:
    x: Eq | AtLeast | Residue
    y: Eq | AtLeast | Residue
    text: str

    def __call__(self, p: LatticePoint) -> bool:
        return self.x(p.x) and self.y(p.y)

    def reflected(self) -> "Clause":
        return Clause(self.y, self.x, self.text + " (reflected)")


EVEN, ODD = Parity.EVEN, Parity.ODD

CLAUSES: dict[tuple[Parity, Parity], tuple[Clause, ...]] = {
    (EVEN, EVEN): (
        Clause(Eq(1), Eq(1), "x=1 and y=1"),
        Clause(Eq(2), Residue(2, 0), "x=2 and 2|y"),
        Clause(Eq(3), Eq(3), "x=3 and y=3"),
        Clause(Eq(3), AtLeast(5), "x=3 and y>=5"),
        Clause(AtLeast(4), AtLeast(4), "x>=4 and y>=4"),
        Clause(Residue(2, 0), Eq(2), "2|x and y=2"),
        Clause(AtLeast(5), Eq(3), "x>=5 and y=3"),
    ),
    (ODD, EVEN): (
        Clause(Eq(1), Eq(1), "x=1 and y=1"),
        Clause(Eq(2), Residue(2, 1), "x=2 and 2|y+1"),
        Clause(Eq(3), AtLeast(2), "x=3 and y>=2"),
        Clause(AtLeast(4), AtLeast(4), "x>=4 and y>=4"),
        Clause(Residue(4, 0), Eq(2), "4|x and y=2"),
        Clause(Residue(4, 3), Eq(2), "4|x+1 and y=2"),
        Clause(AtLeast(5), Eq(3), "x>=5 and y=3"),
    ),
    (ODD, ODD): (
        Clause(Eq(1), Eq(1), "x=1 and y=1"),
        Clause(Eq(2), Residue(4, 2), "x=2 and 4|y+2"),
        Clause(Eq(2), Residue(4, 1), "x=2 and 4|y+3"),
        Clause(AtLeast(3), AtLeast(3), "x>=3 and y>=3"),
        Clause(Residue(4, 2), Eq(2), "4|x+2 and y=2"),
        Clause(Residue(4, 1), Eq(2), "4|x+3 and y=2"),
    ),
}


def clauses_for(i: int, j: int) -> tuple[Clause, ...]:
    """Clauses of the column selected by the parities of i and j.

    For (even, odd) the (odd, even) clauses are returned with their
    coordinates swapped.
    """
    key = (Parity.of(i), Parity.of(j))
    if key == (EVEN, ODD):
        return tuple(c.reflected() for c in CLAUSES[(ODD, EVEN)])
    return CLAUSES[key]


def matching_clause(i: int, j: int, p: LatticePoint) -> Clause | None:
    """First clause of FCS(i, j) satisfied by ``p``, or None."""
    if p.x <= 0 or p.y <= 0:
        return None
    for clause in clauses_for(i, j):
        if clause(p):
            return clause
    return None


def fcs_contains(i: int, j: int, p: LatticePoint | tuple[int, int]) -> bool:
    return matching_clause(i, j, LatticePoint(*p)) is not None


def fcs_window(i: int, j: int, x_max: int, y_max: int) -> set[LatticePoint]:
    if x_max < 1 or y_max < 1:
        raise ValueError(f"window bounds must be >= 1, got x_max={x_max}, y_max={y_max}")
    return {
        LatticePoint(x, y)
        for x in range(1, x_max + 1)
        for y in range(1, y_max + 1)
        if fcs_contains(i, j, (x, y))
    }


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, u, v) with a*u + b*v = g
    u0, v0, u1, v1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        u0, u1 = u1, u0 - k * u1
        v0, v1 = v1, v0 - k * v1
    return a, u0, v0


def iter_line_solutions(eq: LineEquation) -> Iterator[LatticePoint]:
    """Positive solutions of eq in increasing x."""
    a, b, c = eq.a, eq.b, eq.c
    if c < a + b:
        return
    g, u, _ = _ext_gcd(a, b)
    if c % g:
        return
    step = b // g
    # smallest positive x with a*x = c (mod b)
    x = (u * (c // g)) % step
    if x == 0:
        x = step
    while True:
        rest = c - a * x
        if rest < b:
            return
        yield LatticePoint(x, rest // b)
        x += step


def line_solutions(eq: LineEquation) -> list[LatticePoint]:
    return list(iter_line_solutions(eq))


def fcs_line_witness(i: int, j: int, eq: LineEquation) -> LatticePoint | None:
    """The line solution with the smallest x lying in FCS(i, j), if any."""
    for p in iter_line_solutions(eq):
        if fcs_contains(i, j, p):
            return p
    return None
