"""Interval bounds on rational ranks of embedding groups.

A rank is tracked as an interval ``[lo, hi]`` with ``hi`` possibly
``math.inf``.  [0, 0] means the group is provably finite and ``lo >= 1``
means provably infinite.  Exact ranks of knot, link and Stiefel homotopy
groups are not derived here; they come from a ``RankProvider``.  The
default provider only knows what the finiteness criteria imply, and a
``TableProvider`` can overlay exact values read from a file.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field
from typing import Iterable, Protocol

from . import criteria
from .criteria import DomainError, FinitenessVerdict

log = logging.getLogger(__name__)

INF = math.inf


@dataclass(frozen=True)
class RankInterval:
    lo: int
    hi: float = INF
    # set when the value is a placeholder for a query outside every known criterion
    unconstrained: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.lo < 0 or self.lo > self.hi:
            raise ValueError(f"invalid rank interval [{self.lo}, {self.hi}]")
        if self.hi != INF and self.hi != int(self.hi):
            raise ValueError(f"rank bound must be integral, got {self.hi}")

    @classmethod
    def exact(cls, n: int) -> "RankInterval":
        return cls(n, n)

    @classmethod
    def unknown(cls) -> "RankInterval":
        return cls(0, INF, unconstrained=True)

    @property
    def bounded(self) -> bool:
        return self.hi != INF

    def __add__(self, other: "RankInterval") -> "RankInterval":
        return RankInterval(self.lo + other.lo, self.hi + other.hi,
                            self.unconstrained or other.unconstrained)

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi

    def intersect(self, other: "RankInterval") -> "RankInterval | None":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            return None
        return RankInterval(lo, hi)

    def __str__(self) -> str:
        if self.bounded:
            return f"[{self.lo},{int(self.hi)}]"
        return f"[{self.lo},inf)"


ZERO = RankInterval.exact(0)
POSITIVE = RankInterval(1, INF)


def interval_add(a: RankInterval, b: RankInterval) -> RankInterval:
    return a + b


def format_bound(hi: float) -> str:
    return "inf" if hi == INF else str(int(hi))


def parse_bound(text: str) -> float:
    return INF if text == "inf" else int(text)


class RankConflict(RuntimeError):
    """Rank interval and finiteness verdict contradict each other."""


def sphere_rank(i: int, n: int) -> int:
    """Rank of pi_i(S^n): 1 for i = n and, when n is even, for i = 2n-1."""
    if i < 1 or n < 1:
        raise ValueError(f"sphere_rank needs i, n >= 1, got i={i}, n={n}")
    if i == n or (n % 2 == 0 and i == 2 * n - 1):
        return 1
    return 0


def rank_of_verdict(v: FinitenessVerdict) -> RankInterval:
    return POSITIVE if v.infinite else ZERO


# -- providers ---------------------------------------------------------------

class RankProvider(Protocol):
    def stiefel_rank(self, q: int, n: int, k: int) -> RankInterval: ...

    def knot_rank(self, q: int, m: int) -> RankInterval: ...

    def linku_rank(self, p: int, q: int, m: int) -> RankInterval: ...


def default_stiefel_rank(q: int, n: int, k: int) -> RankInterval:
    """Bound the rank of pi_q(V_{n,k}) from framed-knot and knot verdicts.

    Rationally E^{n+q}(D^k x S^q) is E^{n+q}(S^q) plus pi_q(V_{n,k}), so a
    finite framed group forces rank 0, an infinite framed group over a
    finite knot group forces rank >= 1, and two infinite groups leave the
    Stiefel summand undetermined.
    """
    m = n + q
    framed = criteria.framed_knot_infinite(k, q, m)
    if not framed.infinite:
        return ZERO
    if not criteria.knot_infinite(q, m).infinite:
        return POSITIVE
    return RankInterval(0, INF)


class DefaultProvider:
    """Ranks implied by the finiteness criteria alone.

    Queries outside a criterion's hypotheses answer an unconstrained
    [0, inf) instead of raising.
    """

    def stiefel_rank(self, q: int, n: int, k: int) -> RankInterval:
        try:
            return default_stiefel_rank(q, n, k)
        except DomainError:
            return RankInterval.unknown()

    def knot_rank(self, q: int, m: int) -> RankInterval:
        try:
            return rank_of_verdict(criteria.knot_infinite(q, m))
        except DomainError:
            return RankInterval.unknown()

    def linku_rank(self, p: int, q: int, m: int) -> RankInterval:
        try:
            return rank_of_verdict(criteria.link_unknotted_infinite(p, q, m))
        except DomainError:
            return RankInterval.unknown()


class RankTableError(ValueError):
    pass


_ARITY = {"stiefel": 3, "knot": 2, "linku": 3}


class TableProvider:
    """Ranks read from a plain-text table, falling back to another provider.

    One entry per line, whitespace separated, ``#`` starts a comment::

        stiefel <q> <n> <k> <lo> <hi|inf>
        knot <q> <m> <lo> <hi|inf>
        linku <p> <q> <m> <lo> <hi|inf>
    """

    def __init__(self, entries: dict[tuple, RankInterval], fallback: RankProvider | None = None):
        self._entries = dict(entries)
        self._fallback = fallback if fallback is not None else DefaultProvider()

    @classmethod
    def parse(cls, lines: Iterable[str], fallback: RankProvider | None = None,
              source: str = "<table>") -> "TableProvider":
        entries: dict[tuple, RankInterval] = {}
        for lineno, raw in enumerate(lines, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            kind = fields[0]
            if kind not in _ARITY:
                raise RankTableError(f"{source}:{lineno}: unknown entry kind {kind!r}")
            if len(fields) != _ARITY[kind] + 3:
                raise RankTableError(f"{source}:{lineno}: expected {_ARITY[kind] + 2} values after {kind!r}")
            try:
                key = (kind, *(int(f) for f in fields[1:-2]))
                rank = RankInterval(int(fields[-2]), parse_bound(fields[-1]))
            except ValueError as exc:
                raise RankTableError(f"{source}:{lineno}: {exc}") from None
            if key in entries:
                log.warning("%s:%d: duplicate entry %s, keeping the later one", source, lineno, key)
            entries[key] = rank
        return cls(entries, fallback)

    @classmethod
    def load(cls, path: str | os.PathLike, fallback: RankProvider | None = None) -> "TableProvider":
        try:
            with open(path, encoding="utf-8") as fh:
                return cls.parse(fh, fallback, source=str(path))
        except OSError as exc:
            raise RankTableError(f"cannot read rank table: {exc}") from None

    def __len__(self) -> int:
        return len(self._entries)

    def stiefel_rank(self, q: int, n: int, k: int) -> RankInterval:
        hit = self._entries.get(("stiefel", q, n, k))
        return hit if hit is not None else self._fallback.stiefel_rank(q, n, k)

    def knot_rank(self, q: int, m: int) -> RankInterval:
        hit = self._entries.get(("knot", q, m))
        return hit if hit is not None else self._fallback.knot_rank(q, m)

    def linku_rank(self, p: int, q: int, m: int) -> RankInterval:
        hit = self._entries.get(("linku", p, q, m))
        return hit if hit is not None else self._fallback.linku_rank(p, q, m)


# -- composite ranks ---------------------------------------------------------

def full_link_rank(n: int, q: int, m: int, provider: RankProvider | None = None) -> RankInterval:
    """Rank of E^m(S^n | S^q) = unknotted links + both knot groups."""
    provider = provider or DefaultProvider()
    criteria._require(criteria.link_domain(n, q, m), p=n, q=q, m=m)
    return provider.linku_rank(n, q, m) + provider.knot_rank(n, m) + provider.knot_rank(q, m)


def tori_rank_untightened(p: int, q: int, m: int, provider: RankProvider | None = None) -> RankInterval:
    provider = provider or DefaultProvider()
    criteria._require(criteria.tori_domain(p, q, m), p=p, q=q, m=m)
    return full_link_rank(p + q, q, m, provider) + provider.stiefel_rank(q, m - q, p)


def tori_rank(p: int, q: int, m: int, provider: RankProvider | None = None) -> RankInterval:
    """Rank of E^m(S^p x S^q): link rank of S^{p+q} | S^q plus rank pi_q(V_{m-q,p}).

    The sum is then narrowed by the finiteness verdict for the torus.
    Raises RankConflict if the two disagree.
    """
    raw = tori_rank_untightened(p, q, m, provider)
    verdict = criteria.knotted_tori_infinite(p, q, m)
    narrowed = raw.intersect(POSITIVE if verdict.infinite else ZERO)
    if narrowed is None:
        raise RankConflict(f"tori{(p, q, m)}: rank {raw} contradicts verdict {verdict.value}")
    return narrowed


# -- exact-sequence bookkeeping ----------------------------------------------

@dataclass(frozen=True)
class ChainTerm:
    label: str
    rank: RankInterval

    def __post_init__(self):
        if not self.label:
            raise ValueError("chain term needs a label")


@dataclass(frozen=True)
class ChainViolation:
    index: int
    label: str
    rank: RankInterval
    neighbour_bound: float

    def __str__(self) -> str:
        return (f"term {self.index} {self.label}: rank >= {self.rank.lo} "
                f"but neighbours allow at most {format_bound(self.neighbour_bound)}")


def chain_rank_check(chain: list[ChainTerm]) -> list[ChainViolation]:
    """Flag interior terms B of A -> B -> C with rank B > rank A + rank C.

    For an exact sequence of finitely generated abelian groups this bound
    always holds, so every returned violation is a contradiction.
    """
    if len(chain) < 3:
        raise ValueError("a chain needs at least three terms")
    out = []
    for k in range(1, len(chain) - 1):
        before, term, after = chain[k - 1], chain[k], chain[k + 1]
        bound = before.rank.hi + after.rank.hi
        if term.rank.lo > bound:
            out.append(ChainViolation(k, term.label, term.rank, bound))
    return out


def _or_unknown(fn, *args) -> RankInterval:
    try:
        return fn(*args)
    except DomainError:
        return RankInterval.unknown()


def theorem3_chain(p: int, q: int, m: int, provider: RankProvider | None = None) -> list[ChainTerm]:
    """Terms of the long exact sequence

        E_0^m(S^{p+q} | S^q) -> E^m(S^p x S^q) -> E^m(D^p x S^q) -> E_0^{m-1}(...) -> ...

    descending in k = 0, 1, ... while q - k >= 1.  Terms whose ranks fall
    outside every criterion are kept with an unconstrained rank.
    """
    if not m > 2 * p + q + 2:
        raise DomainError("m > 2p+q+2", p=p, q=q, m=m)
    provider = provider or DefaultProvider()
    chain = []
    for k in range(q):
        mk, qk = m - k, q - k
        link = _or_unknown(lambda: rank_of_verdict(criteria.link_zero_infinite(p + qk, qk, mk)))
        chain.append(ChainTerm(f"E_0^{mk}(S^{p + qk} | S^{qk})", link))
        chain.append(ChainTerm(f"E^{mk}(S^{p} x S^{qk})", _or_unknown(tori_rank, p, qk, mk, provider)))
        framed = provider.knot_rank(qk, mk) + provider.stiefel_rank(qk, m - q, p)
        chain.append(ChainTerm(f"E^{mk}(D^{p} x S^{qk})", framed))
    return chain
