"""Sweeps over dimension grids and cross-checks between the criteria."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import criteria, ranks
from .criteria import DimTriple, DomainError, Verdict
from .fcs import LatticePoint
from .ranks import RankInterval, RankProvider

FIELDS = ("p", "q", "m", "tori", "knot_pq", "knot_q", "framed", "linku",
          "rank_lo", "rank_hi", "witness_x", "witness_y", "condition")

VACUOUS_FRAMED_CONDITION = "2 | q+1 and m = 2q+1"


@dataclass(frozen=True)
class GridBounds:
    """Inclusive p and q ranges; ``m_range=None`` picks every m in the domain."""

    p_range: tuple[int, int]
    q_range: tuple[int, int]
    m_range: tuple[int, int] | None = None

    def __post_init__(self):
        ranges = [self.p_range, self.q_range] + ([self.m_range] if self.m_range else [])
        for lo, hi in ranges:
            if lo < 1 or hi < lo:
                raise ValueError(f"bad range {lo}..{hi}: need 1 <= lo <= hi")


def enumerate_domain(bounds: GridBounds) -> list[DimTriple]:
    out = []
    for p in range(bounds.p_range[0], bounds.p_range[1] + 1):
        for q in range(bounds.q_range[0], bounds.q_range[1] + 1):
            if bounds.m_range is None:
                # generous candidate strip; the domain predicate does the cutting
                ms = range(p + q + 1, 2 * p + 2 * q + 5)
            else:
                ms = range(bounds.m_range[0], bounds.m_range[1] + 1)
            out.extend(DimTriple(p, q, m) for m in ms if criteria.tori_domain(p, q, m) is None)
    return out


@dataclass(frozen=True)
class CensusRecord:
    p: int
    q: int
    m: int
    tori: Verdict
    knot_pq: Verdict
    knot_q: Verdict
    framed: Verdict
    linku: Verdict
    rank: RankInterval
    witness: LatticePoint | None = None
    condition: str | None = None

    @property
    def triple(self) -> DimTriple:
        return DimTriple(self.p, self.q, self.m)

    def row(self) -> dict[str, object]:
        return {
            "p": self.p, "q": self.q, "m": self.m,
            "tori": self.tori.value, "knot_pq": self.knot_pq.value, "knot_q": self.knot_q.value,
            "framed": self.framed.value, "linku": self.linku.value,
            "rank_lo": self.rank.lo,
            "rank_hi": int(self.rank.hi) if self.rank.bounded else "inf",
            "witness_x": self.witness.x if self.witness else None,
            "witness_y": self.witness.y if self.witness else None,
            "condition": self.condition,
        }

    @classmethod
    def from_row(cls, row: dict) -> "CensusRecord":
        def opt_int(v):
            return None if v in (None, "") else int(v)

        wx, wy = opt_int(row["witness_x"]), opt_int(row["witness_y"])
        return cls(
            p=int(row["p"]), q=int(row["q"]), m=int(row["m"]),
            tori=Verdict(row["tori"]), knot_pq=Verdict(row["knot_pq"]), knot_q=Verdict(row["knot_q"]),
            framed=Verdict(row["framed"]), linku=Verdict(row["linku"]),
            rank=RankInterval(int(row["rank_lo"]), ranks.parse_bound(str(row["rank_hi"]))),
            witness=LatticePoint(wx, wy) if wx is not None else None,
            condition=row["condition"] or None,
        )


def census_record(t: DimTriple, provider: RankProvider | None = None) -> CensusRecord:
    p, q, m = t
    tori = criteria.knotted_tori_infinite(p, q, m)
    return CensusRecord(
        p, q, m,
        tori=tori.value,
        knot_pq=criteria.knot_infinite(p + q, m).value,
        knot_q=criteria.knot_infinite(q, m).value,
        framed=criteria.framed_knot_infinite(p, q, m).value,
        linku=criteria.link_unknotted_infinite(p + q, q, m).value,
        rank=ranks.tori_rank(p, q, m, provider),
        witness=tori.witness,
        condition=tori.condition,
    )


def _chunk_records(args):
    triples, provider = args
    return [census_record(t, provider) for t in triples]


def run_census(bounds: GridBounds, provider: RankProvider | None = None,
               workers: int = 1) -> list[CensusRecord]:
    triples = enumerate_domain(bounds)
    if workers <= 1 or len(triples) < 2 * workers:
        return [census_record(t, provider) for t in triples]
    chunks = [triples[k::workers] for k in range(workers)]
    with ProcessPoolExecutor(workers) as pool:
        parts = pool.map(_chunk_records, [(c, provider) for c in chunks])
        records = [r for part in parts for r in part]
    return sorted(records, key=lambda r: r.triple)


# -- consistency -------------------------------------------------------------

@dataclass
class ConsistencyReport:
    equivalence_failures: list[DimTriple] = field(default_factory=list)
    chain_violations: list[tuple[DimTriple, str]] = field(default_factory=list)
    vacuity_failures: list[DimTriple] = field(default_factory=list)
    symmetry_failures: list[DimTriple] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not (self.equivalence_failures or self.chain_violations
                    or self.vacuity_failures or self.symmetry_failures)

    def as_dict(self) -> dict:
        return {
            "checked": self.checked,
            "equivalence_failures": [list(t) for t in self.equivalence_failures],
            "chain_violations": [[list(t), msg] for t, msg in self.chain_violations],
            "vacuity_failures": [list(t) for t in self.vacuity_failures],
            "symmetry_failures": [list(t) for t in self.symmetry_failures],
        }


def consistency_report(bounds: GridBounds, provider: RankProvider | None = None) -> ConsistencyReport:
    """Run the cross-checks over every in-domain triple.

    * the direct torus criterion against the component-wise one,
    * the rank inequality along the long exact sequence (a rank/verdict
      clash inside the torus rank, or a chain refusing a triple the
      enumeration accepted, is reported here too),
    * the framed-knot condition ``m = 2q+1`` must never hold in the domain,
    * swapping the two components of every link group the sequence passes
      through must not change its finiteness.
    """
    report = ConsistencyReport()
    for t in enumerate_domain(bounds):
        report.checked += 1
        p, q, m = t
        try:
            direct = criteria.knotted_tori_infinite(p, q, m)
            via = criteria.knotted_tori_infinite_via_components(p, q, m)
            if direct.value != via.value:
                report.equivalence_failures.append(t)
        except DomainError:
            report.equivalence_failures.append(t)
        try:
            chain = ranks.theorem3_chain(p, q, m, provider)
            for v in ranks.chain_rank_check(chain):
                report.chain_violations.append((t, str(v)))
        except (ranks.RankConflict, DomainError) as exc:
            report.chain_violations.append((t, str(exc)))
        if VACUOUS_FRAMED_CONDITION in criteria.framed_knot_conditions(p, q, m):
            report.vacuity_failures.append(t)
        if not _links_swap_symmetric(p, q, m):
            report.symmetry_failures.append(t)
    return report


def _links_swap_symmetric(p: int, q: int, m: int) -> bool:
    for k in range(q):
        a, b, mk = p + q - k, q - k, m - k
        forward = criteria.link_unknotted_infinite(a, b, mk)
        backward = criteria.link_unknotted_infinite(b, a, mk)
        if forward.value != backward.value:
            return False
    return True


# -- serialisation -----------------------------------------------------------

def _csv_cell(v) -> str:
    return "" if v is None else str(v)


def records_to_csv(records: list[CensusRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for r in records:
        row = r.row()
        writer.writerow([_csv_cell(row[f]) for f in FIELDS])
    return buf.getvalue()


def records_from_csv(text: str) -> list[CensusRecord]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != FIELDS:
        raise ValueError(f"unexpected census header {reader.fieldnames}")
    return [CensusRecord.from_row(row) for row in reader]


def records_to_json(records: list[CensusRecord]) -> str:
    return json.dumps([r.row() for r in records], indent=1)


def records_from_json(text: str) -> list[CensusRecord]:
    return [CensusRecord.from_row(row) for row in json.loads(text)]
