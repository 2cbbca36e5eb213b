"""Acceptance criteria, one test each.

The terminal summary prints one PASS/FAIL line per criterion.
"""

import random
import time

import pytest

from knottori import ranks
from knottori.census import (
    GridBounds,
    consistency_report,
    enumerate_domain,
    records_from_csv,
    records_from_json,
    records_to_csv,
    records_to_json,
    run_census,
)
from knottori.cli import main
from knottori.criteria import (
    Verdict,
    framed_knot_conditions,
    knotted_tori_infinite,
    knotted_tori_infinite_via_components,
)
from knottori.fcs import LineEquation, fcs_contains, fcs_line_witness

from mutations import FCS_MUTATIONS, INEQUALITY_MUTATIONS
from oracles import brute_witness

GRID = GridBounds((1, 8), (1, 48))
criterion = pytest.mark.criterion


@criterion(1, "S^1 x S^5 -> S^10 is finite, under 1 ms")
def test_example_torus_is_finite(capsys):
    assert main(["tori", "--p", "1", "--q", "5", "--m", "10"]) == 0
    assert capsys.readouterr().out.strip() == "finite"
    best = float("inf")
    for _ in range(50):
        t0 = time.perf_counter()
        v = knotted_tori_infinite(1, 5, 10)
        best = min(best, time.perf_counter() - t0)
    assert v.value is Verdict.FINITE
    assert best < 1e-3


@criterion(2, "direct and component-wise torus criteria agree on the grid, under 5 s")
def test_direct_and_componentwise_agree():
    t0 = time.perf_counter()
    triples = enumerate_domain(GRID)
    bad = [t for t in triples
           if knotted_tori_infinite(*t).value is not knotted_tori_infinite_via_components(*t).value]
    elapsed = time.perf_counter() - t0
    assert len(triples) > 2000
    assert bad == []
    assert elapsed < 5.0


@criterion(3, "line witness agrees with a brute-force double loop on 10,000 random cases")
def test_line_witness_oracle():
    rng = random.Random(20240611)
    mismatches = []
    for _ in range(10_000):
        i, j = rng.randint(1, 40), rng.randint(1, 40)
        a, b, c = rng.randint(1, 20), rng.randint(1, 20), rng.randint(1, 200)
        got = fcs_line_witness(i, j, LineEquation(a, b, c))
        want = brute_witness(i, j, a, b, c)
        if (tuple(got) if got else None) != want:
            mismatches.append((i, j, a, b, c))
    assert mismatches == []


@criterion(4, "lattice sets are reflection symmetric and 2-periodic in i")
def test_symmetry_and_parity():
    failures = []
    for i in (3, 4, 5, 6):
        for j in (3, 4, 5, 6):
            for x in range(1, 65):
                for y in range(1, 65):
                    here = fcs_contains(i, j, (x, y))
                    if here != fcs_contains(j, i, (y, x)) or here != fcs_contains(i + 2, j, (x, y)):
                        failures.append((i, j, x, y))
    assert failures == []


@criterion(5, "hand-checked membership fixtures")
def test_membership_fixtures():
    for i, j in ((4, 4), (3, 4), (4, 3), (3, 3)):
        assert fcs_contains(i, j, (1, 1))
    assert fcs_contains(3, 4, (2, 3))
    assert not fcs_contains(4, 4, (2, 3))
    assert fcs_contains(3, 3, (1, 2))
    assert not fcs_contains(4, 5, (2, 1))


@criterion(6, "exact-sequence rank check and framed vacuity check are clean on the grid")
def test_chain_consistency():
    violations, vacuous = [], []
    for t in enumerate_domain(GRID):
        violations += ranks.chain_rank_check(ranks.theorem3_chain(*t))
        if "2 | q+1 and m = 2q+1" in framed_knot_conditions(*t):
            vacuous.append(t)
    assert violations == []
    assert vacuous == []


@criterion(7, "torus ranks are non-empty and agree with the verdicts on the grid")
def test_verdict_rank_compatibility():
    bad = []
    for t in enumerate_domain(GRID):
        try:
            r = ranks.tori_rank(*t)
        except ranks.RankConflict:
            bad.append((t, "empty"))
            continue
        if knotted_tori_infinite(*t).infinite:
            if r.lo < 1:
                bad.append((t, str(r)))
        elif r != ranks.RankInterval(0, 0):
            bad.append((t, str(r)))
    assert bad == []


@criterion(8, "every seeded table or inequality mutation is caught by the consistency report")
def test_mutation_sensitivity():
    assert consistency_report(GRID).ok
    missed = []
    for mutate in FCS_MUTATIONS + INEQUALITY_MUTATIONS:
        with pytest.MonkeyPatch.context() as mp:
            mutate(mp)
            if consistency_report(GRID).ok:
                missed.append(mutate.__name__)
    assert len(FCS_MUTATIONS) == 5 and len(INEQUALITY_MUTATIONS) == 3
    assert missed == []


@criterion(9, "census CSV and JSON round-trip losslessly and are byte-identical across runs")
def test_io_round_trip(tmp_path):
    bounds = GridBounds((1, 4), (1, 30))
    first = run_census(bounds)
    assert first
    csv_text, json_text = records_to_csv(first), records_to_json(first)
    assert records_from_csv(csv_text) == first
    assert records_from_json(json_text) == first
    golden_csv, golden_json = tmp_path / "census.csv", tmp_path / "census.json"
    golden_csv.write_text(csv_text)
    golden_json.write_text(json_text)
    second = run_census(bounds, workers=2)
    assert records_to_csv(second).encode() == golden_csv.read_bytes()
    assert records_to_json(second).encode() == golden_json.read_bytes()
