import json

import pytest
from hypothesis import given, settings, strategies as st

from knottori.census import (
    FIELDS,
    CensusRecord,
    GridBounds,
    consistency_report,
    enumerate_domain,
    records_from_csv,
    records_from_json,
    records_to_csv,
    records_to_json,
    run_census,
)
from knottori.criteria import Verdict
from knottori.ranks import RankInterval

from mutations import flip_oe_odd_column, shift_oo_row
from oracles import in_tori_domain

INF, FIN = Verdict.INFINITE, Verdict.FINITE


@pytest.mark.parametrize("p, q, expected", [
    (1, 5, [(1, 5, 10)]),
    (1, 6, [(1, 6, 11)]),
    (1, 3, []),
    (2, 9, [(2, 9, 16), (2, 9, 17)]),
])
def test_enumerate_examples(p, q, expected):
    assert enumerate_domain(GridBounds((p, p), (q, q))) == expected


@given(st.integers(1, 10), st.integers(1, 60))
def test_enumerate_matches_brute_force(p, q):
    got = enumerate_domain(GridBounds((p, p), (q, q)))
    assert got == [(p, q, m) for m in range(1, 4 * (p + q)) if in_tori_domain(p, q, m)]


def test_explicit_m_range_is_filtered():
    assert enumerate_domain(GridBounds((1, 1), (5, 6), (1, 100))) == [(1, 5, 10), (1, 6, 11)]


@pytest.mark.parametrize("bad", [((0, 2), (1, 3)), ((1, 2), (4, 3)), ((1, 1), (1, 1), (0, 4))])
def test_bounds_validated(bad):
    with pytest.raises(ValueError):
        GridBounds(*bad)


def test_census_rows():
    a, b = run_census(GridBounds((1, 1), (5, 6)))
    assert a.row() == {
        "p": 1, "q": 5, "m": 10, "tori": "finite", "knot_pq": "finite", "knot_q": "finite",
        "framed": "finite", "linku": "finite", "rank_lo": 0, "rank_hi": 0,
        "witness_x": None, "witness_y": None, "condition": None,
    }
    assert (b.tori, b.knot_pq, b.linku, b.condition) == (INF, INF, INF, "4 | p+q+1")
    assert b.rank == RankInterval(2)
    assert b.row()["rank_hi"] == "inf"


def test_census_records_fcs_witness():
    recs = [r for r in run_census(GridBounds((1, 4), (1, 30))) if r.witness is not None]
    assert recs and all(r.condition.startswith("FCS(") for r in recs)


def test_empty_grid():
    bounds = GridBounds((1, 1), (1, 3))
    assert run_census(bounds) == []
    assert records_to_json([]) == "[]"
    assert records_to_csv([]) == ",".join(FIELDS) + "\n"
    report = consistency_report(bounds)
    assert report.ok and report.checked == 0


def test_round_trips():
    recs = run_census(GridBounds((1, 3), (1, 20)))
    assert records_from_csv(records_to_csv(recs)) == recs
    assert records_from_json(records_to_json(recs)) == recs
    assert records_to_csv(run_census(GridBounds((1, 3), (1, 20)))) == records_to_csv(recs)


def test_json_uses_inf_string():
    rows = json.loads(records_to_json(run_census(GridBounds((1, 1), (6, 6)))))
    assert rows[0]["rank_hi"] == "inf"


def test_csv_header_checked():
    with pytest.raises(ValueError):
        records_from_csv("p,q\n1,2\n")


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 4))
def test_parallel_matches_serial(workers):
    bounds = GridBounds((1, 3), (1, 24))
    assert run_census(bounds, workers=workers) == run_census(bounds)


def test_record_triple():
    r = run_census(GridBounds((1, 1), (5, 5)))[0]
    assert r.triple == (1, 5, 10) and isinstance(r, CensusRecord)


def test_consistency_report_clean():
    report = consistency_report(GridBounds((1, 4), (1, 30)))
    assert report.ok and report.checked > 100
    assert set(report.as_dict()) == {
        "checked", "equivalence_failures", "chain_violations", "vacuity_failures", "symmetry_failures",
    }


def test_report_catches_a_corrupted_table(monkeypatch):
    flip_oe_odd_column(monkeypatch)
    report = consistency_report(GridBounds((1, 4), (1, 30)))
    assert report.equivalence_failures and report.chain_violations


def test_swap_check_catches_asymmetric_table(monkeypatch):
    shift_oo_row(monkeypatch)
    report = consistency_report(GridBounds((1, 8), (1, 48)))
    assert report.symmetry_failures and not report.equivalence_failures
