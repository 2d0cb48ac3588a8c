import json

import pytest

from socle_lab.experiments import (
    NOT_APPLICABLE, PASS, ExperimentReport, example_ideals, example_ring, index_search,
    reproduce_example, sci_probe, verify_dim1, verify_dim2,
)
from socle_lab.field import Field
from socle_lab.ring import RingPresentation
from socle_lab.zerodim import index_of_reducibility


def test_example_ring_shape():
    R, A = example_ring(3)
    assert R.names == ("x", "y", "z_3") and A.names == ("x", "y", "z_3", "w")
    assert A.dimension() == 3
    Q, Qp = example_ideals(R, 4)
    assert [str(g) for g in Q] == ["x^4", "y^4", "z_3^4"]
    assert str(Qp[1]) == "x*y^3"
    with pytest.raises(ValueError):
        example_ring(1)


def test_reproduce_columns_agree():
    rep = reproduce_example(2, [3])
    row = rep.records[0]
    assert (row["index_Q"], row["index_Q_prime"]) == (row["shift_Q"], row["shift_Q_prime"]) == (2, 3)
    assert rep.verdict == PASS


def test_small_characteristic_warns():
    with pytest.warns(UserWarning, match="characteristic"):
        reproduce_example(2, [3], Field.prime(3))


def test_records_are_recheckable(embedded):
    rep = verify_dim1(embedded, samples=4, seed=3)
    for r in rep.records[1:]:
        assert index_of_reducibility(r["gens"], embedded).index == r["index"]


def test_reports_deterministic(plane):
    a = verify_dim2(plane, samples=10, seed=4).to_jsonl()
    b = verify_dim2(plane, samples=10, seed=4).to_jsonl()
    assert a == b
    assert verify_dim2(plane, samples=10, seed=5).to_jsonl() != a
    lines = [json.loads(s) for s in a.splitlines()]
    assert lines[0]["seed"] == 4 and lines[-1]["verdict"] == PASS


def test_regular_plane_dim2(plane):
    rep = verify_dim2(plane, samples=10, seed=0)
    pairs = [r for r in rep.records if r["kind"] == "pair"]
    assert pairs and all((r["index"], r["socdim_H1"], r["socdim_H2"]) == (1, 0, 1) for r in pairs)


def test_depth_zero_not_applicable(gf):
    A = RingPresentation(gf, "xyz", ["x^2, x*y, x*z"])
    assert A.dimension() == 2
    rep = verify_dim2(A, samples=5)
    assert rep.verdict == NOT_APPLICABLE and "depth 0" in rep.summary


def test_index_search_example_spread(example2):
    per_ell, stable, _ = index_search(example2, samples=5, seed=0, max_power=5)
    assert stable is None
    assert all({2, 3} <= set(per_ell[ell]) for ell in (3, 4, 5))


def test_sci_probe_examples(plane, embedded):
    rep = sci_probe(plane, max_power=3, samples=3)
    assert all(r["found"] for r in rep.records)
    rep = sci_probe(embedded, max_power=4, samples=8)
    assert [r["found"] for r in rep.records][2:] == [False, False]
    assert all(r["min_index"] == 2 for r in rep.records[2:])


def test_table_rendering():
    rep = ExperimentReport("demo", "ab" * 32, 0, [{"a": 1, "b": [1, 2]}, {"a": None}], PASS, "ok")
    text = rep.to_table()
    assert "demo" in text and "[1,2]" in text and "verdict: PASS  ok" in text
