import json

import pytest

from signedcayley import __version__
from signedcayley.audit import (CONFIRMED, PARTIAL, REFUTED, AuditError, ClaimId, a4_cubic_connection_set,
                                all_confirmed, audit_claim, enumerate_cubic_cayley_classes,
                                full_report, name_cubic, report_json, revalidate)
from signedcayley.cayley import CayleySpec, build_cayley
from signedcayley.domination import gamma_naive
from signedcayley.graphs import are_isomorphic, hypercube, mobius_ladder, prism
from signedcayley.groups import CATALOG, catalog_group, inverse_closed_subsets

# verdicts and sweep sizes at max order 12; every gamma behind them was
# cross-checked against exhaustive enumeration
EXPECTED = {
    "THM_N1": (CONFIRMED, 1204),
    "THM_N2_VALUE": (CONFIRMED, 46),
    "THM_N3_VALUE": (CONFIRMED, 130),
    "LEM_K3": (CONFIRMED, 180),
    "LEM_COSET_MULTIPARTITE": (CONFIRMED, 120),
    "THM_N4_VALUE": (REFUTED, 176),
    "REMARK_Z2": (CONFIRMED, 1204),
    "CLASS_N_MINUS_2": (CONFIRMED, 1204),
    "CLASS_S2_N_MINUS_4": (CONFIRMED, 48),
    "CLASS_S3_N_MINUS_4": (REFUTED, 134),
    "CUBIC_CLASSES_8": (CONFIRMED, 46),
    "CUBIC_CLASSES_10": (CONFIRMED, 24),
    "CUBIC_CLASSES_12_RESTRICTED": (CONFIRMED, 44),
    "FIG4_A4": (REFUTED, 1),
}
NON_GENERATING_OK = {"LEM_K3"}


@pytest.fixture(scope="module")
def report():
    return full_report(12)


def _claim(doc, cid):
    return next(c for c in doc["claims"] if c["id"] == cid)


def test_schema(report):
    assert set(report) == {"version", "max_order", "claims"}
    assert report["version"] == __version__ and report["max_order"] == 12
    assert [c["id"] for c in report["claims"]] == [c.value for c in ClaimId]
    for c in report["claims"]:
        assert set(c) == {"id", "status", "scope", "instances", "witnesses", "counterexamples", "notes"}
        assert c["status"] in (CONFIRMED, REFUTED, PARTIAL) and c["scope"] == 12
        for e in c["witnesses"] + c["counterexamples"]:
            assert set(e) == {"group", "connection_set", "gamma", "labeling"}


def test_verdicts_and_counts(report):
    got = {c["id"]: (c["status"], c["instances"]) for c in report["claims"]}
    assert got == EXPECTED


def test_status_invariants(report):
    for c in report["claims"]:
        if c["status"] == REFUTED:
            assert c["counterexamples"]
        if c["status"] == CONFIRMED:
            assert c["instances"] > 0


def test_every_entry_revalidates(report):
    for c in report["claims"]:
        for e in c["witnesses"] + c["counterexamples"]:
            assert revalidate(e, require_generating=c["id"] not in NON_GENERATING_OK) == [], (c["id"], e)


def test_report_deterministic(report):
    assert report_json(full_report(12)) == report_json(report)


def test_parallel_merge_matches_serial(report):
    assert report_json(full_report(12, jobs=3)) == report_json(report)


def test_timing_is_opt_in():
    doc = full_report(4, claims=["THM_N1"], timing=True)
    assert doc["runtime_seconds"] >= 0
    assert "runtime_seconds" not in full_report(4, claims=["THM_N1"])


def test_sweep_completeness(report):
    gen = {t: [len(S) for S in inverse_closed_subsets(catalog_group(t), require_generating=True)]
           for n in range(2, 13) for t in CATALOG[n]}
    total = sum(len(v) for v in gen.values())
    assert _claim(report, "THM_N1")["instances"] == total
    for cid, off in (("THM_N2_VALUE", 2), ("THM_N3_VALUE", 3), ("THM_N4_VALUE", 4)):
        count = sum(1 for t, sizes in gen.items() for k in sizes
                    if k == catalog_group(t).order - off)
        assert _claim(report, cid)["instances"] == count
    assert _claim(report, "CLASS_S2_N_MINUS_4")["instances"] == sum(v.count(2) for v in gen.values())
    assert _claim(report, "CLASS_S3_N_MINUS_4")["instances"] == sum(v.count(3) for v in gen.values())
    k3 = sum(len(list(inverse_closed_subsets(catalog_group(t), 3))) for n in range(2, 13) for t in CATALOG[n])
    assert _claim(report, "LEM_K3")["instances"] == k3


def test_n2_witness_includes_z8_antipode(report):
    c = _claim(report, "THM_N2_VALUE")
    assert any(w["group"] == "Z8" and w["connection_set"] == ["1", "2", "3", "5", "6", "7"]
               and w["gamma"] == 2 for w in c["witnesses"])


def test_remark_z2_unique_instance(report):
    c = _claim(report, "REMARK_Z2")
    assert c["witnesses"] == [{"group": "Z2", "connection_set": ["1"], "gamma": 2, "labeling": [1, 1]}]


def test_n_minus_2_witnesses_per_listed_group(report):
    c = _claim(report, "CLASS_N_MINUS_2")
    assert [w["group"] for w in c["witnesses"]] == ["Z3", "Z2xZ2", "Z4", "Z5", "S3", "Z6", "Z8", "D8"]
    s3 = next(w for w in c["witnesses"] if w["group"] == "S3")
    assert s3["gamma"] == 4
    G = catalog_group("S3")
    spec = CayleySpec(G, frozenset(G.element(x) for x in ("(12)", "(13)", "(23)")))
    assert gamma_naive(build_cayley(spec)).gamma == 4


def test_s2_listed_groups(report):
    c = _claim(report, "CLASS_S2_N_MINUS_4")
    assert [w["group"] for w in c["witnesses"]] == ["Z6", "Z7", "Z8", "S3", "D8"]


def test_s3_refutation_details(report):
    c = _claim(report, "CLASS_S3_N_MINUS_4")
    groups = {e["group"] for e in c["counterexamples"]}
    # the cube attains n-4 on an unlisted group; Z12 and A4 never attain it
    assert groups == {"Z2xZ2xZ2", "Z12", "A4"}
    cube = [e for e in c["counterexamples"] if e["group"] == "Z2xZ2xZ2"]
    assert all(e["gamma"] == 4 for e in cube)
    assert all(e["gamma"] != 8 for e in c["counterexamples"] if e["group"] in ("Z12", "A4"))


def test_n4_counterexamples_have_gamma_two(report):
    c = _claim(report, "THM_N4_VALUE")
    assert len(c["counterexamples"]) == 98
    assert {e["gamma"] for e in c["counterexamples"]} == {2}
    assert {"group": "Z6", "connection_set": ["1", "5"]} in [
        {k: e[k] for k in ("group", "connection_set")} for e in c["counterexamples"]]


def test_fig4_instance():
    G, S = a4_cubic_connection_set()
    g = build_cayley(CayleySpec(G, S))
    assert set(g.degrees) == {3} and g.n == 12
    assert gamma_naive(g).gamma == 6
    assert audit_claim("FIG4_A4").status == REFUTED


def test_cubic_classes():
    eight = enumerate_cubic_cayley_classes(8)
    assert len(eight) == 2
    reps = [rep for rep, _ in eight]
    assert any(are_isomorphic(r, mobius_ladder(8)) for r in reps)
    assert any(are_isomorphic(r, hypercube(3)) for r in reps)
    ten = enumerate_cubic_cayley_classes(10)
    assert sorted(name_cubic(r) for r, _ in ten) == sorted([name_cubic(mobius_ladder(10)), name_cubic(prism(5))])
    twelve = enumerate_cubic_cayley_classes(12, ["D12", "Z12", "Z2xZ6"])
    assert len(twelve) == 3
    assert enumerate_cubic_cayley_classes(9) == []


def test_cubic_realizations_sum_to_sweep():
    for order in (8, 10):
        total = sum(len(list(inverse_closed_subsets(catalog_group(t), 3, require_generating=True)))
                    for t in CATALOG[order])
        assert sum(len(r) for _, r in enumerate_cubic_cayley_classes(order)) == total


def test_out_of_scope_is_partial():
    assert audit_claim("FIG4_A4", 10).status == PARTIAL
    assert audit_claim("CUBIC_CLASSES_12_RESTRICTED", 8).status == PARTIAL
    assert audit_claim("CLASS_S2_N_MINUS_4", 6).status == PARTIAL
    # the cube already refutes the |S| = 3 list at order 8
    assert audit_claim("CLASS_S3_N_MINUS_4", 8).status == REFUTED


def test_errors():
    with pytest.raises(AuditError):
        audit_claim("NOPE", 12)
    with pytest.raises(AuditError):
        audit_claim("THM_N1", 13)
    with pytest.raises(AuditError):
        full_report(13)


def test_all_confirmed_and_json(report):
    assert not all_confirmed(report)
    assert json.loads(report_json(report)) == report
    assert all_confirmed(full_report(6, claims=["THM_N1", "LEM_K3"]))
