import json
from pathlib import Path

import pytest

from agtop import instances
from agtop.harness import CLAIMS, OBSERVATIONS, recheck, run_claim, run_corpus, violations
from agtop.results import ClaimResult, Status
from agtop.search import corpus
from agtop.table import AGTable, parse_table

from conftest import labeled_corpus

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="module")
def iso_report():
    return run_corpus(corpus(4))


def test_registry_is_complete():
    assert sorted(CLAIMS, key=lambda c: int(c[1:])) == [f"C{i}" for i in range(1, 27)]
    assert {c.tier for c in CLAIMS.values()} == {"assert", "assert-with-left-identity", "report"}


def test_single_instance_statuses(z3, trivial):
    assert run_claim(z3, "C1").status is Status.HOLDS
    r = run_claim(z3, "C14")
    assert r.status is Status.NOT_APPLICABLE and r.note == "not anti-rectangular"
    r = run_claim(trivial, "C8")
    assert r.status is Status.VACUOUS and r.note == "no proper bi-ideals"
    assert run_claim(z3, "C11").note == "no zero"


def test_unknown_claim(z3):
    with pytest.raises(KeyError):
        run_claim(z3, "C99")
    with pytest.raises(KeyError):
        run_corpus([z3], ["C99"])


def test_claim_result_contract():
    with pytest.raises(ValueError):
        ClaimResult("C1", Status.VIOLATED)
    with pytest.raises(ValueError):
        ClaimResult("C1", Status.NOT_APPLICABLE)


def test_empty_corpus():
    report = run_corpus([])
    assert report["corpusSize"] == 0
    for entry in report["claims"].values():
        assert entry["holds"] == entry["violated"] == entry["notApplicable"] == entry["vacuous"] == 0
    assert violations(report) == 0


def test_tallies_add_up(iso_report):
    assert iso_report["corpusSize"] == 355
    for entry in iso_report["claims"].values():
        assert sum(entry[k] for k in ("holds", "violated", "notApplicable", "vacuous")) == 355
        assert len(entry["witnesses"]) == entry["violated"]
        assert sum(entry["notApplicableReasons"].values()) == entry["notApplicable"]


def test_asserted_tiers_never_violated(iso_report):
    for cid, spec in CLAIMS.items():
        if spec.tier != "report":
            assert iso_report["claims"][cid]["violated"] == 0, cid


def test_every_witness_rechecks(iso_report):
    seen = 0
    for entry in iso_report["claims"].values():
        for w in entry["witnesses"]:
            t = parse_table(w["table"])
            assert w["witness"]["check"] in OBSERVATIONS
            assert recheck(t, w["witness"])
            seen += 1
    assert seen == violations(iso_report) > 0


def test_pinned_verdicts(iso_report):
    golden = json.loads((GOLDEN / "verdicts_iso_le4.json").read_text())
    assert golden["corpusSize"] == iso_report["corpusSize"]
    got = {cid: {k: e[k] for k in ("holds", "violated", "notApplicable", "vacuous")}
           for cid, e in iso_report["claims"].items()}
    assert got == golden["claims"]


def test_not_applicable_reasons_match_hypotheses(iso_report):
    from agtop.table import check_anti_rectangular, find_zero, left_identity

    tables = list(corpus(4))
    no_li = sum(left_identity(t) is None for t in tables)
    no_zero = sum(find_zero(t) is None for t in tables)
    not_ar = sum(not check_anti_rectangular(t).holds for t in tables)
    claims = iso_report["claims"]
    assert claims["C2"]["notApplicableReasons"] == {"no left identity": no_li}
    assert claims["C12"]["notApplicableReasons"] == {"no zero": no_zero}
    assert claims["C15"]["notApplicableReasons"] == {"not anti-rectangular": not_ar}


def test_left_square_counterexample_is_real():
    # a left ideal whose square fails to be a two-sided ideal
    report = run_corpus(corpus(3, min_order=3), ["C26"])
    w = report["claims"]["C26"]["witnesses"][0]
    t = parse_table(w["table"])
    (I,) = w["witness"]["args"]["sets"]
    T = t.table
    n = t.order
    assert all(T[s][x] in I for s in range(n) for x in I)
    sq = {T[a][b] for a in I for b in I}
    assert not (all(T[s][x] in sq for s in range(n) for x in sq)
                and all(T[x][s] in sq for s in range(n) for x in sq))


def test_tampered_witness_fails_recheck(iso_report):
    w = dict(iso_report["claims"]["C26"]["witnesses"][0])
    t = parse_table(w["table"])
    bad = dict(w["witness"], observed=dict(w["witness"]["observed"], ok=True))
    assert not recheck(t, bad)


def test_parallel_matches_serial():
    tables = list(labeled_corpus(3))[:40]
    a = run_corpus(tables, ["C1", "C13", "C26"])
    b = run_corpus(tables, ["C1", "C13", "C26"], jobs=2)
    assert a == b


def test_permutation_claim_on_trivial_and_z6(trivial, z6):
    assert run_claim(trivial, "C3").status is Status.HOLDS
    r = run_claim(z6, "C3")
    assert r.status is Status.VIOLATED and recheck(z6, r.witness)


def test_zero_multiplication_instance():
    t = AGTable(((0, 0, 0), (0, 0, 0), (0, 0, 0)))
    for cid in CLAIMS:
        assert run_claim(t, cid).status is not Status.VIOLATED or CLAIMS[cid].tier == "report"
    assert run_claim(t, "C4").status is Status.HOLDS


def test_z2_anti_rectangular_suite(z2):
    for cid in ("C14", "C15", "C16", "C25"):
        assert run_claim(z2, cid).status is Status.HOLDS


def test_named_instances_on_asserted_claims():
    for make in instances.NAMED.values():
        t = make()
        if not t.is_left_invertive:
            continue
        for cid, spec in CLAIMS.items():
            if spec.tier != "report":
                assert run_claim(t, cid).status is not Status.VIOLATED, (t.name, cid)
