import json

import pytest

import latdual as ld
from latdual.theorems import REGISTRY, REGISTRY_IDS, TheoremCheck

PINNED_IDS = (
    "PROP_2_2", "LEM_2_3", "PROP_2_5", "THM_2_6", "PLOSCICA_LEMMA",
    "LEM_3_1", "THM_3_2", "LEM_3_4", "LEM_3_5", "PROP_3_7",
    "THM_3_8", "THM_3_10", "PROP_3_12", "THM_3_13", "THM_3_15",
    "THM_4_1", "THM_4_2", "COR_4_5", "THM_4_6_I", "THM_4_6_II",
    "THM_4_6_III", "THM_4_7", "PROP_4_8", "COR_4_9", "THM_4_10",
    "THM_4_13", "LEM_5_1", "PROP_5_2_A", "PROP_5_2_B", "THM_5_3",
    "COR_5_6",
)

# id -> (checked, non-converse witnesses) at bound 6
EXPECT_AT_6 = {rid: (25, 0) for rid in PINNED_IDS}
for rid in ("THM_2_6", "PLOSCICA_LEMMA", "THM_3_13", "THM_3_15", "THM_4_6_I",
            "THM_4_6_II", "THM_4_6_III", "THM_4_7", "PROP_4_8"):
    EXPECT_AT_6[rid] = (66, 0)
EXPECT_AT_6["THM_4_10"] = (89, 0)
EXPECT_AT_6["THM_4_2"] = (25, 4)
for rid in ("PROP_5_2_A", "PROP_5_2_B", "THM_5_3", "COR_5_6"):
    EXPECT_AT_6[rid] = (25, 1)


def test_registry_listing():
    assert REGISTRY_IDS == PINNED_IDS
    assert tuple(r.id for r in REGISTRY) == PINNED_IDS
    statements = [r.statement for r in REGISTRY]
    assert all(s and s == s.strip() for s in statements)
    assert len(set(statements)) == len(statements)


def test_full_verification_passes():
    checks = ld.verify_theorems(max_n=6)
    assert tuple(c.id for c in checks) == PINNED_IDS
    for c in checks:
        assert isinstance(c, TheoremCheck)
        assert c.passed, c.id
        assert c.counterexamples == []
        want_checked, want_nc = EXPECT_AT_6[c.id]
        assert c.checked == want_checked, c.id
        assert len(c.non_converse_witnesses) == want_nc, c.id


def test_report_rendering():
    checks = ld.verify_theorems(max_n=5)
    text = ld.render_report(checks)
    lines = text.splitlines()
    assert lines[0] == "PASS PROP_2_2 [lattices(n<=5)] checked 10"
    assert lines[-1] == "31/31 statements verified"
    assert sum(line.startswith("PASS ") for line in lines) == 31
    assert not any(line.startswith("FAIL") for line in lines)


def test_report_json_structure():
    checks = ld.verify_theorems(max_n=5)
    obj = ld.report_to_json(checks)
    assert set(obj) == {"results"}
    assert tuple(obj["results"]) == PINNED_IDS
    for rid, entry in obj["results"].items():
        assert set(entry) == {
            "statement", "domain", "pass", "checked",
            "counterexamples", "non_converse_witnesses",
        }
        assert entry["pass"] is True
        assert entry["checked"] > 0
        json.dumps(entry)  # witnesses must already be plain data


def test_reports_are_deterministic():
    a = ld.report_to_json(ld.verify_theorems(max_n=6))
    b = ld.report_to_json(ld.verify_theorems(max_n=6))
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_witnesses_embed_replayable_lattices():
    checks = {c.id: c for c in ld.verify_theorems(max_n=6)}
    for w in checks["THM_5_3"].non_converse_witnesses:
        L = ld.lattice_from_json(w["lattice"])
        assert ld.check_lattice_property("mod", L)
        assert not ld.check_lattice_property("fis", L)


def test_search_finds_the_documented_gap():
    hits = ld.search_counterexamples("jmlsm", "lsm", max_n=6)
    assert [L.n for L in hits] == [6]
    assert ld.lattice_isomorphic(hits[0], ld.fixture("L3D"))[0]


def test_search_respects_known_implications():
    assert ld.search_counterexamples("dist", "mod", max_n=6) == []
    assert ld.search_counterexamples("lsm", "jmlsm", max_n=6) == []


def test_search_with_digraph_conditions():
    hits = ld.search_counterexamples("mod", "fis", max_n=6)
    assert [L.n for L in hits] == [6]
    hits = ld.search_counterexamples("mod", "dist", max_n=5)
    assert [L.n for L in hits] == [5]
    assert ld.lattice_isomorphic(hits[0], ld.fixture("M3"))[0]


def test_search_validates_names():
    with pytest.raises(ld.UnknownProperty):
        ld.search_counterexamples("mod", "sparkles", max_n=4)
    with pytest.raises(ld.UnknownProperty):
        ld.search_counterexamples("sparkles", "mod", max_n=4)
