import csv
import io
import json

import pytest

from distspec import harness as H


@pytest.fixture
def cfg():
    return H.Config(nmax=5)


def test_classify():
    assert H.classify(1e-6, 1e-7) == "pass"
    assert H.classify(5e-8, 1e-7) == "inconclusive"
    assert H.classify(-5e-8, 1e-7) == "inconclusive"
    assert H.classify(-1e-6, 1e-7) == "fail"
    assert H.classify(-5e-8, 1e-7, strict=False) == "pass"
    assert H.classify(-2e-7, 1e-7, strict=False) == "fail"


def test_report_invariants():
    with pytest.raises(ValueError):
        H.VerificationReport("x", {}, "fail")
    with pytest.raises(ValueError):
        H.VerificationReport("x", {}, "inconclusive")
    with pytest.raises(ValueError):
        H.VerificationReport("x", {}, "maybe")


def test_exit_status_ignores_recorded_only():
    ok = H.VerificationReport("a", {}, "pass")
    probe = H.VerificationReport("b", {}, "fail", witness={"x": 1}, asserted=False)
    close = H.VerificationReport("c", {}, "inconclusive", margin=1e-9)
    bad = H.VerificationReport("d", {}, "fail", witness={"x": 1})
    assert H.exit_status([ok, probe]) == 0
    assert H.exit_status([ok, probe, close]) == 2
    assert H.exit_status([ok, close, bad]) == 1


def test_config_precedence(tmp_path, monkeypatch):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"eps_cmp": 1e-6, "nmax": 4, "threads": 2}))
    monkeypatch.setenv(H.THREADS_ENV, "3")
    c = H.Config.load(str(path), nmax=6)
    assert (c.eps_cmp, c.nmax, c.threads) == (1e-6, 6, 3)
    c = H.Config.load(str(path), threads=1)
    assert c.threads == 1
    path.write_text(json.dumps({"bogus": 1}))
    with pytest.raises(ValueError):
        H.Config.load(str(path))
    for bad in (dict(eps_cmp=0), dict(nmax=9), dict(threads=0), dict(subset_cap=30)):
        with pytest.raises(ValueError):
            H.Config(**bad)


def test_edge_deletion_small(cfg):
    (r,) = H.run_check(cfg, "edge_deletion", n=4)
    assert r.outcome == "pass" and r.margin > cfg.eps_cmp
    assert r.data["counts"]["graphs"] == 38
    (r,) = H.run_check(cfg, "edge_deletion", n=3)
    assert abs(r.margin - (1 + 3**0.5 - 2)) < 1e-12  # K_3 -> P_3
    with pytest.raises(ValueError):
        H.run_check(cfg, "edge_deletion", n=7)


def test_lower_bound_equality_class(cfg):
    (r,) = H.run_check(cfg, "matching_lower_bound", n=6, k=4, t=1)
    # Only the star K_{1,5} (6 labelings) has matching number 1.
    assert r.outcome == "pass" and r.data["counts"]["graphs"] == 6
    assert r.data["counts"]["equality"] == 6
    with pytest.raises(ValueError):
        H.run_check(cfg, "matching_lower_bound", n=7, k=2, t=1)


def test_join_examples(cfg):
    (r,) = H.run_check(cfg, "join_singletons", n=12, s=2, c=3)
    assert r.outcome == "pass" and r.data["counts"]["extremal"] == 1
    (r,) = H.run_check(cfg, "join_cliques", n=13, s=1, c=2, p=3)
    assert r.outcome == "pass" and r.margin > 0
    assert list(H.partitions(6, 3)) == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
    assert list(H.partitions(12, 2, 3)) == [(9, 3), (8, 4), (7, 5), (6, 6)]


def test_theorem_examples(cfg):
    (r,) = H.run_check(cfg, "matching_theorem", n=18, k=2, t=1)
    assert r.outcome == "pass" and r.asserted and (r.data["alpha"], r.data["connectivity"]) == (8, 1)
    (r,) = H.run_check(cfg, "perfect_matching_corollary", n=18, t=1)
    assert r.outcome == "pass" and r.data["witness"] == [0] and r.data["deficiency"] == 2
    (r,) = H.run_check(cfg, "perfect_matching_corollary", n=32, t=2)
    assert r.outcome == "pass"
    (r,) = H.run_check(cfg, "odd_factor_theorem", n=60, b=3, delta=3)
    assert r.outcome == "pass" and r.asserted
    (r,) = H.run_check(cfg, "odd_factor_corollary", n=38, delta=3)
    assert r.outcome == "pass" and r.data["odd_components"] == 5


def test_below_threshold_is_recorded_only(cfg):
    (r,) = H.run_check(cfg, "matching_family", n=10, k=2, t=1)
    assert not r.asserted
    (r,) = H.run_check(cfg, "odd_factor_theorem", n=32, b=1, delta=3)
    assert not r.asserted and r.data["odd_components"] == 5 and r.data["barrier"] == [0, 1, 2]


def test_closed_form_checks(cfg):
    reports = H.run_check(cfg, "printed_auxiliary", name="p_literal", count=5)
    assert reports[0].outcome == "pass" and reports[0].data["known_discrepancy"]
    assert reports[0].data["mismatch"] == 5
    (r,) = H.run_check(cfg, "printed_auxiliary", name="g", count=5)
    assert r.outcome == "pass" and r.data["agree"] == 5
    (r,) = H.run_check(cfg, "clique_bound")
    assert r.outcome == "pass"


def test_serialization_deterministic(cfg):
    a = H.run_check(cfg, "matching_family", n=17, k=3, t=1) + H.run_check(cfg, "complete_baseline", n_max=6)
    b = list(reversed(H.run_check(cfg, "complete_baseline", n_max=6) + H.run_check(cfg, "matching_family", n=17, k=3, t=1)))
    assert H.reports_to_json(a, cfg) == H.reports_to_json(b, cfg)
    doc = json.loads(H.reports_to_json(a, cfg))
    assert doc["schema"] == H.SCHEMA and [r["check_id"] for r in doc["reports"]] == ["complete_baseline", "matching_family"]
    assert "wall_time" not in doc["reports"][0]
    assert "wall_time" in json.loads(H.reports_to_json(a, cfg, timing=True))["reports"][0]
    rows = list(csv.DictReader(io.StringIO(H.reports_to_csv(a))))
    assert rows and set(rows[0]) == set(H.CSV_COLUMNS)
    assert all(r["outcome"] == "pass" and float(r["margin"]) > 0 for r in rows)


def test_threads_do_not_change_results():
    one = H.run_check(H.Config(threads=1), "matching_agreement", n=6)
    two = H.run_check(H.Config(threads=2), "matching_agreement", n=6)
    assert one[0].as_dict() == two[0].as_dict()


def test_orders():
    assert H.matching_orders(2, 1)[:3] == [18, 20, 22]
    assert H.odd_factor_orders(1, 3) == [38, 40, 42, 44, 46]
    assert H.odd_factor_orders(3, 3)[0] == 54
