"""Acceptance criteria, one test each.

Every test records a one-line PASS/FAIL summary (shown at the end of the
pytest run) and then asserts.  Run this file directly to print just those
lines.
"""

import os
import sys
import tempfile
import time

import pytest

from distspec import forms, harness as H
from distspec.cli import main as cli_main

CFG = H.Config()


def _line(record, number, title, ok, detail, elapsed, budget):
    ok = ok and elapsed < budget
    record(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  "
           f"({detail}; {elapsed:.1f}s of {budget:g}s)")
    return ok


def _run(check_id, plans):
    start = time.perf_counter()
    reports = []
    for params in plans:
        reports.extend(H.run_check(CFG, check_id, **params))
    return reports, time.perf_counter() - start


def _counts(reports):
    out = {o: 0 for o in H.OUTCOMES}
    for r in reports:
        for k, v in r.data.get("counts", {}).items():
            if k in out:
                out[k] += v
    return out


def _all_pass(reports):
    return all(r.outcome == "pass" and r.asserted for r in reports)


def test_criterion_01_complete_baseline(acceptance_line):
    reports, dt = _run("complete_baseline", [{"n_min": 2, "n_max": 60, "tol": 1e-8}])
    (r,) = reports
    ok = _line(acceptance_line, 1, "complete-graph baseline n=2..60", r.outcome == "pass",
               f"slack {r.margin:.2e} under 1e-8", dt, 5)
    assert ok, r.witness


def test_criterion_02_quotient_consistency(acceptance_line):
    reports, dt = _run("quotient_consistency",
                       [{"variant": v, "count": 50, "rel_tol": 1e-6} for v in forms.VARIANTS])
    tuples = sum(r.params["count"] for r in reports)
    worst = max(r.data["max_relative_error"] for r in reports)
    ok = _line(acceptance_line, 2, f"cubic root vs full matrix on {tuples} tuples", _all_pass(reports),
               f"max relative error {worst:.2e}", dt, 30)
    assert ok and tuples == 200, [r.witness for r in reports if r.witness]


def test_criterion_03_printed_polynomials(acceptance_line):
    start = time.perf_counter()
    reports = []
    for v in forms.VARIANTS:
        reports += H.run_check(CFG, "printed_charpoly", variant=v, count=100)
    for name in H.PRINTED_AUXILIARY:
        reports += H.run_check(CFG, "printed_auxiliary", name=name)
    reports += H.run_check(CFG, "clique_bound")
    dt = time.perf_counter() - start
    known = sorted(r.params["name"] for r in reports
                   if r.check_id == "printed_auxiliary" and r.data["mismatch"])
    ok = _line(acceptance_line, 3, "determinant expansions equal the closed-form cubics (4 x 100 tuples)",
               _all_pass(reports), f"known discrepancies reported: {', '.join(known) or 'none'}", dt, 5)
    assert ok, [r.witness for r in reports if r.witness]


def test_criterion_04_edge_deletion(acceptance_line):
    reports, dt = _run("edge_deletion", [{"n": n} for n in range(2, 7)])
    c = _counts(reports)
    margin = min(r.margin for r in reports if r.margin is not None)
    ok = _line(acceptance_line, 4, "edge deletion raises the radius, n <= 6",
               _all_pass(reports) and c["inconclusive"] == 0 and margin > 1e-7,
               f"{c['pass']} deletions, min margin {margin:.3e}", dt, 600)
    assert ok, [r.witness for r in reports if r.witness]


@pytest.mark.slow
def test_criterion_05_matching_agreement(acceptance_line):
    reports, dt = _run("matching_agreement", [{"n": n} for n in range(1, 8)])
    c = _counts(reports)
    ok = _line(acceptance_line, 5, "blossom equals Berge-Tutte on connected graphs n <= 7",
               _all_pass(reports), f"{c['pass']} graphs", dt, 1800)
    assert ok, [r.witness for r in reports if r.witness]


def test_criterion_06_odd_factor_criterion(acceptance_line):
    reports, dt = _run("odd_factor_criterion", [{"n": n, "b": b} for n in (4, 6) for b in (1, 3)])
    c = _counts(reports)
    ok = _line(acceptance_line, 6, "deletion criterion equals factor search (n in {4,6}, b in {1,3})",
               _all_pass(reports), f"{c['pass']} graph/b pairs", dt, 300)
    assert ok, [r.witness for r in reports if r.witness]


@pytest.mark.slow
def test_criterion_07_matching_lower_bound(acceptance_line):
    reports, dt = _run("matching_lower_bound",
                       [{"n": 6, "k": 2, "t": 1}, {"n": 7, "k": 3, "t": 1}, {"n": 6, "k": 4, "t": 1}])
    graphs = sum(r.data["counts"].get("graphs", 0) for r in reports)
    equal = sum(r.data["counts"].get("equality", 0) for r in reports)
    vacuous = any(r.data["vacuous"] for r in reports)
    ok = _line(acceptance_line, 7, "radius lower bound under small matching number",
               _all_pass(reports) and not vacuous,
               f"{graphs} graphs, {equal} equality cases all extremal", dt, 600)
    assert ok, [r.witness for r in reports if r.witness]


def test_criterion_08_matching_sweeps(acceptance_line):
    plans = [{"n": n, "k": k, "t": t} for k, t in H.MATCHING_SWEEP_PAIRS for n in H.matching_orders(k, t)]
    reports, dt = _run("matching_theorem", plans)
    c = _counts(reports)
    ok = _line(acceptance_line, 8, "matching family sweeps at and above 9k+10t-11",
               _all_pass(reports) and c["fail"] == 0 and c["inconclusive"] == 0,
               f"{len(reports)} orders, {c['pass']} comparisons", dt, 60)
    assert ok, [r.witness for r in reports if r.witness]


def test_criterion_09_odd_factor_sweeps(acceptance_line):
    plans = [{"n": n, "b": b, "delta": d} for b, d in H.ODD_FACTOR_SWEEP_PAIRS for n in H.odd_factor_orders(b, d)]
    reports, dt = _run("odd_factor_theorem", plans)
    c = _counts(reports)
    ok = _line(acceptance_line, 9, "odd-factor extremal certificate and family sweeps",
               _all_pass(reports) and c["inconclusive"] == 0,
               f"{len(reports)} orders, {c['pass']} comparisons", dt, 120)
    assert ok, [r.witness for r in reports if r.witness]


def test_criterion_10_determinism(acceptance_line):
    start = time.perf_counter()
    with tempfile.TemporaryDirectory() as tmp:
        paths = [os.path.join(tmp, f"run{i}.json") for i in range(2)]
        codes = [cli_main(["verify", "all", "--nmax", "5", "--json", p]) for p in paths]
        blobs = [open(p, "rb").read() for p in paths]
    dt = time.perf_counter() - start
    ok = _line(acceptance_line, 10, "two 'verify all' runs give byte-identical JSON",
               blobs[0] == blobs[1] and codes == [0, 0], f"{len(blobs[0])} bytes, exit codes {codes}",
               dt, 600)
    assert ok


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(print)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
