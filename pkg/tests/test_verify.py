from __future__ import annotations

import time

from scx import generators as gen
from scx.complex import SimplicialComplex
from scx.verify import run_suite


def test_quick_suite_passes_fast():
    t0 = time.perf_counter()
    rep = run_suite("quick")
    assert time.perf_counter() - t0 < 5
    assert rep.passed, rep.to_text()


def test_quick_is_subset_of_paper():
    quick = {c.claim_id for c in run_suite("quick", seeds=5).checks}
    paper = {c.claim_id for c in run_suite("paper", kmax=3, seeds=10).checks}
    assert quick <= paper


def test_report_deterministic_across_runs_and_threads():
    a = run_suite("quick", seeds=5, threads=1).to_json(timing=False)
    b = run_suite("quick", seeds=5, threads=1).to_json(timing=False)
    c = run_suite("quick", seeds=5, threads=4).to_json(timing=False)
    assert a == b == c


def test_every_check_cites_a_statement():
    rep = run_suite("quick", seeds=3)
    assert all(c.anchor and c.bound for c in rep.checks)
    assert rep.to_document()["passed"] is rep.passed


def test_rational_values_are_exact_strings():
    rep = run_suite("quick", seeds=3)
    chk = next(c for c in rep.checks if c.claim_id == "xk.m2.k3.h_top_chain")
    assert chk.values["h_top_chain"] == "6/5"


def _corrupted_xk(m, k):
    # drops the last glued simplex, so the radius falls short at k = 2
    X = gen.xk(m, k)
    if k < 2:
        return X
    return SimplicialComplex(X.maximal_simplices[:-1])


def test_corrupted_generator_fails_radius_check():
    rep = run_suite("quick", seeds=3, factories={"xk": _corrupted_xk})
    assert not rep.passed
    failed = {c.claim_id for c in rep.checks if not c.passed}
    assert "xk.m2.k3.radius" in failed
    assert all(c.passed for c in rep.checks if not c.claim_id.startswith("xk."))
