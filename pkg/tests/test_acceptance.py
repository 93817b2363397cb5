"""Acceptance criteria, each run at its stated size, tolerance and time budget.

Run ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per criterion.
"""

import pytest

from regseq import verify

SEED = 20240601

CRITERIA = [
    # (id, suite, kwargs, budget in seconds)
    ("1 oracle equivalence", verify.oracle_equivalence, {"trials": 500}, 120),
    ("2 monochromatic extraction", verify.colouring, {"trials": 100, "big_trials": 10}, 120),
    ("3 colouring construction", verify.colouring_construction, {"r": 2, "Ms": range(4, 13)}, 300),
    ("4 cantor / density construction", verify.cantor, {"k_max": 5, "K_max": 8}, 300),
    ("5 difference construction", verify.difference_construction, {"n_max": 5}, 600),
    ("6 dense difference", verify.dense_difference, {"trials": 100}, 120),
    ("7 sparse difference", verify.sparse_difference, {"trials": 100}, 300),
    ("8 regular to convex", verify.regular_to_convex_suite, {"trials": 200}, 60),
    ("9 smaller L", verify.smaller_l, {"trials": 200}, 60),
    ("10 ruzsa covering", verify.ruzsa, {"trials": 200}, 120),
]


@pytest.mark.parametrize("label, suite, kwargs, budget", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, suite, kwargs, budget):
    report = suite(seed=SEED, **kwargs)
    within = report.elapsed < budget
    status = "PASS" if report.passed and within else "FAIL"
    print(f"\n[{status}] criterion {label}: {report.line()} ({report.elapsed:.1f}s of {budget}s)")
    assert report.passed, report.text()
    assert within, f"took {report.elapsed:.1f}s, budget {budget}s"


def test_criterion_7_exercises_both_branches():
    report = verify.sparse_difference(trials=100, seed=SEED)
    assert report.summary["dense_branch"] > 0
    assert report.summary["with_descent"] > 0
