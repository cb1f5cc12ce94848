"""Acceptance criteria, each run at full scale with exact equality and a wall-clock bound.

Every test prints one PASS/FAIL line straight to the terminal, so
``pytest tests/test_acceptance.py`` doubles as the acceptance report.
"""

import time

import pytest

from ppsums.cli import main
from ppsums.verify import (
    coproduct_suite,
    fundamental_lemma_suite,
    involution_suite,
    matrix_suite,
    positivity_suite,
    product_suite,
    refinement_suite,
    worked_example_checks,
)


@pytest.fixture
def report(capsys):
    def emit(number, title, build, bound):
        start = time.perf_counter()
        checks = build()
        elapsed = time.perf_counter() - start
        failed = [c for c in checks if not c.ok]
        ok = bool(checks) and not failed and elapsed < bound
        with capsys.disabled():
            print(f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'}  {title}: "
                  f"{len(checks)} checks, {len(failed)} failed, {elapsed:.2f}s (bound {bound}s)")
        assert checks, "no checks were generated"
        assert not failed, "; ".join(f"{c.name}: expected {c.expected}, got {c.actual}" for c in failed[:5])
        assert elapsed < bound, f"took {elapsed:.2f}s, bound {bound}s"
        return checks
    return emit


def test_criterion_1_worked_examples(report, capsys):
    checks = report(1, "worked examples", worked_example_checks, 1.0)
    names = {c.name for c in checks}
    for needed in ("p_211 = 2m_211 + 2m_31 + 2m_22 + m_4", "p_112 = 2M_112 + M_22",
                   "p_112 = K[1_1 1_2 2_1] + K[1_2 1_1 2_1]", "p_121 = 2M_121 + 2M_13",
                   "p_121 R-matrices", "p_121 = -2F_112 + 2F_13", "p_121 Q-matrices"):
        assert needed in names
    start = time.perf_counter()
    code = main(["paper-examples"])
    out = capsys.readouterr().out
    assert code == 0 and "FAIL" not in out
    assert time.perf_counter() - start < 1.0


def test_criterion_2_fundamental_lemma(report):
    report(2, "P-partitions split over linear extensions (<=5 elements, N<=3)",
           lambda: fundamental_lemma_suite(max_elements=5, max_vars=3), 30)


def test_criterion_3_matrix_counts(report):
    report(3, "R/Rsym/Q matrix counts vs direct expansions (n<=6)", lambda: matrix_suite(6), 60)


def test_criterion_4_hopf_structure(report):
    report(4, "shuffle product and deconcatenation coproduct vs oracles (degree<=6)",
           lambda: product_suite(6) + coproduct_suite(6, max_chain=4, max_elements=5), 120)


def test_criterion_5_involutions(report):
    report(5, "psi, rho, omega on power sums (n<=7)", lambda: involution_suite(7, max_elements=5), 60)


def test_criterion_6_positivity(report):
    report(6, "positivity and triangularity of p_alpha (n<=7)", lambda: positivity_suite(7), 10)


def test_criterion_7_refinement(report):
    report(7, "rearrangement sums are symmetric and match the antichain (n<=6)",
           lambda: refinement_suite(6), 30)
