"""Acceptance gate: every criterion at its stated (exact) tolerance.

Each test prints one pass/fail line (visible with `pytest -s`); the
elapsed time is reported for comparison against the documented budgets
but never asserted, since wall-clock limits depend on the host.
"""

import time

from classconv import verify


def _run(criterion: str, suites: list[verify.SuiteResult]) -> None:
    elapsed = sum(s.elapsed for s in suites)
    ok = all(s.ok for s in suites)
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s)")
    if not ok:
        for s in suites:
            for c in s.checks:
                if not c.ok:
                    print(f"  failed: {c.line()}")
    assert ok, f"criterion {criterion} failed"


def test_criterion_1_section6_product_and_truncations():
    _run("1 section-6 product and truncations", [verify.suite_section6()])


def test_criterion_2_and_3_section11_tables():
    result = verify.suite_section11()
    a_rows = [c for c in result.checks if c.label.startswith("a(")]
    assert len(a_rows) == 17
    _run("2+3 section-11 a-table and C-class rows", [result])


def test_criterion_4_oracle_equivalence():
    _run("4 oracle equivalence up to total size 7", [verify.suite_oracle(7)])


def test_criterion_5_fillings():
    _run("5 filling counts and worked example", [verify.suite_fillings(4)])


def test_criterion_6_isomorphism():
    _run("6 evaluation isomorphism", [verify.suite_homomorphism()])


def test_criterion_7_filtrations():
    _run("7 filtrations and gamma inequalities",
         [verify.suite_filtrations(5), verify.suite_gamma(8)])


def test_criterion_8_counting_identities():
    _run("8 counting identities and semisimplicity checks",
         [verify.suite_semigroup(3)])
