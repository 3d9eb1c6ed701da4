"""Acceptance gate: every verification criterion, one PASS/FAIL line each.

Each test runs one criterion from the shared acceptance module, prints its
status line, and asserts it passed.  Known-deficient bound criteria are run
faithfully and left to fail where the stated bounds do not hold; see the
criterion details in the failure output for the offending subcases.
"""

import pytest

from linecapture.acceptance import CRITERIA, SUITES, run_criteria


def _run(number):
    result = CRITERIA[number]()
    print(f"criterion {result.number}: {result.status} — {result.name}")
    for line in result.details:
        print(f"  {line}")
    assert result.passed, f"criterion {number} failed: {result.details}"


def test_criterion_01_fk_away_exactness():
    _run(1)


def test_criterion_02_fk_toward_exactness():
    _run(2)


def test_criterion_03_nd_away_opposite_exactness():
    _run(3)


def test_criterion_04_nd_away_zigzag_bound_and_turns():
    _run(4)


def test_criterion_05_nd_toward_exactness():
    _run(5)


def test_criterion_06_ns_away_guessing_schedule():
    _run(6)


def test_criterion_07_ns_toward_exactness():
    _run(7)


def test_criterion_08_nk_away_bound():
    _run(8)


def test_criterion_09_theory_identities():
    _run(9)


def test_criterion_10_knowledge_isolation():
    _run(10)


def test_suites_cover_every_criterion_exactly_once():
    numbers = sorted(n for suite in SUITES.values() for n in suite)
    assert numbers == sorted(CRITERIA)


def test_run_criteria_rejects_unknown_numbers():
    with pytest.raises(ValueError):
        run_criteria([99])
