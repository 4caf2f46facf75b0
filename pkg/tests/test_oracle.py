# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from hypothesis import given, settings

from shared.automata import Alphabet, parse_regex
from shared.schemas import VerificationStatus, VerificationTestResult
from services.oracle import (
    OracleCrossValidator,
    cross_validate,
    defeats_mpl,
    defeats_mps,
    oracle_mpc,
    oracle_mpl,
    oracle_mps,
    oracle_pumpable_mpc,
    pumps_literally
)
from services.pumping import analyze

from tests.strategies import dfas

A = Alphabet.of("a")


def test_finite_language_is_exact():
    d = parse_regex("a+aaa", A)
    assert oracle_mpc(d, 8).value == 4
    assert oracle_mpl(d, 8).value == 4
    assert oracle_mps(d, 8).value == 4
    assert oracle_mpc(d, 8).witness == "aaa"


def test_empty_language(empty):
    assert oracle_mpc(empty, 6).value == 0
    assert oracle_mpl(empty, 6).value == 0
    assert oracle_mps(empty, 6).value == 0


def test_literal_pumping(even_a):
    assert pumps_literally(even_a, "aa", 0, 2)
    assert not pumps_literally(even_a, "aa", 0, 1)
    assert oracle_pumpable_mpc(even_a, "aa")
    assert not oracle_pumpable_mpc(parse_regex("a+aaa", A), "a")


def test_defeat_checks(even_a):
    assert defeats_mpl(even_a, "aa", 1)
    assert not defeats_mpl(even_a, "aa", 2)
    assert not defeats_mpl(even_a, "a", 1)
    assert defeats_mps(even_a, "", "a", "a", 1)
    assert not defeats_mps(even_a, "", "aa", "", 2)


def test_oracle_never_exceeds_exact(example):
    report = analyze(example)
    assert oracle_mpc(example, 10).value <= report.mpc
    assert oracle_mpl(example, 10).value <= report.mpl
    assert oracle_mps(example, 10).value <= report.mps


def test_cross_validator_report(example):
    report = OracleCrossValidator(len_bound=8).verify(example)
    assert report.status == VerificationStatus.PASS
    names = [t.test_name for t in report.tests_performed]
    assert names == ["oracle_lower_bounds", "witness_replay", "certificate_replay"]
    assert not report.hard_failures


def test_certificates_skip_for_empty_language(empty):
    report = cross_validate(empty, len_bound=4)
    skipped = [t for t in report.tests_performed if t.result == VerificationTestResult.SKIP]
    assert [t.test_name for t in skipped] == ["certificate_replay"]
    assert report.status == VerificationStatus.PASS


@given(dfas(max_states=3))
@settings(max_examples=40, deadline=None)
def test_cross_validation_on_random_automata(d):
    assert cross_validate(d, len_bound=7).status == VerificationStatus.PASS
