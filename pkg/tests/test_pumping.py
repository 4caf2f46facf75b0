# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import pytest
from hypothesis import given, settings

from shared.automata import (
    Alphabet,
    AutomatonInputError,
    SearchBudgetExceeded,
    access_words,
    minimize,
    parse_regex,
    words_upto
)
from shared.schemas import MpsWitness, PumpKind
from services.pumping import analyze, mpc, orbit, pump_valid, satisfies_mpl, satisfies_mps
from services.langops import reversal
from services.oracle import oracle_pumpable_mpc, pumps_literally
from services.pumping.analyzer import _window_certificate
from services.pumping.constants import is_pumpable
from services.witnesses import a_n_a_star

from tests.strategies import dfas

A = Alphabet.of("a")


@pytest.fixture
def one_mod_three():
    """a(aaa)^*"""
    return parse_regex("a(aaa)^*", A)


class TestAnalyze:
    def test_empty_language(self, empty):
        assert analyze(empty).constants == (0, 0, 0, 1)

    def test_universal_language(self, sigma_star):
        assert analyze(sigma_star).constants == (1, 1, 1, 1)

    def test_a_star_over_two_letters(self, a_star):
        assert analyze(a_star).constants == (1, 1, 1, 2)

    def test_even_length(self, even_a):
        report = analyze(even_a)
        assert report.constants == (1, 2, 2, 2)
        assert report.witnesses.mpl == "aa"

    def test_one_mod_three(self, one_mod_three):
        assert analyze(one_mod_three).constants == (2, 3, 3, 3)

    def test_finite_languages(self, ab):
        assert analyze(parse_regex("a+aaa", A)).constants == (4, 4, 4, 5)
        assert analyze(parse_regex("ab", ab)).constants == (3, 3, 3, 4)

    def test_example_language(self, example):
        report = analyze(example)
        assert report.mpc == 1
        assert report.sc == 5
        assert not example.accepts("babab")

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_fixed_prefix_family(self, n):
        assert analyze(a_n_a_star(n)).constants == (n + 1,) * 4

    def test_certificates_pump(self, one_mod_three):
        report = analyze(one_mod_three)
        assert report.certificates
        for c in report.certificates:
            assert one_mod_three.accepts(c.word)
            assert pump_valid(one_mod_three, one_mod_three.initial, c.word, c.i, c.j)
            if c.kind != PumpKind.MPC:
                limit = report.mpl if c.kind == PumpKind.MPL else report.mps
                assert c.window_start <= c.i
                assert c.j - c.window_start <= limit


class TestDecisionProcedures:
    def test_mpl_counterexample(self, one_mod_three):
        check = satisfies_mpl(one_mod_three, 2)
        assert not check
        assert check.counterexample == "aaaa"
        assert satisfies_mpl(one_mod_three, 3)

    def test_zero_only_for_empty(self, empty, a_star):
        assert satisfies_mpl(empty, 0)
        assert not satisfies_mpl(a_star, 0)
        assert satisfies_mps(a_star, 0).counterexample == MpsWitness(u="", w="", v="")

    def test_mps_of_star_witness(self):
        d = parse_regex("(aa)^*+(bb)^*", Alphabet.of("ab"))
        assert not satisfies_mps(d, 1)
        assert satisfies_mps(d, 2)

    def test_mpc_witness_is_longest_unpumpable(self):
        result = mpc(parse_regex("a+aaa", A))
        assert result.value == 4
        assert result.witness == "aaa"

    def test_is_pumpable(self, even_a):
        assert is_pumpable(even_a, "aa")
        assert not is_pumpable(parse_regex("a+aaa", A), "aaa")

    def test_budget(self, even_a):
        with pytest.raises(SearchBudgetExceeded) as info:
            satisfies_mpl(even_a, 1, node_budget=0)
        assert info.value.budget == 0


class TestOrbit:
    def test_cycle(self, even_a):
        o = orbit(even_a, 0, "a")
        assert o.states == [0, 1]
        assert (o.preperiod, o.period) == (0, 2)

    def test_preperiod(self, one_mod_three):
        o = orbit(one_mod_three, 0, "aaa")
        assert o.preperiod == 0
        assert o.period == 1

    def test_empty_pump_word(self, even_a):
        with pytest.raises(AutomatonInputError):
            orbit(even_a, 0, "")

    def test_pump_valid(self, even_a):
        assert pump_valid(even_a, 0, "aa", 0, 2)
        assert not pump_valid(even_a, 0, "aa", 0, 1)
        assert pump_valid(even_a, 0, "a", 0, 1, continuation="a") is False
        with pytest.raises(AutomatonInputError):
            pump_valid(even_a, 0, "aa", 1, 1)


@given(dfas())
@settings(max_examples=60, deadline=None)
def test_chain_holds(d):
    report = analyze(d)
    assert report.mpc <= report.mpl <= report.mps <= report.sc
    assert (report.mpc == 0) == (report.mps == 0)


@given(dfas(max_states=3))
@settings(max_examples=40, deadline=None)
def test_witnesses_are_accepted(d):
    report = analyze(d)
    if report.mpc:
        assert d.accepts(report.witnesses.mpc)
        assert len(report.witnesses.mpc) == report.mpc - 1
    if report.mpl:
        assert d.accepts(report.witnesses.mpl)
        assert len(report.witnesses.mpl) >= report.mpl - 1
    if report.mps:
        w = report.witnesses.mps
        assert d.accepts(w.u + w.w + w.v)
        assert len(w.w) == report.mps - 1


class TestCertificates:
    def test_window_follows_defeating_occurrence(self, even_a):
        below = MpsWitness(u="aa", w="a", v="a")
        c = _window_certificate(even_a, 2, below)
        assert c.kind == PumpKind.MPS
        assert c.word == "aaaa"
        assert (c.window_start, c.i, c.j) == (2, 2, 4)

    def test_occurrence_too_short_for_window(self, even_a):
        assert _window_certificate(even_a, 2, MpsWitness(u="a", w="a", v="")) is None


@given(dfas(max_states=3))
@settings(max_examples=40, deadline=None)
def test_certificates_stay_in_their_window(d):
    report = analyze(d)
    m = minimize(d)
    for c in report.certificates:
        assert m.accepts(c.word)
        assert pump_valid(m, m.initial, c.word, c.i, c.j)
        if c.kind == PumpKind.MPS:
            assert c.window_start <= c.i
            assert c.j - c.window_start <= report.mps


@given(dfas())
@settings(max_examples=60, deadline=None)
def test_state_complexity_counts_distinguishable_classes(d):
    suffixes = list(words_upto(d.alphabet, d.n_states))
    signatures = {
        tuple(d.accepts(u + x) for x in suffixes)
        for u in access_words(d).values()
    }
    assert analyze(d).sc == len(signatures)


@given(dfas(max_states=3))
@settings(max_examples=40, deadline=None)
def test_decision_procedures_are_monotone(d):
    m = minimize(d)
    for p in range(m.n_states + 1):
        if satisfies_mpl(m, p):
            assert satisfies_mpl(m, p + 1)
        if satisfies_mps(m, p):
            assert satisfies_mps(m, p + 1)


@given(dfas(max_states=3))
@settings(max_examples=40, deadline=None)
def test_literal_pumping_agrees_with_orbits(d):
    for w in words_upto(d.alphabet, 4):
        if not d.accepts(w):
            continue
        valid = [
            pump_valid(d, d.initial, w, i, j)
            for j in range(1, len(w) + 1)
            for i in range(j)
        ]
        literal = [
            pumps_literally(d, w, i, j)
            for j in range(1, len(w) + 1)
            for i in range(j)
        ]
        assert valid == literal
        assert oracle_pumpable_mpc(d, w) == any(valid)


@given(dfas(max_states=3))
@settings(max_examples=40, deadline=None)
def test_reversal_keeps_mpc_and_mps(d):
    before = analyze(d)
    after = analyze(reversal(d))
    assert after.mpc == before.mpc
    assert after.mps == before.mps
