# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import pytest
from hypothesis import given, settings

from shared.automata import (
    Alphabet,
    AutomatonInputError,
    Dfa,
    PartialDfa,
    align,
    complete,
    embed_with_loops,
    enumerate_words,
    equivalent,
    is_empty,
    is_finite,
    is_minimal,
    minimize,
    parse_regex,
    product,
    sc,
    words_upto
)
from shared.automata.dfa import first_word_of_length, k_prefix, k_suffix, shortest_word

from tests.strategies import dfas


class TestAlphabet:
    def test_rejects_duplicates(self):
        with pytest.raises(AutomatonInputError):
            Alphabet.of("aa")

    def test_rejects_multi_character_symbols(self):
        with pytest.raises(AutomatonInputError):
            Alphabet(("ab",))

    def test_union_keeps_own_order_first(self):
        assert Alphabet.of("ba").union(Alphabet.of("ca")).symbols == ("b", "a", "c")

    def test_foreign_symbol(self, ab):
        with pytest.raises(AutomatonInputError):
            ab.index("c")


def test_dfa_rejects_invalid_target(ab):
    with pytest.raises(AutomatonInputError):
        Dfa(ab, ((0, 2),), 0, frozenset())


def test_run_and_accepts(even_a):
    assert even_a.accepts("")
    assert even_a.accepts("aaaa")
    assert not even_a.accepts("aaa")


def test_word_slices():
    assert k_prefix("abc", 2) == "ab"
    assert k_suffix("abc", 2) == "bc"
    assert k_prefix("ab", 5) == "ab"


def test_complete_adds_sink_only_when_needed(ab):
    partial = PartialDfa(ab, 1, {(0, "a"): 0}, 0, frozenset({0}))
    d = complete(partial)
    assert d.n_states == 2
    assert d.accepts("aa")
    assert not d.accepts("ab")

    total = PartialDfa(ab, 1, {(0, "a"): 0, (0, "b"): 0}, 0, frozenset({0}))
    assert complete(total).n_states == 1


def test_minimize_is_canonical(ab):
    # a^* with two accepting copies of the start and an unreachable state
    d = Dfa(ab, ((1, 3), (0, 3), (2, 2), (3, 3)), 1, frozenset({0, 1}))
    m = minimize(d)
    assert m == parse_regex("a^*", ab)
    assert m.n_states == 2
    assert is_minimal(m)
    assert not is_minimal(d)


def test_state_complexity(example, empty, sigma_star):
    assert sc(example) == 5
    assert sc(empty) == 1
    assert sc(sigma_star) == 1
    assert sc(parse_regex("b^*a^*b^*", Alphabet.of("ab"))) == 4


def test_product_needs_equal_alphabets(a_star, even_a):
    with pytest.raises(AutomatonInputError):
        product(a_star, even_a, lambda x, y: x and y)


def test_finiteness(ab, a_star, empty):
    assert is_finite(parse_regex("a+ab", ab))
    assert not is_finite(a_star)
    assert is_finite(empty)
    assert is_empty(empty)
    assert not is_empty(a_star)


def test_enumerate_words(ab):
    d = parse_regex("a^*b", ab)
    assert enumerate_words(d, 3) == ["b", "ab", "aab"]


def test_shortest_and_first_words(ab):
    d = parse_regex("a^*b", ab)
    assert shortest_word(d) == "b"
    assert first_word_of_length(d, 2) == "ab"
    assert first_word_of_length(d, 0) is None
    assert shortest_word(parse_regex("∅", ab)) is None


def test_words_upto(ab):
    assert list(words_upto(ab, 2)) == ["", "a", "b", "aa", "ab", "ba", "bb"]


def test_align_sends_new_letters_to_sink(ab):
    d = parse_regex("a^*", Alphabet.of("a"))
    wide = align(d, ab)
    assert wide.accepts("aa")
    assert not wide.accepts("ab")
    assert sc(wide) == 2


def test_embed_with_loops_ignores_new_letters(ab):
    d = parse_regex("a^*", Alphabet.of("a"))
    wide = embed_with_loops(d, ab)
    assert wide.accepts("abba")
    assert sc(wide) == 1


@given(dfas())
@settings(max_examples=60, deadline=None)
def test_minimize_preserves_language(d):
    m = minimize(d)
    assert m.n_states <= d.n_states
    assert minimize(m) == m
    for w in words_upto(d.alphabet, 4):
        assert m.accepts(w) == d.accepts(w)


@given(dfas())
@settings(max_examples=40, deadline=None)
def test_equivalent_is_reflexive_across_encodings(d):
    assert equivalent(d, minimize(d))
