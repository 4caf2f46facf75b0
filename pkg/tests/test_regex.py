# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import pytest

from shared.automata import Alphabet, RegexSyntaxError, equivalent, parse_regex, regex_symbols, sc
from shared.automata.nfa import NfaBuilder
from shared.automata.regex import Concat, Epsilon, Plus, Power, Star, Symbol, _thompson, parse_regex_ast


def test_ast_shapes():
    assert parse_regex_ast("a") == Symbol("a", 0)
    assert parse_regex_ast("λ") == Epsilon()
    assert isinstance(parse_regex_ast("ab"), Concat)
    assert isinstance(parse_regex_ast("a^*"), Star)
    assert parse_regex_ast("a^{3}") == Power(Symbol("a", 0), 3)


def test_postfix_forms_agree(ab):
    assert equivalent(parse_regex("a^*", ab), parse_regex("a*", ab))
    assert equivalent(parse_regex("a^3", ab), parse_regex("aaa", ab))
    assert equivalent(parse_regex("a^{3}", ab), parse_regex("aaa", ab))
    assert equivalent(parse_regex("a^+", ab), parse_regex("aa^*", ab))


def test_constants(ab):
    assert parse_regex("λ", ab).accepts("")
    assert parse_regex("ε", ab).accepts("")
    assert not parse_regex("∅", ab).accepts("")
    assert parse_regex("a^0", ab).accepts("")
    assert not parse_regex("a^0", ab).accepts("a")


def test_block_language(ab):
    d = parse_regex("b^*a^*b^*", ab)
    assert sc(d) == 4
    assert d.accepts("bbaab")
    assert not d.accepts("aba")


def test_symbols_in_order_of_appearance():
    assert regex_symbols("b(a+c)^*") == ["b", "a", "c"]
    assert regex_symbols("λ+∅") == []


def test_syntax_error_carries_position(ab):
    with pytest.raises(RegexSyntaxError) as info:
        parse_regex("(a", ab)
    assert isinstance(info.value.position, int)


def test_foreign_symbol_is_reported_where_it_appears(ab):
    with pytest.raises(RegexSyntaxError) as info:
        parse_regex("a+c", ab)
    assert info.value.position == 2


def test_result_is_minimal(ab):
    d = parse_regex("(a+b)^*", ab)
    assert d.n_states == 1
    assert d == parse_regex("(a^*b^*)^*", Alphabet.of("ab"))


@pytest.mark.parametrize("node, rewritten", [
    (Plus(Symbol("a")), Concat((Symbol("a"), Star(Symbol("a"))))),
    (Power(Symbol("b"), 3), Concat((Symbol("b"),) * 3)),
])
def test_rewritten_nodes_allocate_no_extra_states(ab, node, rewritten):
    direct, expanded = NfaBuilder(ab), NfaBuilder(ab)
    _thompson(node, direct)
    _thompson(rewritten, expanded)
    assert direct.n_states == expanded.n_states


def test_zeroth_power_is_the_empty_word(ab):
    builder = NfaBuilder(ab)
    start, end = _thompson(Power(Symbol("a"), 0), builder)
    assert builder.n_states == 2
    assert (start, end) == (0, 1)
    assert equivalent(parse_regex("a^0", ab), parse_regex("λ", ab))
