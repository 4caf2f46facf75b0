# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Regular expressions in the notation used for the witness languages.

Grammar (whitespace is ignored):
    expr    := term ('+' term)*          union
    term    := factor factor*            concatenation by juxtaposition
    factor  := atom postfix*
    postfix := '*' | '^*' | '^+' | '^' digits | '^{' digits '}'
    atom    := 'λ' | 'ε' | '∅' | symbol | '(' expr ')'

`+` between terms is union; Kleene plus is written `^+`. Any other single
non-space character is a symbol and must belong to the target alphabet.

Usage:
    from shared.automata.regex import parse_regex

    d = parse_regex("b^1(a^2)^*", Alphabet.of("ab"))
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import pyparsing as pp

from shared.automata.dfa import Alphabet, Dfa, minimize
from shared.automata.errors import RegexSyntaxError
from shared.automata.nfa import NfaBuilder, determinize

logger = logging.getLogger(__name__)


# ============================================
# Syntax tree
# ============================================

@dataclass(frozen=True)
class Symbol:
    char: str
    loc: int = 0


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Union:
    parts: Tuple["Node", ...]


@dataclass(frozen=True)
class Concat:
    parts: Tuple["Node", ...]


@dataclass(frozen=True)
class Star:
    inner: "Node"


@dataclass(frozen=True)
class Plus:
    inner: "Node"


@dataclass(frozen=True)
class Power:
    inner: "Node"
    exponent: int


Node = object


# ============================================
# Parser
# ============================================

def _apply_postfix(tokens: pp.ParseResults) -> Node:
    node = tokens[0]
    for op in tokens[1:]:
        if op == "*":
            node = Star(node)
        elif op == "+":
            node = Plus(node)
        else:
            node = Power(node, int(op))
    return node


def _fold(kind):
    def action(tokens: pp.ParseResults) -> Node:
        parts = tuple(tokens)
        return parts[0] if len(parts) == 1 else kind(parts)
    return action


@lru_cache(maxsize=1)
def _grammar() -> pp.ParserElement:
    expr = pp.Forward()

    lam = (pp.Literal("λ") | pp.Literal("ε")).set_parse_action(lambda: Epsilon())
    empty = pp.Literal("∅").set_parse_action(lambda: Empty())
    symbol = pp.Regex(r"[^\s()+*^{}λε∅]").set_parse_action(
        lambda s, loc, toks: Symbol(toks[0], loc)
    )
    group = pp.Suppress("(") + expr + pp.Suppress(")")
    atom = lam | empty | symbol | group

    digits = pp.Regex(r"\d+")
    exponent = pp.Suppress("^") + (
        pp.Literal("*")
        | pp.Literal("+")
        | digits
        | pp.Suppress("{") + digits + pp.Suppress("}")
    )
    postfix = pp.Literal("*") | exponent

    factor = (atom + pp.ZeroOrMore(postfix)).set_parse_action(_apply_postfix)
    term = pp.OneOrMore(factor).set_parse_action(_fold(Concat))
    expr <<= (term + pp.ZeroOrMore(pp.Suppress("+") + term)).set_parse_action(_fold(Union))
    return expr


def parse_regex_ast(text: str) -> Node:
    """
    Parse text into a syntax tree.

    Raises:
        RegexSyntaxError: With the 0-based column of the failure
    """
    try:
        return _grammar().parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise RegexSyntaxError(f"invalid regular expression {text!r}: {e.msg}", e.loc) from None


def regex_symbols(text: str) -> List[str]:
    """Distinct symbols of an expression in order of first appearance"""
    found: List[str] = []

    def walk(node: Node) -> None:
        if isinstance(node, Symbol):
            if node.char not in found:
                found.append(node.char)
        elif isinstance(node, (Union, Concat)):
            for part in node.parts:
                walk(part)
        elif isinstance(node, (Star, Plus, Power)):
            walk(node.inner)

    walk(parse_regex_ast(text))
    return found


# ============================================
# Thompson construction
# ============================================

def _thompson(node: Node, builder: NfaBuilder) -> Tuple[int, int]:
    if isinstance(node, Plus):
        return _thompson(Concat((node.inner, Star(node.inner))), builder)
    if isinstance(node, Power) and node.exponent > 0:
        return _thompson(Concat((node.inner,) * node.exponent), builder)

    start, end = builder.add_state(), builder.add_state()
    if isinstance(node, Symbol):
        if node.char not in builder.alphabet:
            raise RegexSyntaxError(
                f"symbol {node.char!r} not in alphabet {''.join(builder.alphabet)!r}", node.loc
            )
        builder.add_move(start, node.char, end)
    elif isinstance(node, (Epsilon, Power)):
        builder.add_epsilon(start, end)
    elif isinstance(node, Empty):
        pass
    elif isinstance(node, Union):
        for part in node.parts:
            s, e = _thompson(part, builder)
            builder.add_epsilon(start, s)
            builder.add_epsilon(e, end)
    elif isinstance(node, Concat):
        previous = start
        for part in node.parts:
            s, e = _thompson(part, builder)
            builder.add_epsilon(previous, s)
            previous = e
        builder.add_epsilon(previous, end)
    elif isinstance(node, Star):
        s, e = _thompson(node.inner, builder)
        builder.add_epsilon(start, end)
        builder.add_epsilon(start, s)
        builder.add_epsilon(e, s)
        builder.add_epsilon(e, end)
    else:
        raise TypeError(f"unknown regex node {node!r}")
    return start, end


def parse_regex(text: str, sigma: Alphabet) -> Dfa:
    """
    Compile a regular expression into a complete minimal DFA over sigma.

    Args:
        text: Expression in the grammar of this module
        sigma: Target alphabet; every symbol of text must belong to it

    Returns:
        Minimal complete DFA with canonical numbering

    Raises:
        RegexSyntaxError: On a parse failure or a symbol outside sigma
    """
    tree = parse_regex_ast(text)
    builder = NfaBuilder(sigma)
    start, end = _thompson(tree, builder)
    builder.initials.add(start)
    builder.accepting.add(end)
    d = minimize(determinize(builder.build()))
    logger.debug(f"Compiled {text!r} over {''.join(sigma)!r}: {d.n_states} states")
    return d
