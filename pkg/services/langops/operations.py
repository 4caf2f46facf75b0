# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Regularity-preserving operations on complete DFAs.

Every operation returns the minimal complete DFA of its result, except
loopify, which also exposes the raw modified machine. Binary operations
first extend both operands to the union of their alphabets.
"""

import logging
import operator
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

from shared.automata.dfa import (
    Alphabet,
    Dfa,
    align,
    coaccessible_states,
    is_minimal,
    minimize,
    product,
    reachable_states
)
from shared.automata.errors import AutomatonInputError
from shared.automata.nfa import NfaBuilder, determinize, reverse_nfa

logger = logging.getLogger(__name__)


# ============================================
# Unary operations
# ============================================

def star(d: Dfa) -> Dfa:
    builder = NfaBuilder(d.alphabet)
    start = builder.add_state(initial=True, accepting=True)
    ids = builder.copy_dfa(d)
    builder.add_epsilon(start, ids[d.initial])
    for q in d.accepting:
        builder.accepting.add(ids[q])
        builder.add_epsilon(ids[q], ids[d.initial])
    return minimize(determinize(builder.build()))


def reversal(d: Dfa) -> Dfa:
    return minimize(determinize(reverse_nfa(d)))


def complement(d: Dfa) -> Dfa:
    flipped = frozenset(range(d.n_states)) - d.accepting
    return minimize(Dfa(d.alphabet, d.delta, d.initial, flipped))


def prefix_closure(d: Dfa) -> Dfa:
    """Every state that can still reach acceptance becomes accepting"""
    return minimize(Dfa(d.alphabet, d.delta, d.initial, coaccessible_states(d)))


def suffix_closure(d: Dfa) -> Dfa:
    """Reading may start in any state reachable from the initial one"""
    builder = NfaBuilder(d.alphabet)
    ids = builder.copy_dfa(d)
    builder.accepting.update(ids[q] for q in d.accepting)
    for q in reachable_states(d):
        builder.initials.add(ids[q])
    return minimize(determinize(builder.build()))


def downward_closure(d: Dfa) -> Dfa:
    """Closure under scattered subsequences: any letter may be skipped"""
    builder = NfaBuilder(d.alphabet)
    ids = builder.copy_dfa(d)
    builder.initials.add(ids[d.initial])
    builder.accepting.update(ids[q] for q in d.accepting)
    for q, row in enumerate(d.delta):
        for target in row:
            if target != q:
                builder.add_epsilon(ids[q], ids[target])
    return minimize(determinize(builder.build()))


# ============================================
# Binary operations
# ============================================

def align_pair(d1: Dfa, d2: Dfa) -> Tuple[Dfa, Dfa]:
    """Extend both operands to the union alphabet, new letters going to a sink"""
    if d1.alphabet == d2.alphabet:
        return d1, d2
    sigma: Alphabet = d1.alphabet.union(d2.alphabet)
    logger.debug(
        f"Aligning alphabets {''.join(d1.alphabet)!r} and {''.join(d2.alphabet)!r} "
        f"to {''.join(sigma)!r}"
    )
    return align(d1, sigma), align(d2, sigma)


def _boolean(combine: Callable[[bool, bool], bool]) -> Callable[[Dfa, Dfa], Dfa]:
    def apply(d1: Dfa, d2: Dfa) -> Dfa:
        left, right = align_pair(d1, d2)
        return minimize(product(left, right, combine))
    return apply


union = _boolean(operator.or_)
intersection = _boolean(operator.and_)
difference = _boolean(lambda x, y: x and not y)
symmetric_difference = _boolean(operator.xor)


def concatenation(d1: Dfa, d2: Dfa) -> Dfa:
    left, right = align_pair(d1, d2)
    builder = NfaBuilder(left.alphabet)
    ids1 = builder.copy_dfa(left)
    ids2 = builder.copy_dfa(right)
    builder.initials.add(ids1[left.initial])
    builder.accepting.update(ids2[q] for q in right.accepting)
    for q in left.accepting:
        builder.add_epsilon(ids1[q], ids2[right.initial])
    return minimize(determinize(builder.build()))


# ============================================
# Loop modification
# ============================================

@dataclass(frozen=True)
class LoopifyResult:
    """The modified machine as built, and the minimal DFA of its language"""
    raw: Dfa
    minimal: Dfa


def loopify(d: Dfa, q: int, a: str) -> LoopifyResult:
    """
    Redirect the single transition (q, a) to a self-loop on q.

    Args:
        d: Minimal complete DFA
        q: State whose a-transition is redirected
        a: Symbol of the redirected transition

    Raises:
        AutomatonInputError: If d is not minimal, or q or a is invalid
    """
    d.check_state(q)
    column = d.alphabet.index(a)
    if not is_minimal(d):
        raise AutomatonInputError("loopify needs a minimal DFA")
    rows = [list(row) for row in d.delta]
    rows[q][column] = q
    raw = Dfa(d.alphabet, tuple(tuple(row) for row in rows), d.initial, d.accepting)
    return LoopifyResult(raw=raw, minimal=minimize(raw))


# ============================================
# Registry
# ============================================

UNARY_OPERATIONS: Dict[str, Callable[[Dfa], Dfa]] = {
    "star": star,
    "reversal": reversal,
    "complement": complement,
    "prefix_closure": prefix_closure,
    "suffix_closure": suffix_closure,
    "downward_closure": downward_closure,
}

BINARY_OPERATIONS: Dict[str, Callable[[Dfa, Dfa], Dfa]] = {
    "union": union,
    "intersection": intersection,
    "difference": difference,
    "symmetric_difference": symmetric_difference,
    "concatenation": concatenation,
}


def get_operation(name: str):
    """Look up an operation by name; returns (arity, function)"""
    if name in UNARY_OPERATIONS:
        return 1, UNARY_OPERATIONS[name]
    if name in BINARY_OPERATIONS:
        return 2, BINARY_OPERATIONS[name]
    raise AutomatonInputError(f"unknown operation {name!r}")
