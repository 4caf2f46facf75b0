# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Block languages over {a, b} with k - 1 alternations between blocks.

    B+(k) = b^+ (a^*b^*)^((k-1)/2)          k odd
            b^+ (a^*b^*)^((k-2)/2) a^*      k even
    B*(k) = the same with a leading b^*

Both are empty for k = 0.
"""

from shared.automata.dfa import Alphabet, Dfa
from shared.automata.errors import AutomatonInputError
from shared.automata.regex import parse_regex

AB = Alphabet.of("ab")


def _block_regex(k: int, head: str) -> str:
    if k < 0:
        raise AutomatonInputError(f"block count must be non-negative, got {k}")
    if k == 0:
        return "∅"
    if k % 2 == 1:
        return head + "(a^*b^*)" * ((k - 1) // 2)
    return head + "(a^*b^*)" * ((k - 2) // 2) + "a^*"


def b_plus_regex(k: int) -> str:
    return _block_regex(k, "b^+")


def b_star_regex(k: int) -> str:
    return _block_regex(k, "b^*")


def b_plus(k: int) -> Dfa:
    return parse_regex(b_plus_regex(k), AB)


def b_star(k: int) -> Dfa:
    return parse_regex(b_star_regex(k), AB)
