# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Binary families regulating mpc, mpl and sc together, plus the small
anchor languages used as fixed reference points.
"""

import logging
from typing import Optional, Tuple

from shared.automata.dfa import Alphabet, Dfa, minimize
from shared.automata.errors import AutomatonInputError
from shared.automata.regex import parse_regex
from services.witnesses.blocks import AB, b_plus_regex, b_star_regex
from services.witnesses.validation import mpc_mpl_sc, self_validate

logger = logging.getLogger(__name__)

# Extra letters of the padded family, in order of use
PADDING_LETTERS = "cdefghijklmnopqrstuvwxyz"


def _check_chain(*params: int) -> None:
    if params[0] < 1 or any(x > y for x, y in zip(params, params[1:])):
        raise AutomatonInputError(f"parameters must satisfy 1 <= p1 <= p2 <= ..., got {params}")


def _unary_cycle(p1: int, p2: int) -> Dfa:
    """Cycle q_0 -a-> q_1 -a-> ... -a-> q_{p2-1} -a-> q_0 accepting q_{p1-1}"""
    rows = tuple((i + 1) % p2 for i in range(p2))
    return Dfa(Alphabet.of("a"), tuple((target,) for target in rows), 0, frozenset({p1 - 1}))


def binary_regex(p1: int, p2: int, p3: int) -> Optional[str]:
    """Regular expression of the binary family, None for the unary cycle case"""
    _check_chain(p1, p2, p3)
    if p2 == 1:
        if p3 == 1:
            return "(a+b)^*"
        if p3 == 2:
            return "a^*"
        return b_star_regex(p3 - 1)
    if p2 == p3:
        return None
    return f"b^{p1 - 1}(a^{p2 - p1 + 1})^*({b_plus_regex(p3 - p2 - 1)}+λ)"


def thm_binary(p1: int, p2: int, p3: int, validate: Optional[bool] = None) -> Dfa:
    """
    Binary language with mpc = p1, mpl = p2 and sc = p3.

    The p2 = p3 case is a unary cycle over {a}; a second letter would
    force a sink state.

    Args:
        p1, p2, p3: Target constants, 1 <= p1 <= p2 <= p3
        validate: Re-measure the result (defaults to the configured setting)

    Returns:
        Minimal DFA

    Raises:
        AutomatonInputError: If the parameters are out of order
        WitnessConstructionError: If self-validation disagrees
    """
    pattern = binary_regex(p1, p2, p3)
    if pattern is None:
        d = minimize(_unary_cycle(p1, p2))
    else:
        d = parse_regex(pattern, AB)
    return self_validate("binary", d, (p1, p2, p3), mpc_mpl_sc, validate)


def padded_regex(p1: int, p2: int, p3: int) -> Tuple[str, Alphabet]:
    _check_chain(p1, p2, p3)
    if p2 >= p3:
        raise AutomatonInputError(f"padded family needs p2 < p3, got {p2} >= {p3}")
    extra = p3 - p2 - 1
    if extra > len(PADDING_LETTERS):
        raise AutomatonInputError(f"padded family supports at most {len(PADDING_LETTERS)} extra letters")
    letters = PADDING_LETTERS[:extra]
    parts = [f"b^{p1 - 1}(a^{p2 - p1 + 1})^*"] + [f"{c}^*" for c in letters]
    return "+".join(parts), Alphabet.of("ab" + letters)


def padded_expected(p1: int, p2: int, p3: int) -> Tuple[int, int, int]:
    """
    Constants (mpc, mpl, sc) the padded family actually reaches.

    With p1 = 1 and at least one extra letter the initial state cannot close
    the a-cycle, so the minimal DFA needs one more state.
    """
    if p1 == 1 and p3 >= p2 + 2:
        return p1, p2, p3 + 1
    return p1, p2, p3


def padded_family(p1: int, p2: int, p3: int, validate: Optional[bool] = None) -> Dfa:
    pattern, sigma = padded_regex(p1, p2, p3)
    d = parse_regex(pattern, sigma)
    return self_validate("padded", d, padded_expected(p1, p2, p3), mpc_mpl_sc, validate)


def a_n_a_star(n: int) -> Dfa:
    """a^n a^*; all four constants equal n + 1"""
    if n < 0:
        raise AutomatonInputError(f"n must be non-negative, got {n}")
    return parse_regex(f"a^{n}a^*", Alphabet.of("a"))


EXAMPLE_REGEX = "a^*+a^*bb^*+a^*bb^*aa^*+a^*bb^*aa^*bb^*"


def example_language() -> Dfa:
    """The language a^*b^*a^*b^* written block by block; mpc 1, sc 5"""
    return parse_regex(EXAMPLE_REGEX, AB)
