# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Witnesses for the operation ranges: Kleene star under mps and
intersection under mpl and mps.
"""

import logging
from typing import Optional, Tuple

from shared.automata.dfa import Alphabet, Dfa
from shared.automata.errors import AutomatonInputError
from shared.automata.regex import parse_regex
from services.witnesses.blocks import AB, b_star_regex
from services.witnesses.validation import mps_only, self_validate

logger = logging.getLogger(__name__)

ABC = Alphabet.of("abc")
ABCDE = Alphabet.of("abcde")


def star_regex(n: int, k: int) -> str:
    if n < 1 or not 1 <= k <= 2 * n - 1:
        raise AutomatonInputError(f"star witness needs n >= 1 and 1 <= k <= 2n - 1, got n={n}, k={k}")
    if n > k:
        return "+".join(["λ"] + [f"a^{i}" for i in range(1, n)] + [f"b^{k}"])
    if n == k:
        return f"(a^{n})^*"
    return f"(a^{n})^*+(b^{k - n + 1})^*"


def star_witness(n: int, k: int, validate: Optional[bool] = None) -> Dfa:
    """
    Language L over {a, b} with mps(L) = n and mps(L^*) = k.

    Only mps(L) is self-validated; the star side is checked by the star suite.
    """
    d = parse_regex(star_regex(n, k), AB)
    return self_validate("star", d, (n,), mps_only, validate)


def _c_shape(p: int, k: int) -> str:
    """Component whose constant is p, carrying the (ba)-words of the intersection"""
    middle = "(ba)^*b(ad)^*" if k % 2 == 0 else "(ba)^*(bd)^*"
    return f"c^{p - 1}+{middle}+(da)^*d"


def _e_shape(p: int, k: int) -> str:
    """Component whose constant is p, carrying the block words followed by d's"""
    return f"e^{p - 1}+({b_star_regex(k - 2)}+λ)d^*"


def intersection_regexes(m: int, n: int, k: int) -> Tuple[str, str, Alphabet]:
    """
    Regular expressions of the two components and their common alphabet.

    Raises:
        AutomatonInputError: If (m, n, k) is outside the constructed range
    """
    if m < 1 or n < 1 or k < 0:
        raise AutomatonInputError(f"intersection witness needs m, n >= 1 and k >= 0, got {(m, n, k)}")
    if k == 0:
        if m == n == 1:
            raise AutomatonInputError("k = 0 is not reachable with m = n = 1")
        return f"a^{m - 1}", f"b^{n - 1}", AB
    if k == 1:
        return f"a^{m - 1}+b^*", f"c^{n - 1}+b^*", ABC
    if max(m, n) < 2:
        raise AutomatonInputError(f"k = {k} needs max(m, n) >= 2")
    if m >= 2:
        return _c_shape(m, k), _e_shape(n, k), ABCDE
    return _e_shape(m, k), _c_shape(n, k), ABCDE


def intersection_witness(m: int, n: int, k: int) -> Tuple[Dfa, Dfa]:
    """
    Two languages with constants m and n whose intersection has constant k,
    under both mpl and mps.

    Returns:
        Minimal DFAs over a shared alphabet, in (m, n) order
    """
    first, second, sigma = intersection_regexes(m, n, k)
    logger.debug(f"intersection witness {(m, n, k)}: {first} | {second}")
    return parse_regex(first, sigma), parse_regex(second, sigma)
