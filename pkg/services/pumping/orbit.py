# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Orbits of pump words.

t -> q·y^t is eventually periodic, so the set {q·y^t | t >= 0} is found by
iterating y until a state repeats. "For every t >= 0" then becomes a check
over that finite set.
"""

import logging
from typing import List, Tuple

from shared.automata.dfa import Dfa, Word
from shared.automata.errors import AutomatonInputError
from shared.schemas import Orbit

logger = logging.getLogger(__name__)


def orbit_states(d: Dfa, q: int, y: Word) -> Tuple[List[int], int]:
    """States q·y^t in visiting order, and the index where the cycle starts"""
    first_seen = {}
    states: List[int] = []
    s = q
    while s not in first_seen:
        first_seen[s] = len(states)
        states.append(s)
        s = d.run(s, y)
    return states, first_seen[s]


def orbit(d: Dfa, q: int, y: Word) -> Orbit:
    """
    Exact orbit of state q under repetitions of y.

    Raises:
        AutomatonInputError: If y is empty, q is invalid or y uses foreign symbols
    """
    if not y:
        raise AutomatonInputError("pump word must be non-empty")
    d.check_state(q)
    d.alphabet.check_word(y)
    states, cycle_start = orbit_states(d, q, y)
    return Orbit(states=states, preperiod=cycle_start, period=len(states) - cycle_start)


def pump_valid(d: Dfa, q: int, w: Word, i: int, j: int, continuation: Word = "") -> bool:
    """
    Whether y = w[i:j] pumps w read from q, followed by continuation.

    True iff for every t >= 0, reading w[:i]·y^t·w[j:]·continuation from q
    ends in an accepting state.

    Raises:
        AutomatonInputError: Unless 0 <= i < j <= |w|
    """
    if not 0 <= i < j <= len(w):
        raise AutomatonInputError(f"need 0 <= i < j <= {len(w)}, got i={i} j={j}")
    d.check_state(q)
    d.alphabet.check_word(w)
    d.alphabet.check_word(continuation)
    start = d.run(q, w[:i])
    states, _ = orbit_states(d, start, w[i:j])
    tail = w[j:] + continuation
    return all(d.run(r, tail) in d.accepting for r in states)
