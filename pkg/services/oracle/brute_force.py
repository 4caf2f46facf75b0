# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Brute-force pumping checks.

Each lemma is evaluated literally: every decomposition is tried and
x·y^t·z is tested for membership for t = 0..2|Q|. Membership of x·y^t·z
depends only on the state after x·y^t, which is eventually periodic in t
with preperiod plus period at most |Q|, so this range covers every t.

Values returned here are lower bounds: only accepted words up to a length
bound are examined.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Set

from shared.automata.dfa import Dfa, Word, enumerate_words
from shared.schemas import MpsWitness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleResult:
    """Lower bound on a constant and the word (or triple) that forces it"""
    value: int
    witness: Optional[object] = None


def _suffix_acceptors(d: Dfa, word: Word) -> List[Set[int]]:
    """acceptors[k]: states from which word[k:] is accepted"""
    acceptors: List[Set[int]] = [set() for _ in range(len(word) + 1)]
    acceptors[len(word)] = set(d.accepting)
    for k in range(len(word) - 1, -1, -1):
        column = d.alphabet.index(word[k])
        acceptors[k] = {q for q in range(d.n_states) if d.delta[q][column] in acceptors[k + 1]}
    return acceptors


def pumps_literally(d: Dfa, word: Word, i: int, j: int, acceptors: Optional[List[Set[int]]] = None) -> bool:
    """word[:i]·word[i:j]^t·word[j:] is accepted for every t in 0..2|Q|"""
    if acceptors is None:
        acceptors = _suffix_acceptors(d, word)
    y = word[i:j]
    state = d.run(d.initial, word[:i])
    for _ in range(2 * d.n_states + 1):
        if state not in acceptors[j]:
            return False
        state = d.run(state, y)
    return True


def first_pump_end(d: Dfa, word: Word, start: int, acceptors: List[Set[int]]) -> Optional[int]:
    """Smallest j (relative to start) such that some y = word[start+i:start+j] pumps"""
    for j in range(1, len(word) - start + 1):
        if any(pumps_literally(d, word, start + i, start + j, acceptors) for i in range(j)):
            return j
    return None


def oracle_pumpable_mpc(d: Dfa, w: Word) -> bool:
    """Some decomposition w = xyz with y non-empty pumps, evaluated literally"""
    acceptors = _suffix_acceptors(d, w)
    return first_pump_end(d, w, 0, acceptors) is not None


def oracle_mpc(d: Dfa, len_bound: int) -> OracleResult:
    best: Optional[Word] = None
    for w in enumerate_words(d, len_bound):
        if not oracle_pumpable_mpc(d, w) and (best is None or len(w) > len(best)):
            best = w
    if best is None:
        return OracleResult(0)
    return OracleResult(len(best) + 1, best)


def _largest_defeated(length: int, pump_end: Optional[int]) -> int:
    if pump_end is None:
        return length
    return min(pump_end - 1, length)


def oracle_mpl(d: Dfa, len_bound: int) -> OracleResult:
    """1 + the largest p some accepted word of length <= len_bound defeats"""
    value, witness = 0, None
    for w in enumerate_words(d, len_bound):
        acceptors = _suffix_acceptors(d, w)
        defeated = _largest_defeated(len(w), first_pump_end(d, w, 0, acceptors))
        if defeated + 1 > value:
            value, witness = defeated + 1, w
    return OracleResult(value, witness)


def oracle_mps(d: Dfa, len_bound: int) -> OracleResult:
    """As oracle_mpl, over every sub-word occurrence of every accepted word"""
    value, witness = 0, None
    for word in enumerate_words(d, len_bound):
        acceptors = _suffix_acceptors(d, word)
        for start in range(len(word) + 1):
            defeated = _largest_defeated(len(word) - start, first_pump_end(d, word, start, acceptors))
            if defeated + 1 > value:
                value = defeated + 1
                witness = MpsWitness(
                    u=word[:start],
                    w=word[start:start + defeated],
                    v=word[start + defeated:],
                )
    return OracleResult(value, witness)


def defeats_mpl(d: Dfa, word: Word, p: int) -> bool:
    """Accepted word of length >= p with no literal pump ending within its p-prefix"""
    if not d.accepts(word) or len(word) < p:
        return False
    pump_end = first_pump_end(d, word, 0, _suffix_acceptors(d, word))
    return pump_end is None or pump_end > p


def defeats_mps(d: Dfa, u: Word, w: Word, v: Word, p: int) -> bool:
    """u·w·v accepted, |w| >= p, and no literal pump inside the p-prefix of w"""
    word = u + w + v
    if not d.accepts(word) or len(w) < p:
        return False
    pump_end = first_pump_end(d, word, len(u), _suffix_acceptors(d, word))
    return pump_end is None or pump_end > p
