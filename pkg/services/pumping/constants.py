# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Exact minimal pumping constants.

mpc is computed in closed form as one more than the length of the longest
unpumpable accepted word. mpl and mps are found by an ascending scan over p
with exact decision procedures: a prefix (mpl) or window (mps) of length p
is bad iff some continuation defeats every pump candidate inside it.

Only words whose state path is simple need to be examined: a repeated state
q_i = q_j yields the candidate (i, j) whose orbit is a single state, which
is a valid pump for every continuation.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterator, List, Optional, Tuple, Union

from config.analysis_config import get_analysis_config
from shared.automata.dfa import Dfa, Word, access_words, coaccessible_states, shortest_word
from shared.automata.errors import AutomatonInputError
from shared.schemas import MpsWitness
from services.pumping.continuation import find_bad_continuation
from services.pumping.orbit import orbit_states

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PumpCheck:
    """Outcome of testing one p; counterexample is set when p fails"""
    holds: bool
    counterexample: Optional[Union[Word, MpsWitness]] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class ConstantResult:
    """A minimal constant and the witness defeating value - 1 (None when value is 0)"""
    value: int
    witness: Optional[Union[Word, MpsWitness]] = None


def _budget(node_budget: Optional[int]) -> int:
    return node_budget if node_budget is not None else get_analysis_config().node_budget


# ============================================
# Candidate sets
# ============================================

def candidate_images(d: Dfa, path: List[int], word: Word) -> List[FrozenSet[int]]:
    """
    For every pump candidate (i, j) of word read along path, the states
    reached after the tail word[j:] from the orbit of path[i] under word[i:j].
    Candidates are ordered by j, then i.
    """
    images = []
    for j in range(1, len(word) + 1):
        tail = word[j:]
        for i in range(j):
            states, _ = orbit_states(d, path[i], word[i:j])
            images.append(frozenset(d.run(r, tail) for r in states))
    return images


def simple_paths(d: Dfa, start: int, length: int, live: FrozenSet[int]) -> Iterator[Tuple[Word, List[int]]]:
    """
    Words of exactly `length` read from start along state-distinct live paths,
    in alphabetical order, with their state paths.
    """
    if start not in live:
        return
    word: List[str] = []
    path = [start]
    on_path = {start}

    def walk() -> Iterator[Tuple[Word, List[int]]]:
        if len(word) == length:
            yield "".join(word), list(path)
            return
        for symbol, target in zip(d.alphabet, d.delta[path[-1]]):
            if target in on_path or target not in live:
                continue
            word.append(symbol)
            path.append(target)
            on_path.add(target)
            yield from walk()
            on_path.discard(target)
            path.pop()
            word.pop()

    yield from walk()


# ============================================
# mpc
# ============================================

def is_pumpable(d: Dfa, w: Word, path: Optional[List[int]] = None) -> bool:
    """Some non-empty factor of accepted word w can be pumped (classical lemma)"""
    if path is None:
        path = [d.initial]
        for symbol in w:
            path.append(d.step(path[-1], symbol))
    return any(
        all(s in d.accepting for s in image)
        for image in candidate_images(d, path, w)
    )


def mpc(d: Dfa) -> ConstantResult:
    """
    Minimal pumping constant of the classical pumping lemma.

    Returns:
        1 + length of the longest unpumpable accepted word (0 for the empty
        language); the witness is that word, first in alphabetical order
        among the longest
    """
    live = coaccessible_states(d)
    if d.initial not in live:
        return ConstantResult(0)
    best: Optional[Word] = None
    for length in range(d.n_states):
        for w, path in simple_paths(d, d.initial, length, live):
            if path[-1] in d.accepting and not is_pumpable(d, w, path):
                if best is None or len(w) > len(best):
                    best = w
    return ConstantResult(len(best) + 1, best)


# ============================================
# mpl
# ============================================

def satisfies_mpl(d: Dfa, p: int, node_budget: Optional[int] = None) -> PumpCheck:
    """
    Whether every accepted word of length >= p has a valid pump within its
    p-prefix.

    Returns:
        PumpCheck; on failure the counterexample is u·v with u the first bad
        p-prefix in alphabetical order and v its shortest bad continuation
    """
    if p == 0:
        shortest = shortest_word(d)
        return PumpCheck(shortest is None, shortest)
    budget = _budget(node_budget)
    live = coaccessible_states(d)
    for u, path in simple_paths(d, d.initial, p, live):
        images = candidate_images(d, path, u)
        v = find_bad_continuation(d, path[-1], images, budget)
        if v is not None:
            return PumpCheck(False, u + v)
    return PumpCheck(True)


def mpl(d: Dfa, lower: int = 0, node_budget: Optional[int] = None) -> ConstantResult:
    """
    Minimal pumping constant with the |xy| <= p condition.

    Args:
        d: Complete DFA
        lower: Known lower bound (e.g. mpc) where the scan may start
        node_budget: Override of the configured search budget
    """
    witness = None
    if lower > 0:
        below = satisfies_mpl(d, lower - 1, node_budget)
        if below.holds:
            raise AutomatonInputError(f"lower bound {lower} is not below the minimal constant")
        witness = below.counterexample
    p = lower
    while True:
        check = satisfies_mpl(d, p, node_budget)
        logger.debug(f"mpl scan: p={p} holds={check.holds}")
        if check.holds:
            return ConstantResult(p, witness)
        witness = check.counterexample
        p += 1


# ============================================
# mps
# ============================================

def satisfies_mps(d: Dfa, p: int, node_budget: Optional[int] = None) -> PumpCheck:
    """
    Whether every sub-word occurrence of length >= p in an accepted word has
    a valid pump within its p-prefix.

    Windows (q, w) with |w| = p are examined for accessible states q in
    breadth-first order and words w in alphabetical order.

    Returns:
        PumpCheck; on failure the counterexample is (u, w, v) with u the
        shortest word reaching q and v the shortest bad continuation
    """
    if p == 0:
        shortest = shortest_word(d)
        if shortest is None:
            return PumpCheck(True)
        return PumpCheck(False, MpsWitness(u="", w="", v=shortest))
    budget = _budget(node_budget)
    live = coaccessible_states(d)
    for q, u in access_words(d).items():
        for w, path in simple_paths(d, q, p, live):
            images = candidate_images(d, path, w)
            v = find_bad_continuation(d, path[-1], images, budget)
            if v is not None:
                return PumpCheck(False, MpsWitness(u=u, w=w, v=v))
    return PumpCheck(True)


def mps(d: Dfa, lower: int = 0, node_budget: Optional[int] = None) -> ConstantResult:
    """
    Minimal pumping constant of the sub-word pumping lemma.

    Args:
        d: Complete DFA
        lower: Known lower bound (e.g. mpl) where the scan may start
        node_budget: Override of the configured search budget
    """
    witness = None
    if lower > 0:
        below = satisfies_mps(d, lower - 1, node_budget)
        if below.holds:
            raise AutomatonInputError(f"lower bound {lower} is not below the minimal constant")
        witness = below.counterexample
    p = lower
    while True:
        check = satisfies_mps(d, p, node_budget)
        logger.debug(f"mps scan: p={p} holds={check.holds}")
        if check.holds:
            return ConstantResult(p, witness)
        witness = check.counterexample
        p += 1
