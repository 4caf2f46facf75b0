# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Nondeterministic automata with epsilon moves.

Nfa values are the intermediate form of reversal, suffix closure,
concatenation, star, downward closure and regex compilation. They are built
with NfaBuilder and turned into complete DFAs with determinize.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from shared.automata.dfa import Alphabet, Dfa
from shared.automata.errors import AutomatonInputError

logger = logging.getLogger(__name__)

# Label of an epsilon move; never a valid alphabet symbol.
EPSILON = ""


@dataclass(frozen=True)
class Nfa:
    """
    NFA over an explicit alphabet.

    Attributes:
        alphabet: Input alphabet
        n_states: States are 0..n_states-1
        transitions: (state, symbol or EPSILON) -> successor set
        initials: Initial states
        accepting: Accepting states
    """
    alphabet: Alphabet
    n_states: int
    transitions: Dict[Tuple[int, str], FrozenSet[int]]
    initials: FrozenSet[int]
    accepting: FrozenSet[int]

    def __post_init__(self):
        valid = range(self.n_states)
        for (q, symbol), targets in self.transitions.items():
            if q not in valid or any(t not in valid for t in targets):
                raise AutomatonInputError(f"transition from {q} on {symbol!r} uses an invalid state")
            if symbol != EPSILON and symbol not in self.alphabet:
                raise AutomatonInputError(f"symbol {symbol!r} not in alphabet")
        if any(q not in valid for q in self.initials | self.accepting):
            raise AutomatonInputError("initial or accepting set references an invalid state")

    def successors(self, q: int, symbol: str) -> FrozenSet[int]:
        return self.transitions.get((q, symbol), frozenset())


class NfaBuilder:
    """Mutable helper that accumulates states and moves, then freezes into an Nfa"""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.n_states = 0
        self._moves: Dict[Tuple[int, str], Set[int]] = {}
        self.initials: Set[int] = set()
        self.accepting: Set[int] = set()

    def add_state(self, initial: bool = False, accepting: bool = False) -> int:
        q = self.n_states
        self.n_states += 1
        if initial:
            self.initials.add(q)
        if accepting:
            self.accepting.add(q)
        return q

    def add_states(self, count: int) -> List[int]:
        return [self.add_state() for _ in range(count)]

    def add_move(self, source: int, symbol: str, target: int) -> None:
        self._moves.setdefault((source, symbol), set()).add(target)

    def add_epsilon(self, source: int, target: int) -> None:
        self.add_move(source, EPSILON, target)

    def copy_dfa(self, d: Dfa) -> List[int]:
        """Add the states and moves of d; returns the new state ids indexed by d's states"""
        ids = self.add_states(d.n_states)
        for q, row in enumerate(d.delta):
            for symbol, target in zip(d.alphabet, row):
                self.add_move(ids[q], symbol, ids[target])
        return ids

    def build(self) -> Nfa:
        return Nfa(
            alphabet=self.alphabet,
            n_states=self.n_states,
            transitions={key: frozenset(targets) for key, targets in self._moves.items()},
            initials=frozenset(self.initials),
            accepting=frozenset(self.accepting),
        )


def epsilon_closure(n: Nfa, states: Iterable[int]) -> FrozenSet[int]:
    closure = set(states)
    stack = list(closure)
    while stack:
        q = stack.pop()
        for target in n.successors(q, EPSILON):
            if target not in closure:
                closure.add(target)
                stack.append(target)
    return frozenset(closure)


def determinize(n: Nfa) -> Dfa:
    """
    Subset construction with epsilon closure.

    The empty subset is kept as an ordinary state, so the result is complete
    and its sink (if any) is the empty subset. Subsets are numbered in BFS
    discovery order under alphabet order.
    """
    start = epsilon_closure(n, n.initials)
    numbering = {start: 0}
    subsets = [start]
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for symbol in n.alphabet:
            moved = set()
            for q in current:
                moved.update(n.successors(q, symbol))
            target = epsilon_closure(n, moved)
            if target not in numbering:
                numbering[target] = len(subsets)
                subsets.append(target)
                queue.append(target)

    rows = []
    for current in subsets:
        row = []
        for symbol in n.alphabet:
            moved = set()
            for q in current:
                moved.update(n.successors(q, symbol))
            row.append(numbering[epsilon_closure(n, moved)])
        rows.append(tuple(row))
    accepting = frozenset(i for i, s in enumerate(subsets) if s & n.accepting)
    logger.debug(f"Subset construction: {n.n_states} NFA states -> {len(subsets)} subsets")
    return Dfa(n.alphabet, tuple(rows), 0, accepting)


def dfa_to_nfa(d: Dfa) -> Nfa:
    builder = NfaBuilder(d.alphabet)
    ids = builder.copy_dfa(d)
    builder.initials.add(ids[d.initial])
    builder.accepting.update(ids[q] for q in d.accepting)
    return builder.build()


def reverse_nfa(d: Dfa) -> Nfa:
    """NFA for the reversal of L(d): moves flipped, initial and accepting swapped"""
    builder = NfaBuilder(d.alphabet)
    builder.add_states(d.n_states)
    for q, row in enumerate(d.delta):
        for symbol, target in zip(d.alphabet, row):
            builder.add_move(target, symbol, q)
    builder.initials.update(d.accepting)
    builder.accepting.add(d.initial)
    return builder.build()
