# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Complete deterministic automata and the classical algorithms on them.

A Dfa is immutable: every operation returns a new automaton. States are the
integers 0..n_states-1 and transitions are stored as one row per state with
one entry per alphabet symbol, in alphabet order.

Usage:
    from shared.automata.dfa import Alphabet, Dfa, minimize

    sigma = Alphabet.of("ab")
    d = Dfa(sigma, ((0, 1), (1, 1)), 0, frozenset({0}))
    assert minimize(d).n_states == 2
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

from shared.automata.errors import AutomatonInputError

logger = logging.getLogger(__name__)

# Words are plain strings; every symbol is a single character.
Word = str

LAMBDA = ""


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of single-character symbols"""
    symbols: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index: Dict[str, int] = {}
        for position, symbol in enumerate(self.symbols):
            if not isinstance(symbol, str) or len(symbol) != 1 or symbol.isspace():
                raise AutomatonInputError(f"invalid symbol {symbol!r}")
            if symbol in index:
                raise AutomatonInputError(f"duplicate symbol {symbol!r}")
            index[symbol] = position
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, symbols: Iterable[str]) -> "Alphabet":
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._index

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AutomatonInputError(
                f"symbol {symbol!r} not in alphabet {''.join(self.symbols)!r}"
            ) from None

    def union(self, other: "Alphabet") -> "Alphabet":
        """Own symbols first, then the other's new symbols in their order"""
        extra = tuple(s for s in other.symbols if s not in self._index)
        return Alphabet(self.symbols + extra)

    def issubset(self, other: "Alphabet") -> bool:
        return all(s in other for s in self.symbols)

    def check_word(self, word: Word) -> None:
        for symbol in word:
            self.index(symbol)

    def sort_key(self, word: Word) -> Tuple[int, Tuple[int, ...]]:
        """Length-then-lexicographic key under alphabet order"""
        return len(word), tuple(self._index[s] for s in word)


def k_prefix(word: Word, k: int) -> Word:
    return word[:k]


def k_suffix(word: Word, k: int) -> Word:
    return word[len(word) - k:] if k > 0 else LAMBDA


@dataclass(frozen=True)
class Dfa:
    """
    Complete DFA over an explicit alphabet.

    Attributes:
        alphabet: Input alphabet, fixes the column order of delta
        delta: delta[q][k] is the successor of state q on symbol number k
        initial: Initial state
        accepting: Accepting states
    """
    alphabet: Alphabet
    delta: Tuple[Tuple[int, ...], ...]
    initial: int
    accepting: FrozenSet[int]

    def __post_init__(self):
        n = len(self.delta)
        if n == 0:
            raise AutomatonInputError("a DFA needs at least one state")
        width = len(self.alphabet)
        for q, row in enumerate(self.delta):
            if len(row) != width:
                raise AutomatonInputError(
                    f"state {q} has {len(row)} transitions, alphabet has {width} symbols"
                )
            for target in row:
                if not 0 <= target < n:
                    raise AutomatonInputError(f"state {q} moves to invalid state {target}")
        if not 0 <= self.initial < n:
            raise AutomatonInputError(f"invalid initial state {self.initial}")
        if any(not 0 <= q < n for q in self.accepting):
            raise AutomatonInputError("accepting set references an invalid state")

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def check_state(self, q: int) -> None:
        if not 0 <= q < self.n_states:
            raise AutomatonInputError(f"invalid state {q}")

    def step(self, q: int, symbol: str) -> int:
        return self.delta[q][self.alphabet.index(symbol)]

    def run(self, q: int, word: Word) -> int:
        index = self.alphabet.index
        for symbol in word:
            q = self.delta[q][index(symbol)]
        return q

    def accepts(self, word: Word) -> bool:
        return self.run(self.initial, word) in self.accepting

    def accepts_from(self, q: int, word: Word) -> bool:
        return self.run(q, word) in self.accepting


def membership(d: Dfa, w: Word) -> bool:
    """True iff the initial state reaches an accepting state on w"""
    return d.accepts(w)


@dataclass(frozen=True)
class PartialDfa:
    """DFA whose transition map may be partial, as drawn with the sink omitted"""
    alphabet: Alphabet
    n_states: int
    transitions: Dict[Tuple[int, str], int]
    initial: int
    accepting: FrozenSet[int]


def complete(d: PartialDfa, sigma: Optional[Alphabet] = None) -> Dfa:
    """
    Make a partial DFA total, routing missing moves to a non-accepting sink.

    Args:
        d: Partial automaton
        sigma: Target alphabet, must contain d.alphabet (defaults to it)

    Returns:
        Complete DFA for the same language; a fresh sink is added only when
        some transition is missing
    """
    sigma = sigma or d.alphabet
    if not d.alphabet.issubset(sigma):
        raise AutomatonInputError("target alphabet must contain the automaton's alphabet")
    for (q, symbol), target in d.transitions.items():
        if not 0 <= q < d.n_states or not 0 <= target < d.n_states:
            raise AutomatonInputError(f"transition ({q}, {symbol!r}) -> {target} is out of range")
        if symbol not in d.alphabet:
            raise AutomatonInputError(f"symbol {symbol!r} not in alphabet")

    missing = any(
        (q, symbol) not in d.transitions
        for q in range(d.n_states) for symbol in sigma
    )
    sink = d.n_states
    rows = []
    for q in range(d.n_states):
        rows.append(tuple(d.transitions.get((q, symbol), sink) for symbol in sigma))
    if missing:
        rows.append(tuple(sink for _ in sigma))
    return Dfa(sigma, tuple(rows), d.initial, frozenset(d.accepting))


def reachable_states(d: Dfa) -> List[int]:
    """States reachable from the initial state, in BFS order under alphabet order"""
    seen = {d.initial}
    order = [d.initial]
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for target in d.delta[q]:
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)
    return order


def coaccessible_states(d: Dfa) -> FrozenSet[int]:
    """States from which some accepting state is reachable"""
    reverse: List[Set[int]] = [set() for _ in range(d.n_states)]
    for q, row in enumerate(d.delta):
        for target in row:
            reverse[target].add(q)
    seen = set(d.accepting)
    queue = deque(seen)
    while queue:
        q = queue.popleft()
        for source in reverse[q]:
            if source not in seen:
                seen.add(source)
                queue.append(source)
    return frozenset(seen)


def access_words(d: Dfa) -> Dict[int, Word]:
    """Shortest, then lexicographically least, word reaching each reachable state"""
    words = {d.initial: LAMBDA}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for symbol, target in zip(d.alphabet, d.delta[q]):
            if target not in words:
                words[target] = words[q] + symbol
                queue.append(target)
    return words


def minimize(d: Dfa) -> Dfa:
    """
    Minimal complete DFA for L(d).

    Unreachable states are dropped, the rest are merged by Moore-style
    partition refinement, and the quotient is renumbered in BFS order under
    alphabet order so equal languages give identical automata.
    """
    states = reachable_states(d)
    block = {q: int(q in d.accepting) for q in states}

    while True:
        signatures: Dict[Tuple[int, ...], int] = {}
        refined = {}
        for q in states:
            signature = (block[q],) + tuple(block[t] for t in d.delta[q])
            refined[q] = signatures.setdefault(signature, len(signatures))
        stable = len(signatures) == len(set(block.values()))
        block = refined
        if stable:
            break

    # Canonical renumbering: BFS from the initial block.
    representative: Dict[int, int] = {}
    for q in states:
        representative.setdefault(block[q], q)
    numbering = {block[d.initial]: 0}
    queue = deque([block[d.initial]])
    rows: List[Tuple[int, ...]] = []
    order = [block[d.initial]]
    while queue:
        b = queue.popleft()
        for target in d.delta[representative[b]]:
            tb = block[target]
            if tb not in numbering:
                numbering[tb] = len(numbering)
                order.append(tb)
                queue.append(tb)
    for b in order:
        rows.append(tuple(numbering[block[t]] for t in d.delta[representative[b]]))
    accepting = frozenset(numbering[b] for b in order if representative[b] in d.accepting)
    return Dfa(d.alphabet, tuple(rows), 0, accepting)


def sc(d: Dfa) -> int:
    """State complexity: size of the minimal complete DFA, sink included"""
    return minimize(d).n_states


def is_minimal(d: Dfa) -> bool:
    return sc(d) == d.n_states


def align(d: Dfa, sigma: Alphabet) -> Dfa:
    """Extend d to a larger alphabet; new symbols lead to a non-accepting sink"""
    if not d.alphabet.issubset(sigma):
        raise AutomatonInputError("target alphabet must contain the automaton's alphabet")
    if d.alphabet == sigma:
        return d
    transitions = {
        (q, symbol): target
        for q, row in enumerate(d.delta)
        for symbol, target in zip(d.alphabet, row)
    }
    partial = PartialDfa(d.alphabet, d.n_states, transitions, d.initial, d.accepting)
    return complete(partial, sigma)


def embed_with_loops(d: Dfa, sigma: Alphabet) -> Dfa:
    """Extend d to a larger alphabet; new symbols are self-loops on every state"""
    if not d.alphabet.issubset(sigma):
        raise AutomatonInputError("target alphabet must contain the automaton's alphabet")
    rows = []
    for q, row in enumerate(d.delta):
        rows.append(tuple(
            row[d.alphabet.index(symbol)] if symbol in d.alphabet else q
            for symbol in sigma
        ))
    return Dfa(sigma, tuple(rows), d.initial, d.accepting)


def product(d1: Dfa, d2: Dfa, combine: Callable[[bool, bool], bool]) -> Dfa:
    """
    Reachable product automaton.

    Args:
        d1: Left operand
        d2: Right operand, over the same alphabet
        combine: Acceptance of a pair from the two component acceptances

    Returns:
        DFA whose state (q1, q2) accepts iff combine(q1 in F1, q2 in F2)
    """
    if d1.alphabet != d2.alphabet:
        raise AutomatonInputError(
            f"alphabet mismatch: {''.join(d1.alphabet)!r} vs {''.join(d2.alphabet)!r}"
        )
    start = (d1.initial, d2.initial)
    numbering = {start: 0}
    queue = deque([start])
    rows: List[Tuple[int, ...]] = []
    pairs = [start]
    while queue:
        q1, q2 = queue.popleft()
        for t1, t2 in zip(d1.delta[q1], d2.delta[q2]):
            if (t1, t2) not in numbering:
                numbering[(t1, t2)] = len(numbering)
                pairs.append((t1, t2))
                queue.append((t1, t2))
    for q1, q2 in pairs:
        rows.append(tuple(numbering[(t1, t2)] for t1, t2 in zip(d1.delta[q1], d2.delta[q2])))
    accepting = frozenset(
        i for i, (q1, q2) in enumerate(pairs)
        if combine(q1 in d1.accepting, q2 in d2.accepting)
    )
    return Dfa(d1.alphabet, tuple(rows), 0, accepting)


def is_empty(d: Dfa) -> bool:
    return not any(q in d.accepting for q in reachable_states(d))


def is_finite(d: Dfa) -> bool:
    """No cycle on a path from the initial state to an accepting state"""
    live = coaccessible_states(d)
    trim = [q for q in reachable_states(d) if q in live]
    trim_set = set(trim)
    indegree = {q: 0 for q in trim}
    for q in trim:
        for target in d.delta[q]:
            if target in trim_set:
                indegree[target] += 1
    queue = deque(q for q in trim if indegree[q] == 0)
    removed = 0
    while queue:
        q = queue.popleft()
        removed += 1
        for target in d.delta[q]:
            if target in trim_set:
                indegree[target] -= 1
                if indegree[target] == 0:
                    queue.append(target)
    return removed == len(trim)


def enumerate_words(d: Dfa, max_len: int) -> List[Word]:
    """Accepted words of length <= max_len in length-then-lexicographic order"""
    live = coaccessible_states(d)
    if d.initial not in live:
        return []
    words: List[Word] = []
    layer: List[Tuple[Word, int]] = [(LAMBDA, d.initial)]
    for length in range(max_len + 1):
        words.extend(w for w, q in layer if q in d.accepting)
        if length == max_len:
            break
        layer = [
            (w + symbol, target)
            for w, q in layer
            for symbol, target in zip(d.alphabet, d.delta[q])
            if target in live
        ]
        if not layer:
            break
    return words


def shortest_word(d: Dfa, q: Optional[int] = None) -> Optional[Word]:
    """Shortest, then least, word accepted from q (default: initial state)"""
    start = d.initial if q is None else q
    seen = {start: LAMBDA}
    queue = deque([start])
    while queue:
        s = queue.popleft()
        if s in d.accepting:
            return seen[s]
        for symbol, target in zip(d.alphabet, d.delta[s]):
            if target not in seen:
                seen[target] = seen[s] + symbol
                queue.append(target)
    return None


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Language equality over the same alphabet"""
    if d1.alphabet != d2.alphabet:
        raise AutomatonInputError("equivalence needs equal alphabets")
    return minimize(d1) == minimize(d2)


def words_upto(sigma: Alphabet, max_len: int) -> Iterator[Word]:
    """All words of length <= max_len in length-then-lexicographic order"""
    for length in range(max_len + 1):
        for letters in cartesian(sigma.symbols, repeat=length):
            yield "".join(letters)


def empty_language(sigma: Alphabet) -> Dfa:
    return Dfa(sigma, (tuple(0 for _ in sigma),), 0, frozenset())


def universal_language(sigma: Alphabet) -> Dfa:
    return Dfa(sigma, (tuple(0 for _ in sigma),), 0, frozenset({0}))


def first_word_of_length(d: Dfa, length: int) -> Optional[Word]:
    """Alphabetically least accepted word of exactly the given length"""
    # ready[k]: states accepting some word of length exactly k
    ready: List[Set[int]] = [set(d.accepting)]
    for _ in range(length):
        previous = ready[-1]
        ready.append({q for q in range(d.n_states) if any(t in previous for t in d.delta[q])})
    if d.initial not in ready[length]:
        return None
    q, symbols = d.initial, []
    for remaining in range(length, 0, -1):
        for symbol, target in zip(d.alphabet, d.delta[q]):
            if target in ready[remaining - 1]:
                symbols.append(symbol)
                q = target
                break
    return "".join(symbols)
