# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Quinary families over {a, b, c, d, e} regulating all four constants.

thm_quinary builds the repaired automaton and self-validates it.
quinary_tables keeps the original alternating-chain tables so their
shortfall on mpl = p2 stays reproducible; it is never validated.
"""

import logging
from typing import Dict, Optional, Set, Tuple

from shared.automata.dfa import Alphabet, Dfa, PartialDfa, complete, embed_with_loops, minimize
from shared.automata.errors import AutomatonInputError
from shared.schemas import MpsWitness
from services.witnesses.binary import thm_binary
from services.witnesses.validation import all_constants, self_validate

logger = logging.getLogger(__name__)

QUINARY = Alphabet.of("abcde")

Moves = Dict[Tuple[int, str], int]


def _check(p1: int, p2: int, p3: int, p4: int) -> None:
    if not 1 <= p1 <= p2 <= p3 <= p4:
        raise AutomatonInputError(
            f"parameters must satisfy 1 <= p1 <= p2 <= p3 <= p4, got {(p1, p2, p3, p4)}"
        )


def _alternating_chain(moves: Moves, first: int, last: int, advance: str, loop: str) -> None:
    """
    States first..last; the state at even offset loops on `loop` and moves on
    `advance`, the roles swap at odd offsets. The last state has no advance.
    """
    for s in range(first, last + 1):
        step, stay = (advance, loop) if (s - first) % 2 == 0 else (loop, advance)
        moves[(s, stay)] = s
        if s < last:
            moves[(s, step)] = s + 1


# ============================================
# Repaired construction
# ============================================

def quinary_moves(p1: int, p2: int, p3: int, p4: int) -> Tuple[int, Moves, Set[int]]:
    """
    Partial transition map of the repaired construction.

    Layout: cycle C_0..C_{p2-1}, descent chain H_1..H_m (m = p3 - p2),
    padding P_0..P_{r-1} (r = p4 - p3 - 1); the sink is left implicit.

    Returns:
        (state count without sink, moves, accepting states)
    """
    _check(p1, p2, p3, p4)
    m = p3 - p2
    r = max(p4 - p3 - 1, 0)

    def cycle(i: int) -> int:
        return i

    def chain(i: int) -> int:
        return p2 + i - 1

    def pad(j: int) -> int:
        return p3 + j

    moves: Moves = {}
    core = list(range(p3))
    top = chain(m) if m else None
    for i in range(p2):
        q = cycle(i)
        moves[(q, "a")] = q
        moves[(q, "b")] = cycle(0)
        moves[(q, "d")] = cycle((i + 1) % p2)
    for i in range(1, m + 1):
        q = chain(i)
        moves[(q, "a")] = q
        moves[(q, "d")] = q
        moves[(q, "b")] = chain(i - 1) if i > 1 else cycle(0)
    for q in core:
        moves[(q, "c")] = top if top is not None else q
        if r >= 1:
            moves[(q, "e")] = pad(0)
        elif p4 == p3:
            moves[(q, "e")] = q

    if r:
        _alternating_chain(moves, pad(0), pad(r - 1), advance="a", loop="e")

    accepting = {cycle(p1 - 1)} | {pad(j) for j in range(r)}
    return p3 + r, moves, accepting


def quinary_mps_witness(p1: int, p2: int, p3: int) -> MpsWitness:
    """Context c, window b^m d^(p2-1), continuation d^p1 defeating p3 - 1"""
    m = p3 - p2
    return MpsWitness(u="c", w="b" * m + "d" * (p2 - 1), v="d" * p1)


def thm_quinary(p1: int, p2: int, p3: int, p4: int, validate: Optional[bool] = None) -> Dfa:
    """
    Language over {a, b, c, d, e} with constants (p1, p2, p3, p4).

    Args:
        p1, p2, p3, p4: Target mpc, mpl, mps, sc with 1 <= p1 <= p2 <= p3 <= p4
        validate: Re-measure the result (defaults to the configured setting)

    Returns:
        Minimal DFA with p4 states

    Raises:
        AutomatonInputError: If the parameters are out of order
        WitnessConstructionError: If self-validation disagrees
    """
    n, moves, accepting = quinary_moves(p1, p2, p3, p4)
    d = minimize(complete(PartialDfa(QUINARY, n, moves, 0, frozenset(accepting))))
    return self_validate("quinary", d, (p1, p2, p3, p4), all_constants, validate)


# ============================================
# Tables as drawn
# ============================================

def quinary_tables(p1: int, p2: int, p3: int, p4: int) -> Dfa:
    """
    Alternating-chain tables, not minimized and not validated.

    Args:
        p1, p2, p3, p4: Parameters with 1 <= p1 <= p2 <= p3 <= p4

    Returns:
        Complete DFA; missing moves go to the sink q_{p4-1}, or loop when p3 = p4
    """
    _check(p1, p2, p3, p4)
    if p2 == p3:
        return embed_with_loops(thm_binary(p1, p2, p3, validate=False), QUINARY)

    moves: Moves = {}
    if p3 == p4:
        _alternating_chain(moves, 0, p3 - 1, advance="a", loop="c")
        _descent(moves, p3 - 1)
        _d_cycle(moves, p2)
        for q in range(p3):
            for symbol in QUINARY:
                moves.setdefault((q, symbol), q)
        partial = PartialDfa(QUINARY, p3, moves, 0, frozenset({p1 - 1}))
        return complete(partial)

    if p1 >= 2:
        chain_end, e_start = p3 - 2, p3 - 1
        accepting = {p1 - 1}
    else:
        chain_end, e_start = p3 - 1, p3
        accepting = {0}
    _alternating_chain(moves, 0, chain_end, advance="a", loop="c")
    _descent(moves, chain_end)
    _d_cycle(moves, p2)
    if e_start <= p4 - 2:
        moves[(0, "e")] = e_start
    _alternating_chain(moves, e_start, p4 - 2, advance="c", loop="e")
    accepting |= set(range(e_start, p4 - 1))
    return complete(PartialDfa(QUINARY, p4 - 1, moves, 0, frozenset(accepting)))


def _descent(moves: Moves, top: int) -> None:
    moves[(0, "b")] = 0
    for i in range(1, top + 1):
        moves[(i, "b")] = i - 1


def _d_cycle(moves: Moves, p2: int) -> None:
    for i in range(p2):
        moves[(i, "d")] = (i + 1) % p2
