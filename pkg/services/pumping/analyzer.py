# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import List, Optional

from shared.automata.dfa import Dfa, first_word_of_length, minimize
from shared.automata.errors import ChainViolationError
from shared.schemas import (
    Decomposition,
    MpsWitness,
    PumpingReport,
    PumpingWitnesses,
    PumpKind
)
from services.pumping.constants import mpc, mpl, mps
from services.pumping.orbit import orbit, pump_valid

logger = logging.getLogger(__name__)


def _decomposition(d: Dfa, kind: PumpKind, word: str, start: int, i: int, j: int) -> Decomposition:
    return Decomposition(
        kind=kind,
        word=word,
        window_start=start,
        i=i,
        j=j,
        orbit=orbit(d, d.run(d.initial, word[:i]), word[i:j]),
    )


def _window_certificate(d: Dfa, p: int, below: MpsWitness) -> Optional[Decomposition]:
    """Pump inside the p-window of the occurrence that defeats p - 1"""
    word = below.u + below.w + below.v
    start = len(below.u)
    if len(word) - start < p or not d.accepts(word):
        return None
    for j in range(start + 1, start + p + 1):
        for i in range(start, j):
            if pump_valid(d, d.initial, word, i, j):
                return _decomposition(d, PumpKind.MPS, word, start, i, j)
    return None


def _certificate(
    d: Dfa,
    kind: PumpKind,
    p: int,
    below: Optional[MpsWitness] = None,
) -> Optional[Decomposition]:
    """
    Pump for an accepted word of length >= p.

    The MPS certificate reuses the occurrence (u, w, v) that defeats p - 1
    and pumps within the p letters following u. Otherwise the first accepted
    word of length >= p is pumped within its p-prefix (anywhere for MPC).
    None when no accepted word is that long.
    """
    if p == 0:
        return None
    if kind == PumpKind.MPS and below is not None:
        certificate = _window_certificate(d, p, below)
        if certificate is not None:
            return certificate
    for length in range(p, p + d.n_states):
        w = first_word_of_length(d, length)
        if w is None:
            continue
        reach = len(w) if kind == PumpKind.MPC else p
        for j in range(1, reach + 1):
            for i in range(j):
                if pump_valid(d, d.initial, w, i, j):
                    return _decomposition(d, kind, w, 0, i, j)
        logger.warning(f"No {kind.value} pump found for {w!r} at p={p}")
        return None
    return None


def analyze(d: Dfa, node_budget: Optional[int] = None) -> PumpingReport:
    """
    Compute mpc, mpl, mps and sc of L(d) with witnesses and certificates.

    Args:
        d: Complete DFA (minimized internally)
        node_budget: Override of the configured search budget

    Returns:
        PumpingReport

    Raises:
        ChainViolationError: If mpc <= mpl <= mps <= sc fails
        SearchBudgetExceeded: If a continuation search exceeds the budget
    """
    m = minimize(d)
    c = mpc(m)
    l = mpl(m, lower=c.value, node_budget=node_budget)
    s = mps(m, lower=l.value, node_budget=node_budget)
    n = m.n_states

    if not c.value <= l.value <= s.value <= n:
        raise ChainViolationError(c.value, l.value, s.value, n)

    certificates: List[Decomposition] = []
    for kind, value in ((PumpKind.MPC, c.value), (PumpKind.MPL, l.value), (PumpKind.MPS, s.value)):
        below = s.witness if kind == PumpKind.MPS else None
        certificate = _certificate(m, kind, value, below)
        if certificate is not None:
            certificates.append(certificate)

    report = PumpingReport(
        mpc=c.value,
        mpl=l.value,
        mps=s.value,
        sc=n,
        witnesses=PumpingWitnesses(mpc=c.witness, mpl=l.witness, mps=s.witness),
        certificates=certificates,
    )
    logger.debug(f"Analyzed DFA with {d.n_states} states: {report.constants}")
    return report
