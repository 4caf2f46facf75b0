# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Charting of observed output constants per input constants, for one
operation and one measure, over random or exhaustively enumerated DFAs.
"""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import DefaultDict, Dict, Iterable, List, Optional, Tuple

from shared.automata.dfa import Dfa
from shared.automata.errors import AutomatonInputError
from shared.schemas import RandomDfaParams
from services.harness.random_dfa import all_dfas, random_dfas
from services.harness.ranges import MEASURES, ExpectedSet, expected_set
from services.langops import get_operation
from services.pumping import analyze

logger = logging.getLogger(__name__)

Key = Tuple[int, ...]


@dataclass
class FrequencyTable:
    """Counts of output constants keyed by input constants"""
    operation: str
    measure: str
    counts: DefaultDict[Key, Counter] = field(default_factory=lambda: defaultdict(Counter))
    instances: int = 0

    def add(self, inputs: Key, output: int) -> None:
        self.counts[inputs][output] += 1
        self.instances += 1

    def _allowed(self, inputs: Key) -> Optional[ExpectedSet]:
        try:
            return expected_set(self.operation, self.measure, *inputs)
        except AutomatonInputError:
            return None

    def outliers(self) -> Dict[Key, List[int]]:
        """Observed outputs outside the admissible set of their inputs"""
        found = {}
        for inputs, counter in self.counts.items():
            allowed = self._allowed(inputs)
            if allowed is None:
                continue
            bad = sorted(k for k in counter if not allowed.contains(k))
            if bad:
                found[inputs] = bad
        return found

    def rows(self) -> List[Tuple[Key, List[Tuple[int, int]], str]]:
        table = []
        for inputs in sorted(self.counts):
            allowed = self._allowed(inputs)
            described = allowed.describe() if allowed is not None else "-"
            table.append((inputs, sorted(self.counts[inputs].items()), described))
        return table

    def to_markdown(self) -> str:
        lines = [
            f"### {self.operation} / {self.measure} ({self.instances} instances)",
            "",
            "| inputs | observed (value×count) | admissible set |",
            "|---|---|---|",
        ]
        for inputs, observed, allowed in self.rows():
            cells = ", ".join(f"{k}×{c}" for k, c in observed)
            lines.append(f"| {inputs} | {cells} | {allowed} |")
        return "\n".join(lines) + "\n"


def _population(states: int, alphabet: int, exhaustive: bool, samples: int, seed: int) -> Iterable[Dfa]:
    if exhaustive:
        return all_dfas(states, alphabet)
    params = RandomDfaParams(
        min_states=states, max_states=states,
        min_alphabet=alphabet, max_alphabet=alphabet,
        seed=seed,
    )
    return random_dfas(params, samples)


def chart(
    operation: str,
    measure: str,
    states: int,
    alphabet: int,
    samples: int = 500,
    seed: int = 20240101,
    exhaustive: bool = False,
) -> FrequencyTable:
    """
    Apply an operation to a DFA population and count output constants.

    Binary operations pair consecutive DFAs of the population.

    Args:
        operation: Operation name as registered in langops
        measure: mpc, mpl or mps
        states: Exact state count of the population
        alphabet: Exact alphabet size of the population
        samples: Random population size (ignored when exhaustive)
        seed: Random seed
        exhaustive: Enumerate every DFA of the given shape instead

    Returns:
        FrequencyTable
    """
    if measure not in MEASURES:
        raise AutomatonInputError(f"unknown measure {measure!r}")
    arity, fn = get_operation(operation)
    table = FrequencyTable(operation, measure)
    pending = None
    for d in _population(states, alphabet, exhaustive, samples, seed):
        before = getattr(analyze(d), measure)
        if arity == 1:
            table.add((before,), getattr(analyze(fn(d)), measure))
            continue
        if pending is None:
            pending = (d, before)
            continue
        left, left_value = pending
        pending = None
        table.add((left_value, before), getattr(analyze(fn(left, d)), measure))
    logger.info(f"Charted {table.instances} instances of {operation}/{measure}")
    return table
