# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import itertools
import logging
import string
from typing import Iterator, List

import numpy as np

from shared.automata.dfa import Alphabet, Dfa
from shared.schemas import RandomDfaParams

logger = logging.getLogger(__name__)

LETTERS = string.ascii_lowercase


def _draw(rng: np.random.Generator, params: RandomDfaParams) -> Dfa:
    n = int(rng.integers(params.min_states, params.max_states + 1))
    k = int(rng.integers(params.min_alphabet, params.max_alphabet + 1))
    table = rng.integers(0, n, size=(n, k))
    flags = rng.random(n) < params.accepting_density
    accepting = frozenset(int(q) for q in np.flatnonzero(flags))
    delta = tuple(tuple(int(t) for t in row) for row in table)
    return Dfa(Alphabet.of(LETTERS[:k]), delta, 0, accepting)


def random_dfa(params: RandomDfaParams) -> Dfa:
    """
    One complete DFA drawn from params; the same seed gives the same DFA.

    State 0 is initial, letters are taken from a, b, c, ... in order.
    """
    return _draw(np.random.default_rng(params.seed), params)


def random_dfas(params: RandomDfaParams, count: int) -> List[Dfa]:
    """count DFAs from one generator seeded with params.seed"""
    rng = np.random.default_rng(params.seed)
    automata = [_draw(rng, params) for _ in range(count)]
    logger.debug(f"Drew {count} random DFAs with seed {params.seed}")
    return automata


def all_dfas(n_states: int, n_letters: int, initial: int = 0) -> Iterator[Dfa]:
    """
    Every complete DFA with the given shape.

    Grows as n^(n*k) * 2^n; meant for n*k up to about 6.
    """
    sigma = Alphabet.of(LETTERS[:n_letters])
    cells = n_states * n_letters
    for targets in itertools.product(range(n_states), repeat=cells):
        delta = tuple(
            tuple(targets[q * n_letters:(q + 1) * n_letters]) for q in range(n_states)
        )
        for mask in range(1 << n_states):
            accepting = frozenset(q for q in range(n_states) if mask >> q & 1)
            yield Dfa(sigma, delta, initial, accepting)
