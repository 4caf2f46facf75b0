# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import Callable, Dict, List

from shared.automata.dfa import Dfa, minimize
from shared.schemas import WitnessFamily, WitnessSpec
from services.langops import intersection
from services.witnesses.binary import a_n_a_star, example_language, padded_family, thm_binary
from services.witnesses.blocks import b_plus, b_star
from services.witnesses.operations import intersection_witness, star_witness
from services.witnesses.quinary import quinary_tables, thm_quinary

logger = logging.getLogger(__name__)


# Families producing a single automaton; the intersection family is handled apart
_SINGLE: Dict[WitnessFamily, Callable[..., Dfa]] = {
    WitnessFamily.B_PLUS: b_plus,
    WitnessFamily.B_STAR: b_star,
    WitnessFamily.BINARY_TRIPLE: thm_binary,
    WitnessFamily.PADDED: padded_family,
    WitnessFamily.QUINARY: thm_quinary,
    WitnessFamily.QUINARY_TABLES: quinary_tables,
    WitnessFamily.STAR_WITNESS: star_witness,
    WitnessFamily.AN_ASTAR: a_n_a_star,
    WitnessFamily.EXAMPLE: example_language,
}


def construct(spec: WitnessSpec, combine: bool = False) -> List[Dfa]:
    """
    Build the automata of a witness family.

    Args:
        spec: Family and parameters
        combine: For the intersection family, return the minimal
            intersection instead of the two components

    Returns:
        One DFA, or the two intersection components

    Raises:
        KeyError: If a required parameter is missing
        AutomatonInputError: If the parameters violate the family's constraints
    """
    params = spec.ordered()
    logger.info(f"Constructing {spec.family.value}{params}")
    if spec.family == WitnessFamily.INTERSECTION_WITNESS:
        first, second = intersection_witness(*params)
        if combine:
            return [minimize(intersection(first, second))]
        return [first, second]
    return [_SINGLE[spec.family](*params)]


def build(family: str, **params: int) -> Dfa:
    """Single-automaton shortcut: build("binary", p1=1, p2=2, p3=5)"""
    automata = construct(WitnessSpec(family=WitnessFamily(family), params=params), combine=True)
    return automata[0]

