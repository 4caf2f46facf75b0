# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from .binary import (
    EXAMPLE_REGEX,
    a_n_a_star,
    binary_regex,
    example_language,
    padded_expected,
    padded_family,
    thm_binary
)
from .blocks import b_plus, b_plus_regex, b_star, b_star_regex
from .operations import intersection_regexes, intersection_witness, star_regex, star_witness
from .quinary import quinary_mps_witness, quinary_moves, quinary_tables, thm_quinary
from .registry import build, construct
from .validation import self_validate

__all__ = [
    # Blocks
    "b_plus",
    "b_plus_regex",
    "b_star",
    "b_star_regex",
    # Binary and anchors
    "EXAMPLE_REGEX",
    "a_n_a_star",
    "binary_regex",
    "example_language",
    "padded_expected",
    "padded_family",
    "thm_binary",
    # Quinary
    "quinary_moves",
    "quinary_mps_witness",
    "quinary_tables",
    "thm_quinary",
    # Operation witnesses
    "intersection_regexes",
    "intersection_witness",
    "star_regex",
    "star_witness",
    # Registry
    "build",
    "construct",
    "self_validate",
]
