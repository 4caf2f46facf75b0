# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from .random_dfa import all_dfas, random_dfa, random_dfas
from .ranges import ExpectedSet, expected_set
from .suites import SUITES, run_suite
from .search import FrequencyTable, chart
from .report import to_json, to_markdown

__all__ = [
    # Random automata
    "all_dfas",
    "random_dfa",
    "random_dfas",
    # Operation ranges
    "ExpectedSet",
    "expected_set",
    # Suites
    "SUITES",
    "run_suite",
    "FrequencyTable",
    "chart",
    # Reports
    "to_json",
    "to_markdown",
]
