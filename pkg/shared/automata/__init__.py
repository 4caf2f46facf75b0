# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from .errors import (
    AutomatonError,
    AutomatonInputError,
    RegexSyntaxError,
    CodecError,
    SearchBudgetExceeded,
    WitnessConstructionError,
    ChainViolationError
)
from .dfa import (
    Alphabet,
    Dfa,
    PartialDfa,
    Word,
    LAMBDA,
    membership,
    complete,
    minimize,
    sc,
    is_minimal,
    product,
    is_empty,
    is_finite,
    enumerate_words,
    equivalent,
    words_upto,
    align,
    embed_with_loops,
    access_words,
    coaccessible_states,
    reachable_states,
    empty_language,
    universal_language
)
from .nfa import (
    EPSILON,
    Nfa,
    NfaBuilder,
    epsilon_closure,
    determinize,
    dfa_to_nfa,
    reverse_nfa
)
from .regex import parse_regex, regex_symbols

__all__ = [
    # Errors
    "AutomatonError",
    "AutomatonInputError",
    "RegexSyntaxError",
    "CodecError",
    "SearchBudgetExceeded",
    "WitnessConstructionError",
    "ChainViolationError",
    # DFA
    "Alphabet",
    "Dfa",
    "PartialDfa",
    "Word",
    "LAMBDA",
    "membership",
    "complete",
    "minimize",
    "sc",
    "is_minimal",
    "product",
    "is_empty",
    "is_finite",
    "enumerate_words",
    "equivalent",
    "words_upto",
    "align",
    "embed_with_loops",
    "access_words",
    "coaccessible_states",
    "reachable_states",
    "empty_language",
    "universal_language",
    # NFA
    "EPSILON",
    "Nfa",
    "NfaBuilder",
    "epsilon_closure",
    "determinize",
    "dfa_to_nfa",
    "reverse_nfa",
    # Regex
    "parse_regex",
    "regex_symbols",
]
