# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from typing import Optional, Tuple


class AutomatonError(Exception):
    """Base class for every error raised by the automata toolkit"""


class AutomatonInputError(AutomatonError, ValueError):
    """Invalid state, symbol, index or parameter passed to an operation"""


class RegexSyntaxError(AutomatonError, ValueError):
    """Regular expression that does not parse, or uses a foreign symbol"""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CodecError(AutomatonError, ValueError):
    """Malformed DFA text or JSON document"""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SearchBudgetExceeded(AutomatonError):
    """Bad-continuation search explored more nodes than allowed"""

    def __init__(self, budget: int, explored: int):
        super().__init__(
            f"bad-continuation search exceeded node budget {budget} "
            f"after {explored} nodes"
        )
        self.budget = budget
        self.explored = explored


class WitnessConstructionError(AutomatonError):
    """A witness automaton does not measure the constants it was built for"""

    def __init__(self, family: str, expected: Tuple[int, ...], computed: Tuple[int, ...]):
        super().__init__(
            f"{family}: expected constants {expected}, computed {computed}"
        )
        self.family = family
        self.expected = expected
        self.computed = computed


class ChainViolationError(AutomatonError):
    """mpc <= mpl <= mps <= sc does not hold for a computed report"""

    def __init__(self, mpc: int, mpl: int, mps: int, sc: int):
        super().__init__(
            f"constant chain violated: mpc={mpc} mpl={mpl} mps={mps} sc={sc}"
        )
        self.values = (mpc, mpl, mps, sc)
