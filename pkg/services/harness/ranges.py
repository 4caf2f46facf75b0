# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Attainable output constants of each operation, given its input constants.

Each row answers: if the operands measure (m[, n]) under K, which values can
K take on the result? Suites test membership only.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Optional

from shared.automata.errors import AutomatonInputError

MEASURES = ("mpc", "mpl", "mps")

RANGE_UNARY = ("star", "reversal", "complement", "prefix_closure", "suffix_closure")
RANGE_BINARY = ("union", "difference", "concatenation", "intersection", "symmetric_difference")


@dataclass(frozen=True)
class ExpectedSet:
    """Integers lo..hi (hi None for unbounded) minus excluded"""
    lo: int
    hi: Optional[int] = None
    excluded: FrozenSet[int] = field(default_factory=frozenset)

    def contains(self, k: int) -> bool:
        if k < self.lo or k in self.excluded:
            return False
        return self.hi is None or k <= self.hi

    def describe(self) -> str:
        if self.hi is not None and self.lo == self.hi:
            return f"{{{self.lo}}}"
        if self.hi is not None:
            body = f"{{{self.lo},…,{self.hi}}}"
        else:
            body = "ℕ0" if self.lo == 0 else ("ℕ" if self.lo == 1 else f"{{{self.lo},…}}")
        if self.excluded:
            body += " \\ {" + ",".join(str(x) for x in sorted(self.excluded)) + "}"
        return body


def exactly(k: int) -> ExpectedSet:
    return ExpectedSet(k, k)


def upto(lo: int, hi: int) -> ExpectedSet:
    return ExpectedSet(lo, hi)


NATURALS = ExpectedSet(1)
NATURALS0 = ExpectedSet(0)


def without(*values: int) -> ExpectedSet:
    return ExpectedSet(0, None, frozenset(values))


def _unary(op: str, measure: str, n: int) -> ExpectedSet:
    if op == "star":
        if measure == "mpc" or n == 0:
            return exactly(1)
        return upto(1, n) if measure == "mpl" else upto(1, 2 * n - 1)
    if op == "reversal":
        if measure == "mpl":
            return exactly(0) if n == 0 else NATURALS
        return exactly(n)
    if op == "complement":
        if n == 0:
            return exactly(1)
        return without(1) if n == 1 else NATURALS
    if op == "prefix_closure":
        if n == 0:
            return exactly(0)
        return NATURALS if measure == "mpc" else upto(1, n)
    if op == "suffix_closure":
        if n == 0:
            return exactly(0)
        if measure == "mpc":
            return NATURALS
        if measure == "mpl":
            return exactly(1) if n == 1 else NATURALS
        return upto(1, n)
    raise AutomatonInputError(f"no range row for unary operation {op!r}")


def _binary(op: str, measure: str, m: int, n: int) -> ExpectedSet:
    if op == "union":
        if m == 0 or n == 0:
            return exactly(max(m, n))
        return upto(1, max(m, n))
    if op == "difference":
        if m == 0:
            return exactly(0)
        if n == 0:
            return exactly(m)
        return without(1) if n == 1 else NATURALS0
    if op == "concatenation":
        if m == 0 or n == 0:
            return exactly(0)
        return upto(1, m + n - 1)
    if op == "intersection":
        if m == 0 or n == 0:
            return exactly(0)
        if m == n == 1:
            return without(2) if measure == "mpc" else exactly(1)
        return NATURALS0
    if op == "symmetric_difference":
        if m == 0 or n == 0:
            return exactly(max(m, n))
        if m == n == 1:
            return without(1)
        return NATURALS0 if m == n else NATURALS
    raise AutomatonInputError(f"no range row for binary operation {op!r}")


def expected_set(op: str, measure: str, m: int, n: Optional[int] = None) -> ExpectedSet:
    """
    Admissible output constants of an operation.

    Args:
        op: Operation name as registered in langops
        measure: mpc, mpl or mps
        m: Constant of the (first) operand
        n: Constant of the second operand for binary operations

    Returns:
        ExpectedSet of admissible output constants

    Raises:
        AutomatonInputError: On an unknown operation or measure
    """
    if measure not in MEASURES:
        raise AutomatonInputError(f"unknown measure {measure!r}")
    if n is None:
        return _unary(op, measure, m)
    return _binary(op, measure, m, n)
