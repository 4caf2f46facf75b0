# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from typing import List, Dict, Optional, Any
from pydantic import BaseModel, Field, model_validator


class RandomDfaParams(BaseModel):
    """Distribution of random complete DFAs"""
    min_states: int = Field(1, ge=1)
    max_states: int = Field(6, ge=1)
    min_alphabet: int = Field(1, ge=1)
    max_alphabet: int = Field(3, ge=1, le=26)
    accepting_density: float = Field(0.5, ge=0, le=1)
    seed: int = 20240101

    @model_validator(mode="after")
    def _ranges(self):
        if self.min_states > self.max_states:
            raise ValueError("min_states exceeds max_states")
        if self.min_alphabet > self.max_alphabet:
            raise ValueError("min_alphabet exceeds max_alphabet")
        return self


class ExperimentResult(BaseModel):
    """
    One observation of a suite.

    Attributes:
        suite: Suite that produced the row
        operation: Operation or family name
        constant: Measure the row is about (mpc, mpl, mps, sc or a tuple label)
        inputs: Input constants, e.g. [m, n] or the family parameters
        observed: Observed output constant(s)
        expected: Human-readable expected set or value
        passed: Whether observed lies in expected
        seed: Seed of the random population, if any
        finding: Observation outside a stated bound that an independent
            replay confirmed; passes but is listed separately
        instance: Replayable serialization of the failing or noted instance(s)
    """
    suite: str
    operation: str
    constant: str = ""
    inputs: List[int] = Field(default_factory=list)
    observed: List[int] = Field(default_factory=list)
    expected: str
    passed: bool
    seed: Optional[int] = None
    finding: bool = False
    instance: Optional[Dict[str, Any]] = None

    @model_validator(mode="after")
    def _failures_replayable(self):
        if (self.finding or not self.passed) and not self.instance:
            raise ValueError("failed or noted results must carry a replayable instance")
        return self


class SuiteSummary(BaseModel):
    """Aggregate of one suite run"""
    suite: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    failures: List[ExperimentResult] = Field(default_factory=list)
    findings: List[ExperimentResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @classmethod
    def of(cls, suite: str, results: List[ExperimentResult]) -> "SuiteSummary":
        failures = [r for r in results if not r.passed]
        return cls(
            suite=suite,
            total=len(results),
            passed=len(results) - len(failures),
            failed=len(failures),
            failures=failures,
            findings=[r for r in results if r.finding],
        )
