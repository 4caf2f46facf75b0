# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from typing import List, Optional
from pydantic import BaseModel, Field, model_validator
from enum import Enum


class PumpKind(str, Enum):
    """Which pumping lemma a constant or certificate refers to"""
    MPC = "mpc"
    MPL = "mpl"
    MPS = "mps"


class Orbit(BaseModel):
    """States {q·y^t | t >= 0} in visiting order"""
    states: List[int]
    preperiod: int = Field(..., ge=0)
    period: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _lengths_match(self):
        if self.preperiod + self.period != len(self.states):
            raise ValueError("preperiod + period must equal the number of orbit states")
        return self


class Decomposition(BaseModel):
    """
    A pump certificate: word = xyz with x = word[:i], y = word[i:j], z = word[j:].

    word is an accepted word; window_start is the offset of the pumped
    window inside it; the pump lies within the window.
    """
    kind: PumpKind
    word: str
    window_start: int = Field(0, ge=0)
    i: int = Field(..., ge=0)
    j: int = Field(..., ge=1)
    orbit: Orbit

    @model_validator(mode="after")
    def _pump_nonempty(self):
        if not self.i < self.j <= len(self.word):
            raise ValueError(f"need 0 <= i < j <= |word|, got i={self.i} j={self.j}")
        return self


class MpsWitness(BaseModel):
    """Accepted word u·w·v whose sub-word w has no valid pump in its p-prefix"""
    u: str
    w: str
    v: str


class PumpingWitnesses(BaseModel):
    """Words defeating p - 1 for each constant (absent when p = 0)"""
    mpc: Optional[str] = None
    mpl: Optional[str] = None
    mps: Optional[MpsWitness] = None


class PumpingReport(BaseModel):
    """The three minimal pumping constants and the state complexity of one language"""
    mpc: int = Field(..., ge=0)
    mpl: int = Field(..., ge=0)
    mps: int = Field(..., ge=0)
    sc: int = Field(..., ge=1)
    witnesses: PumpingWitnesses = Field(default_factory=PumpingWitnesses)
    certificates: List[Decomposition] = Field(default_factory=list)

    @property
    def constants(self):
        return (self.mpc, self.mpl, self.mps, self.sc)
