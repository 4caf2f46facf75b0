# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from typing import List, Tuple
from pydantic import BaseModel, Field


class DfaDocument(BaseModel):
    """JSON mirror of the DFA text format"""
    alphabet: List[str]
    states: int = Field(..., ge=1)
    initial: int = Field(..., ge=0)
    accepting: List[int] = Field(default_factory=list)
    delta: List[Tuple[int, str, int]] = Field(
        default_factory=list,
        description="One (state, symbol, successor) triple per state and symbol"
    )
