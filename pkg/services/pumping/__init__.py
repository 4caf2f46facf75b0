# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from .orbit import orbit, pump_valid
from .constants import (
    ConstantResult,
    PumpCheck,
    is_pumpable,
    mpc,
    mpl,
    mps,
    satisfies_mpl,
    satisfies_mps
)
from .analyzer import analyze

__all__ = [
    "orbit",
    "pump_valid",
    "ConstantResult",
    "PumpCheck",
    "is_pumpable",
    "mpc",
    "mpl",
    "mps",
    "satisfies_mpl",
    "satisfies_mps",
    "analyze",
]
