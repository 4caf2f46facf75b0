# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from .brute_force import (
    OracleResult,
    defeats_mpl,
    defeats_mps,
    oracle_mpc,
    oracle_mpl,
    oracle_mps,
    oracle_pumpable_mpc,
    pumps_literally
)
from .cross_validate import OracleCrossValidator, cross_validate

__all__ = [
    "OracleResult",
    "defeats_mpl",
    "defeats_mps",
    "oracle_mpc",
    "oracle_mpl",
    "oracle_mps",
    "oracle_pumpable_mpc",
    "pumps_literally",
    "OracleCrossValidator",
    "cross_validate",
]
