# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import Callable, Optional, Tuple

from config.analysis_config import get_analysis_config
from shared.automata.dfa import Dfa
from shared.automata.errors import WitnessConstructionError
from shared.schemas import PumpingReport
from services.pumping.analyzer import analyze

logger = logging.getLogger(__name__)

Projection = Callable[[PumpingReport], Tuple[int, ...]]


def mpc_mpl_sc(report: PumpingReport) -> Tuple[int, ...]:
    return report.mpc, report.mpl, report.sc


def all_constants(report: PumpingReport) -> Tuple[int, ...]:
    return report.constants


def mps_only(report: PumpingReport) -> Tuple[int, ...]:
    return (report.mps,)


def self_validate(
    family: str,
    d: Dfa,
    expected: Tuple[int, ...],
    project: Projection,
    validate: Optional[bool] = None,
) -> Dfa:
    """
    Re-measure a constructed automaton.

    Args:
        family: Family name for messages
        d: Constructed DFA
        expected: Constants the construction promises
        project: Selects the promised constants from a report
        validate: Force on/off; defaults to the configured self_validate

    Returns:
        d unchanged

    Raises:
        WitnessConstructionError: If the measured constants differ
    """
    if validate is None:
        validate = get_analysis_config().self_validate
    if not validate:
        return d
    computed = project(analyze(d))
    if computed != tuple(expected):
        raise WitnessConstructionError(family, tuple(expected), computed)
    logger.debug(f"{family}{tuple(expected)} validated")
    return d
