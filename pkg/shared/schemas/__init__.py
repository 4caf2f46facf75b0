# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from .automaton import DfaDocument
from .pumping import (
    PumpKind,
    Orbit,
    Decomposition,
    MpsWitness,
    PumpingWitnesses,
    PumpingReport
)
from .witness import (
    WitnessFamily,
    WitnessSpec,
    FAMILY_PARAMS,
    PARAM_NAMES
)
from .experiment import (
    ExperimentResult,
    RandomDfaParams,
    SuiteSummary
)
from .verification import (
    VerificationReport,
    VerificationStatus,
    VerificationTest,
    VerificationTestResult
)

__all__ = [
    # Automaton
    "DfaDocument",
    # Pumping
    "PumpKind",
    "Orbit",
    "Decomposition",
    "MpsWitness",
    "PumpingWitnesses",
    "PumpingReport",
    # Witness
    "WitnessFamily",
    "WitnessSpec",
    "FAMILY_PARAMS",
    "PARAM_NAMES",
    # Experiment
    "ExperimentResult",
    "RandomDfaParams",
    "SuiteSummary",
    # Verification
    "VerificationReport",
    "VerificationStatus",
    "VerificationTest",
    "VerificationTestResult",
]
