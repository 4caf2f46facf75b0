# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

"""
Analysis Configuration

Search limits, sampling sizes and seeds for the pumping-constant procedures
and the experiment suites. Values come from the environment (or a `.env`
file) and can be overridden per invocation by CLI flags.

Usage:
    from config.analysis_config import get_analysis_config

    config = get_analysis_config()
    budget = config.node_budget
"""

import os
import logging
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnalysisConfig:
    """
    Configuration for analysis and experiments.

    Attributes:
        node_budget: Maximum nodes explored by one bad-continuation search
        default_seed: Seed of every random population unless overridden
        log_level: Level of the package loggers
        max_param: Largest witness parameter swept by the suites
        samples: Random instances per population
        oracle_bound: Word-length bound of the brute-force oracle
        max_states: Largest state count of random DFAs
        max_alphabet: Largest alphabet of random DFAs
        self_validate: Whether witness constructors re-measure their output
    """
    node_budget: int = 10_000_000
    default_seed: int = 20240101
    log_level: str = "INFO"
    max_param: int = 8
    samples: int = 500
    oracle_bound: int = 12
    max_states: int = 6
    max_alphabet: int = 3
    self_validate: bool = True

    @property
    def quinary_max_param(self) -> int:
        return min(self.max_param, 7)

    def with_overrides(self, **overrides) -> "AnalysisConfig":
        """Copy with every non-None override applied"""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring {name}={raw!r}: not an integer, using {default}")
        return default


def load_analysis_config() -> AnalysisConfig:
    """
    Load analysis configuration from environment variables.

    Environment Variables:
        PUMPING_NODE_BUDGET: Bad-continuation search node budget
        PUMPING_SEED: Default seed
        PUMPING_LOG_LEVEL: DEBUG, INFO, WARNING or ERROR
        PUMPING_MAX_PARAM: Witness parameter cap for the suites
        PUMPING_SAMPLES: Random instances per population
        PUMPING_ORACLE_BOUND: Oracle word-length bound
        PUMPING_MAX_STATES: Random DFA state cap
        PUMPING_MAX_ALPHABET: Random DFA alphabet cap
        PUMPING_SELF_VALIDATE: Re-measure witness constructions (true/false)

    Returns:
        AnalysisConfig instance
    """
    defaults = AnalysisConfig()
    return AnalysisConfig(
        node_budget=_env_int("PUMPING_NODE_BUDGET", defaults.node_budget),
        default_seed=_env_int("PUMPING_SEED", defaults.default_seed),
        log_level=os.getenv("PUMPING_LOG_LEVEL", defaults.log_level).upper(),
        max_param=_env_int("PUMPING_MAX_PARAM", defaults.max_param),
        samples=_env_int("PUMPING_SAMPLES", defaults.samples),
        oracle_bound=_env_int("PUMPING_ORACLE_BOUND", defaults.oracle_bound),
        max_states=_env_int("PUMPING_MAX_STATES", defaults.max_states),
        max_alphabet=_env_int("PUMPING_MAX_ALPHABET", defaults.max_alphabet),
        self_validate=os.getenv("PUMPING_SELF_VALIDATE", "true").lower() in ("true", "1", "yes"),
    )


# Global config instance (lazy loaded)
_analysis_config: Optional[AnalysisConfig] = None


def get_analysis_config() -> AnalysisConfig:
    """
    Get the global analysis configuration.

    Loads from environment on first call.

    Returns:
        AnalysisConfig instance
    """
    global _analysis_config
    if _analysis_config is None:
        _analysis_config = load_analysis_config()
    return _analysis_config


def reset_analysis_config() -> None:
    """Reset global config (for testing)"""
    global _analysis_config
    _analysis_config = None
