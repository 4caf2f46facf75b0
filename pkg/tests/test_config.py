# Copyright AGNTCY Contributors
# SPDX-License-Identifier: Apache-2.0

from config.analysis_config import (
    AnalysisConfig,
    get_analysis_config,
    load_analysis_config,
    reset_analysis_config
)


def test_defaults(monkeypatch):
    for name in ("PUMPING_NODE_BUDGET", "PUMPING_SEED", "PUMPING_SELF_VALIDATE", "PUMPING_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    config = load_analysis_config()
    assert config.node_budget == 10_000_000
    assert config.default_seed == 20240101
    assert config.self_validate is True
    assert config.log_level == "INFO"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("PUMPING_SAMPLES", "25")
    monkeypatch.setenv("PUMPING_LOG_LEVEL", "debug")
    monkeypatch.setenv("PUMPING_SELF_VALIDATE", "no")
    config = load_analysis_config()
    assert config.samples == 25
    assert config.log_level == "DEBUG"
    assert config.self_validate is False


def test_invalid_integer_falls_back(monkeypatch):
    monkeypatch.setenv("PUMPING_MAX_PARAM", "lots")
    assert load_analysis_config().max_param == AnalysisConfig().max_param


def test_singleton_is_reloaded_after_reset(monkeypatch):
    first = get_analysis_config()
    assert get_analysis_config() is first
    monkeypatch.setenv("PUMPING_ORACLE_BOUND", "5")
    assert get_analysis_config().oracle_bound == first.oracle_bound
    reset_analysis_config()
    assert get_analysis_config().oracle_bound == 5


def test_overrides_skip_none():
    config = AnalysisConfig(samples=10).with_overrides(samples=None, max_param=3)
    assert config.samples == 10
    assert config.max_param == 3


def test_quinary_cap():
    assert AnalysisConfig(max_param=12).quinary_max_param == 7
    assert AnalysisConfig(max_param=4).quinary_max_param == 4
