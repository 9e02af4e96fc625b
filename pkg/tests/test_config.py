"""Tests for configuration layering and logging setup."""

import logging

import pytest

from wdp_delta.config import DeltaConfig, configure_logging, is_truthy, job_count


@pytest.mark.parametrize("value, expected", [("yes", True), ("On", True), ("1", True), ("f", False), (False, False)])
def test_is_truthy(value, expected):
    assert is_truthy(value) is expected


def test_is_truthy_rejects_other_strings():
    with pytest.raises(ValueError):
        is_truthy("maybe")


def test_defaults():
    config = DeltaConfig()
    assert config.jobs == 0
    assert config.debug is False
    assert config.log_level == "WARNING"


def test_job_count():
    config = DeltaConfig()
    assert job_count(config, 3) == 3
    assert job_count(config) >= 1
    with pytest.raises(ValueError):
        job_count(config, -1)


def test_environment_overrides_defaults(monkeypatch):
    monkeypatch.setenv("WDP_DELTA_JOBS", "4")
    monkeypatch.setenv("WDP_DELTA_LOG_LEVEL", "info")
    config = DeltaConfig()
    config.load_shell_env()
    assert config.jobs == 4
    assert job_count(config) == 4
    assert job_count(config, 2) == 2
    assert configure_logging(config) == "INFO"
    assert logging.getLogger().level == logging.INFO


def test_debug_wins_over_level():
    config = DeltaConfig(overrides={"debug": True, "log_level": "ERROR"})
    assert configure_logging(config) == "DEBUG"
