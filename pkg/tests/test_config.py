import pytest
from pydantic import ValidationError

from config import load_settings


def test_defaults(monkeypatch):
    monkeypatch.delenv("OMEGABOUND_MAX_STEPS", raising=False)
    settings = load_settings()
    assert settings.max_steps == 10_000
    assert settings.brute_force_budget == 200_000
    assert settings.max_exponent == 100_000


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("OMEGABOUND_MAX_STEPS", "50")
    monkeypatch.setenv("OMEGABOUND_LOG_LEVEL", "DEBUG")
    settings = load_settings()
    assert settings.max_steps == 50
    assert settings.log_level == "DEBUG"


def test_exponent_override(monkeypatch):
    monkeypatch.setenv("OMEGABOUND_MAX_EXPONENT", "12")
    assert load_settings().max_exponent == 12


def test_invalid_override(monkeypatch):
    monkeypatch.setenv("OMEGABOUND_MAX_BOUND", "0")
    with pytest.raises(ValidationError):
        load_settings()
