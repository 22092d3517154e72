from pathlib import Path

import pytest

from kcalc.exceptions import ConfigurationError
from kcalc.ktheory.config import NumericsConfig, RuntimeConfig


def test_numerics_defaults(monkeypatch):
    for key in ('KCALC_TRUNCATION', 'KCALC_MODULUS_GATE', 'KCALC_MAX_LOG2_SAMPLES'):
        monkeypatch.delenv(key, raising=False)
    config = NumericsConfig.from_env()
    assert config.truncation_degree == 8
    assert config.max_samples == 2 ** 14


def test_numerics_environment_overrides(monkeypatch):
    monkeypatch.setenv('KCALC_TRUNCATION', '5')
    monkeypatch.setenv('KCALC_COCYCLE_TOL', '1e-6')
    config = NumericsConfig.from_env()
    assert config.truncation_degree == 5
    assert config.cocycle_tolerance == 1e-6


def test_numerics_rejects_garbage(monkeypatch):
    monkeypatch.setenv('KCALC_TRUNCATION', 'huit')
    with pytest.raises(ConfigurationError) as info:
        NumericsConfig.from_env()
    assert info.value.extra['config_key'] == 'KCALC_TRUNCATION'


@pytest.mark.parametrize('overrides', [
    {'truncation_degree': -1},
    {'min_log2_samples': 10, 'max_log2_samples': 9},
    {'window_padding': 0},
])
def test_numerics_bounds(overrides):
    with pytest.raises(ConfigurationError):
        NumericsConfig(**overrides)


def test_runtime_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv('KCALC_SEED', '42')
    monkeypatch.setenv('KCALC_OUTPUT_FORMAT', 'json')
    monkeypatch.setenv('KCALC_LOGS_DIR', str(tmp_path))
    config = RuntimeConfig.from_env()
    assert config.seed == 42
    assert config.output_format == 'json'
    assert config.logs_dir == Path(tmp_path)


def test_runtime_rejects_bad_values(monkeypatch):
    monkeypatch.setenv('KCALC_SEED', 'x')
    with pytest.raises(ConfigurationError):
        RuntimeConfig.from_env()
    with pytest.raises(ConfigurationError):
        RuntimeConfig(output_format='xml')
