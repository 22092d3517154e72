"""
Configuration de kcalc
"""
from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.config.runtime_config import RuntimeConfig

__all__ = ['NumericsConfig', 'RuntimeConfig']
