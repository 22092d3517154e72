"""
Configuration numérique (tolérances, troncatures) pour kcalc
"""
import os
from dataclasses import dataclass
from dotenv import load_dotenv

from kcalc.exceptions import ConfigurationError

load_dotenv()


def _read(key: str, default, cast):
    """Lit une variable d'environnement typée"""
    raw = os.getenv(key)
    if raw is None or raw == '':
        return default
    try:
        return cast(raw)
    except ValueError as e:
        raise ConfigurationError(f"Valeur invalide pour {key}: {raw!r}", config_key=key) from e


@dataclass
class NumericsConfig:
    """Tolérances et bornes utilisées par les calculs"""
    truncation_degree: int = 8
    modulus_gate: float = 1e-8
    quadrature_tolerance: float = 1e-6
    min_log2_samples: int = 8
    max_log2_samples: int = 14
    root_circle_tolerance: float = 1e-6
    window_padding: int = 4
    cocycle_tolerance: float = 1e-9

    def __post_init__(self):
        """Vérifie la cohérence des bornes"""
        if self.truncation_degree < 0:
            raise ConfigurationError("Le degré de troncature doit être positif", config_key='KCALC_TRUNCATION')
        if not 0 < self.min_log2_samples <= self.max_log2_samples:
            raise ConfigurationError(
                "Bornes d'échantillonnage incohérentes",
                config_key='KCALC_MIN_LOG2_SAMPLES'
            )
        if self.window_padding < 1:
            raise ConfigurationError("Le rembourrage de fenêtre doit être >= 1", config_key='KCALC_WINDOW_PADDING')

    @property
    def max_samples(self) -> int:
        """Nombre maximal de points de quadrature"""
        return 2 ** self.max_log2_samples

    @classmethod
    def from_env(cls) -> 'NumericsConfig':
        """
        Charge la configuration depuis les variables d'environnement

        Returns:
            Instance de NumericsConfig
        """
        return cls(
            truncation_degree=_read('KCALC_TRUNCATION', 8, int),
            modulus_gate=_read('KCALC_MODULUS_GATE', 1e-8, float),
            quadrature_tolerance=_read('KCALC_QUADRATURE_TOL', 1e-6, float),
            min_log2_samples=_read('KCALC_MIN_LOG2_SAMPLES', 8, int),
            max_log2_samples=_read('KCALC_MAX_LOG2_SAMPLES', 14, int),
            root_circle_tolerance=_read('KCALC_ROOT_CIRCLE_TOL', 1e-6, float),
            window_padding=_read('KCALC_WINDOW_PADDING', 4, int),
            cocycle_tolerance=_read('KCALC_COCYCLE_TOL', 1e-9, float),
        )
