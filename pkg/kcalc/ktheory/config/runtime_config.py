"""
Configuration d'exécution (graine, logs, format de sortie) pour kcalc
"""
import os
from pathlib import Path
from dataclasses import dataclass
from typing import Optional
from dotenv import load_dotenv

from kcalc.exceptions import ConfigurationError

load_dotenv()

OUTPUT_FORMATS = ('human', 'json')


@dataclass
class RuntimeConfig:
    """Paramètres d'exécution de la ligne de commande"""
    seed: int = 0
    log_level: str = 'INFO'
    logs_dir: Optional[Path] = None
    output_format: str = 'human'

    def __post_init__(self):
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(
                f"Format de sortie inconnu: {self.output_format}",
                config_key='KCALC_OUTPUT_FORMAT'
            )

    @classmethod
    def from_env(cls) -> 'RuntimeConfig':
        """
        Charge la configuration depuis les variables d'environnement

        Returns:
            Instance de RuntimeConfig
        """
        raw_seed = os.getenv('KCALC_SEED', '0')
        try:
            seed = int(raw_seed)
        except ValueError as e:
            raise ConfigurationError(f"Graine invalide: {raw_seed!r}", config_key='KCALC_SEED') from e

        logs_dir = os.getenv('KCALC_LOGS_DIR')
        return cls(
            seed=seed,
            log_level=os.getenv('KCALC_LOG_LEVEL', 'INFO'),
            logs_dir=Path(logs_dir) if logs_dir else None,
            output_format=os.getenv('KCALC_OUTPUT_FORMAT', 'human'),
        )
