"""
Configuration centralisée du logger
"""
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Optional, Union


def setup_logger(
    name: str,
    log_level: Union[int, str] = logging.INFO,
    logs_dir: Optional[Path] = None
) -> logging.Logger:
    """
    Configure et retourne un logger

    Args:
        name: Nom du logger
        log_level: Niveau de log (par défaut: INFO)
        logs_dir: Répertoire des fichiers de log (aucun fichier si None)

    Returns:
        Logger configuré
    """
    logger = logging.getLogger(name)

    # Éviter la duplication des handlers
    if logger.handlers:
        return logger

    if isinstance(log_level, str):
        log_level = logging.getLevelName(log_level.upper())
        if not isinstance(log_level, int):
            log_level = logging.INFO

    logger.setLevel(log_level)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    # stderr: la sortie JSON reste seule sur stdout
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if logs_dir is not None:
        try:
            logs_dir = Path(logs_dir)
            logs_dir.mkdir(parents=True, exist_ok=True)

            log_file = logs_dir / f"{name}_{datetime.now().strftime('%Y%m%d')}.log"
            file_handler = logging.FileHandler(log_file, encoding='utf-8')
            file_handler.setLevel(log_level)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)
        except OSError as e:
            # Si on ne peut pas créer le fichier de log, continuer sans
            logger.warning(f"Impossible de créer le fichier de log: {e}")

    return logger
