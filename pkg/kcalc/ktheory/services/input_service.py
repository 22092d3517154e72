"""
Service de lecture des fichiers d'entrée JSON
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import chardet

from kcalc.exceptions import InputFileError

logger = logging.getLogger(__name__)

DEFAULT_ENCODING = 'utf-8'


class InputFileService:
    """Service de lecture des documents JSON passés à la ligne de commande"""

    def __init__(self, default_encoding: str = DEFAULT_ENCODING):
        self.default_encoding = default_encoding

    def read_document(self, file_path: Union[str, Path]) -> Dict[str, Any]:
        """
        Lit un document JSON

        Args:
            file_path: Chemin du fichier

        Returns:
            Le document (objet JSON de premier niveau)

        Raises:
            InputFileError: Fichier absent, illisible ou JSON invalide
        """
        file_path = Path(file_path)
        if not file_path.exists():
            raise InputFileError(f"Le fichier n'existe pas: {file_path}", file_path=str(file_path))

        raw = file_path.read_bytes()
        encoding = self._detect_encoding(raw)
        try:
            text = raw.decode(encoding)
        except (UnicodeDecodeError, LookupError) as e:
            raise InputFileError(f"Décodage impossible ({encoding}): {file_path.name}", file_path=str(file_path)) from e

        try:
            document = json.loads(text.lstrip('\ufeff'))
        except json.JSONDecodeError as e:
            raise InputFileError(
                f"JSON invalide dans {file_path.name}, ligne {e.lineno}: {e.msg}",
                file_path=str(file_path)
            ) from e

        if not isinstance(document, dict):
            raise InputFileError(f"{file_path.name}: un objet JSON est attendu", file_path=str(file_path))
        logger.debug(f"Document lu: {file_path.name} ({encoding}, clés {sorted(document)})")
        return document

    def _detect_encoding(self, raw: bytes) -> str:
        """Détecte l'encodage sur les 10 premiers Ko"""
        result = chardet.detect(raw[:10000])
        encoding: Optional[str] = result.get('encoding')
        if not encoding or encoding.lower() == 'ascii':
            return self.default_encoding
        logger.debug(f"Encodage détecté: {encoding} (confiance: {result.get('confidence', 0):.2%})")
        return encoding
