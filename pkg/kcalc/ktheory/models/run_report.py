"""
Requête de commande et rapport d'exécution de la ligne de commande
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


@dataclass
class CommandRequest:
    """Sous-commande analysée, avec ses fichiers et options"""
    subcommand: str
    input_files: List[str] = field(default_factory=list)
    options: Dict[str, Any] = field(default_factory=dict)
    output_format: str = 'human'
    seed: int = 0


@dataclass
class PropertyCheck:
    """Résultat d'une propriété vérifiée par une batterie d'auto-test"""
    suite: str
    name: str
    passed: bool
    cases: int = 0
    detail: Optional[str] = None
    elapsed: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite,
            'name': self.name,
            'passed': self.passed,
            'cases': self.cases,
            'detail': self.detail,
            'elapsed': round(self.elapsed, 4),
        }


@dataclass
class RunReport:
    """Rapport uniforme d'une exécution de kcalc"""
    command: str
    status: str  # 'ok' ou 'error'
    payload: Optional[Dict[str, Any]] = None
    diagnostics: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0
    error_code: Optional[str] = None
    error_message: Optional[str] = None
    exit_code: int = EXIT_OK
    summary: Optional[str] = None

    @property
    def is_success(self) -> bool:
        return self.status == 'ok'

    @property
    def is_error(self) -> bool:
        return self.status == 'error'

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'command': self.command,
            'status': self.status,
            'payload': self.payload,
            'diagnostics': self.diagnostics,
            'elapsed': round(self.elapsed, 6),
        }
        if self.is_error:
            data['error'] = {'code': self.error_code, 'message': self.error_message}
        return data
