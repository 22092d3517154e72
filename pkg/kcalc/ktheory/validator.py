"""
Validateur de schéma des documents d'entrée de kcalc
"""
from typing import Any, Dict, List, Optional

DOCUMENT_KINDS = ('matrix', 'presentation', 'bundle', 'symbol', 'matrix_symbol', 'cocycle')


class KCalcValidator:
    """Validateur des documents JSON selon leur nature"""

    # Clés obligatoires selon la nature du document
    REQUIRED_KEYS = {
        'matrix': ['entries'],
        'presentation': ['generators', 'relations'],
        'bundle': ['base_lines', 'terms'],
        'symbol': ['coeffs'],
        'matrix_symbol': ['matrix'],
        'cocycle': ['charts', 'transitions'],
    }

    # Clés devant contenir une liste
    LIST_KEYS = ('entries', 'relations', 'terms', 'coeffs', 'matrix', 'charts', 'transitions')

    def validate_schema(self, document: Dict[str, Any], kind: str) -> Optional[str]:
        """Valide la structure d'un document, retourne le message d'erreur ou None"""
        if kind not in self.REQUIRED_KEYS:
            return f"Nature de document inconnue: {kind}"
        if not isinstance(document, dict):
            return "Le document doit être un objet JSON"

        # Un symbole scalaire est accepté là où un symbole matriciel est attendu
        if kind == 'matrix_symbol' and 'matrix' not in document and 'coeffs' in document:
            kind = 'symbol'

        missing = [key for key in self.REQUIRED_KEYS[kind] if key not in document]
        if missing:
            return f"Clés manquantes pour {kind}: {', '.join(missing)}"

        for key in self.LIST_KEYS:
            if key in document and not isinstance(document[key], list):
                return f"La clé {key} doit être une liste"

        checker = getattr(self, f'_check_{kind}', None)
        return checker(document) if checker else None

    def _check_matrix(self, document: Dict[str, Any]) -> Optional[str]:
        rows = document['entries']
        if any(not isinstance(row, list) for row in rows):
            return "entries: chaque ligne doit être une liste"
        if 'ring' in document and not isinstance(document['ring'], str):
            return "ring doit être une chaîne ('Z', 'Q' ou 'Fp:<p>')"
        return None

    def _check_presentation(self, document: Dict[str, Any]) -> Optional[str]:
        if not isinstance(document['generators'], int) or isinstance(document['generators'], bool):
            return "generators doit être un entier"
        for i, relation in enumerate(document['relations']):
            if not isinstance(relation, dict) or 'lhs' not in relation or 'rhs' not in relation:
                return f"Relation {i}: objet {{lhs, rhs}} attendu"
        for i, element in enumerate(document.get('elements', [])):
            if not isinstance(element, dict) or 'u' not in element or 'v' not in element:
                return f"Élément {i}: objet {{u, v}} attendu"
        return None

    def _check_bundle(self, document: Dict[str, Any]) -> Optional[str]:
        for i, term in enumerate(document['terms']):
            if not isinstance(term, dict) or 'mult' not in term or 'exps' not in term:
                return f"Terme {i}: objet {{mult, exps}} attendu"
        return None

    def _check_symbol(self, document: Dict[str, Any]) -> Optional[str]:
        return self._check_coefficients(document['coeffs'])

    @staticmethod
    def _check_coefficients(coeffs: List[Any]) -> Optional[str]:
        for i, coeff in enumerate(coeffs):
            if not isinstance(coeff, dict) or 'k' not in coeff:
                return f"Coefficient {i}: objet {{k, re, im}} attendu"
        return None

    def _check_matrix_symbol(self, document: Dict[str, Any]) -> Optional[str]:
        for row in document['matrix']:
            if not isinstance(row, list):
                return "matrix: chaque ligne doit être une liste"
            for entry in row:
                if not isinstance(entry, dict) or 'coeffs' not in entry:
                    return "matrix: chaque coefficient doit être un symbole {coeffs}"
                error = self._check_coefficients(entry['coeffs'])
                if error:
                    return error
        return None

    def _check_cocycle(self, document: Dict[str, Any]) -> Optional[str]:
        for i, transition in enumerate(document['transitions']):
            if not isinstance(transition, dict):
                return f"Transition {i}: objet attendu"
            for key in ('from', 'to', 'samples'):
                if key not in transition:
                    return f"Transition {i}: clé {key} manquante"
            for sample in transition['samples']:
                if not isinstance(sample, dict) or 't' not in sample or 'matrix' not in sample:
                    return f"Transition {i}: échantillon {{t, matrix}} attendu"
        return None
