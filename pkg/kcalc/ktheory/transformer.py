"""
Transformateur des documents JSON de kcalc

Convertit les documents validés par `KCalcValidator` en modèles
(matrices exactes, présentations, fibrés, symboles, cocycles), et les
résultats en charges utiles JSON stables.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from kcalc.exceptions import DocumentSchemaError, KCalcException
from kcalc.ktheory.models.abelian_group import GroupElement, MonoidPresentation
from kcalc.ktheory.models.bundle import VirtualSplitBundle
from kcalc.ktheory.models.clutching import CocycleData
from kcalc.ktheory.models.exact_matrix import ExactMatrix, RingTag
from kcalc.ktheory.models.symbol import LaurentSymbol, MatrixSymbol

logger = logging.getLogger(__name__)


class KCalcTransformer:
    """Conversions document <-> modèle"""

    def to_matrix(self, document: Dict[str, Any], ring: Optional[Union[RingTag, str]] = None) -> ExactMatrix:
        """
        Matrice exacte depuis {"ring": ..., "entries": [[...]]}

        L'anneau passé en argument l'emporte sur celui du document.
        Les coefficients sont des entiers ou des chaînes décimales / fractionnaires.
        """
        tag = ring or document.get('ring', 'Z')
        try:
            return ExactMatrix.from_rows(document['entries'], tag)
        except (ValueError, ZeroDivisionError) as e:
            raise DocumentSchemaError(f"Coefficient de matrice invalide: {e}", kind='matrix') from e

    def to_presentation(self, document: Dict[str, Any]) -> MonoidPresentation:
        """Présentation depuis {"generators": g, "relations": [{"lhs", "rhs"}]}"""
        relations = tuple((tuple(r['lhs']), tuple(r['rhs'])) for r in document['relations'])
        try:
            return MonoidPresentation(document['generators'], relations)
        except (TypeError, ValueError) as e:
            raise DocumentSchemaError(f"Présentation invalide: {e}", kind='presentation') from e

    def to_elements(self, document: Dict[str, Any]) -> List[GroupElement]:
        """Éléments [u] - [v] listés sous la clé optionnelle 'elements'"""
        return [GroupElement.difference(e['u'], e['v']) for e in document.get('elements', [])]

    def to_bundle(self, document: Dict[str, Any]) -> VirtualSplitBundle:
        """Fibré virtuel depuis {"base_lines": k, "terms": [{"mult", "exps"}]}"""
        try:
            return VirtualSplitBundle.from_multiset(
                int(document['base_lines']),
                [(int(t['mult']), [int(e) for e in t['exps']]) for t in document['terms']]
            )
        except (TypeError, ValueError) as e:
            raise DocumentSchemaError(f"Fibré invalide: {e}", kind='bundle') from e

    def to_symbol(self, document: Dict[str, Any]) -> LaurentSymbol:
        """Symbole de Laurent depuis {"coeffs": [{"k", "re", "im"}]}, les k répétés s'additionnent"""
        mapping: Dict[int, complex] = {}
        try:
            for coeff in document['coeffs']:
                k = int(coeff['k'])
                mapping[k] = mapping.get(k, 0j) + complex(float(coeff.get('re', 0.0)), float(coeff.get('im', 0.0)))
        except (TypeError, ValueError) as e:
            raise DocumentSchemaError(f"Coefficient de symbole invalide: {e}", kind='symbol') from e
        return LaurentSymbol.from_mapping(mapping)

    def to_matrix_symbol(self, document: Dict[str, Any]) -> MatrixSymbol:
        """Symbole matriciel depuis {"matrix": [[symbole, ...], ...]}; un symbole scalaire donne une matrice 1×1"""
        if 'matrix' not in document:
            return MatrixSymbol(((self.to_symbol(document),),))
        return MatrixSymbol(tuple(tuple(self.to_symbol(entry) for entry in row) for row in document['matrix']))

    def to_cocycle(self, document: Dict[str, Any]) -> CocycleData:
        """
        Cocycle échantillonné

        Chaque transition {"from": b, "to": a, "samples": [{"t", "matrix"}]}
        donne g_ab; les coefficients sont des paires [re, im] ou des réels.
        """
        samples: Dict = {}
        for transition in document['transitions']:
            key = (str(transition['to']), str(transition['from']))
            by_param = samples.setdefault(key, {})
            for sample in transition['samples']:
                try:
                    by_param[float(sample['t'])] = self._complex_matrix(sample['matrix'])
                except (TypeError, ValueError) as e:
                    raise DocumentSchemaError(f"Matrice de transition {key} invalide: {e}", kind='cocycle') from e
        charts = [str(c) for c in document['charts']]
        unknown = {c for pair in samples for c in pair} - set(charts)
        if unknown:
            raise DocumentSchemaError(f"Cartes non déclarées: {sorted(unknown)}", kind='cocycle')
        return CocycleData(charts=charts, samples=samples)

    @staticmethod
    def _complex_matrix(rows: List[List[Any]]) -> np.ndarray:
        values = [
            [complex(v[0], v[1]) if isinstance(v, list) else complex(v) for v in row]
            for row in rows
        ]
        matrix = np.array(values, dtype=complex)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"matrice carrée attendue, forme {matrix.shape}")
        return matrix

    def cocycle_document(self, data: CocycleData) -> Dict[str, Any]:
        """Inverse de to_cocycle"""
        return {
            'charts': list(data.charts),
            'transitions': [
                {
                    'from': b,
                    'to': a,
                    'samples': [
                        {'t': t, 'matrix': [[[float(v.real), float(v.imag)] for v in row] for row in g]}
                        for t, g in sorted(by_param.items())
                    ],
                }
                for (a, b), by_param in sorted(data.samples.items())
            ],
        }

    @staticmethod
    def format_terms(terms: Dict[Tuple[int, ...], Fraction], prefix: str = 'x') -> str:
        """Écriture lisible d'un polynôme {exposants: coefficient}, ex. '1/2*x1^2 - x2'"""
        if not terms:
            return '0'
        pieces = []
        for exps, coeff in sorted(terms.items(), key=lambda t: (sum(t[0]), tuple(-a for a in t[0]))):
            monomial = '*'.join(
                f"{prefix}{i + 1}" + (f"^{a}" if a > 1 else '')
                for i, a in enumerate(exps) if a
            )
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            sign = '-' if coeff < 0 else '+'
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def format_bundle(self, bundle: VirtualSplitBundle) -> str:
        """Écriture m1·L^(e) + ... avec L^(0) = C"""
        if bundle.is_zero:
            return '0'
        text = ''
        for index, (mult, line) in enumerate(bundle.terms):
            name = 'C' if line.is_trivial else 'L(' + ','.join(str(e) for e in line.exps) + ')'
            body = name if abs(mult) == 1 else f"{abs(mult)}*{name}"
            if index == 0:
                text = ('-' if mult < 0 else '') + body
            else:
                text += f" {'-' if mult < 0 else '+'} {body}"
        return text

    def to_payload(self, result: Any) -> Any:
        """Charge utile JSON: to_dict() des modèles, Fraction en chaîne, conteneurs récursifs"""
        if hasattr(result, 'to_dict'):
            return result.to_dict()
        if isinstance(result, Fraction):
            return str(result)
        if isinstance(result, dict):
            return {str(k): self.to_payload(v) for k, v in result.items()}
        if isinstance(result, (list, tuple)):
            return [self.to_payload(v) for v in result]
        if isinstance(result, (np.integer, np.floating, np.bool_)):
            return result.item()
        return result

    def error_payload(self, error: KCalcException) -> Dict[str, Any]:
        """Détails JSON d'une exception de domaine"""
        return {k: self.to_payload(v) for k, v in error.extra.items() if v is not None}
