"""
Modèles pour les fonctions symétriques: SymPoly (base élémentaire) et
RootExpansion (polynôme explicite en racines x_1..x_m)
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from kcalc.exceptions import DimensionMismatchError

Exponents = Tuple[int, ...]


def _strip(exps: Exponents) -> Exponents:
    """Supprime les zéros finaux d'un vecteur d'exposants"""
    exps = tuple(int(a) for a in exps)
    end = len(exps)
    while end and exps[end - 1] == 0:
        end -= 1
    return exps[:end]


@dataclass
class SymPoly:
    """
    Polynôme en e_1..e_n à coefficients rationnels

    Les exposants sont stockés sans zéros finaux, de sorte que e_1 vu
    dans Q[e_1] ou dans Q[e_1, e_2] a la même représentation.
    """
    terms: Dict[Exponents, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        merged: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            key = _strip(exps)
            merged[key] = merged.get(key, Fraction(0)) + Fraction(coeff)
        self.terms = {k: v for k, v in merged.items() if v != 0}

    @staticmethod
    def weight(exps: Exponents) -> int:
        """Degré pondéré, deg e_i = i"""
        return sum((i + 1) * a for i, a in enumerate(exps))

    @property
    def degree(self) -> int:
        """Degré pondéré maximal (-1 pour le polynôme nul)"""
        return max((self.weight(e) for e in self.terms), default=-1)

    @property
    def variable_count(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def to_dict(self) -> List[Dict[str, Any]]:
        return [
            {'exps': list(exps), 'coeff': str(coeff)}
            for exps, coeff in sorted(self.terms.items(), reverse=True)
        ]


@dataclass
class RootExpansion:
    """Polynôme en m variables x_1..x_m tronqué au degré total N"""
    variables: int
    truncation: int
    terms: Dict[Exponents, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            exps = tuple(int(a) for a in exps)
            exps = exps + (0,) * (self.variables - len(exps))
            if len(exps) != self.variables:
                raise DimensionMismatchError(
                    f"Monôme {exps} hors de {self.variables} variables",
                    expected=self.variables,
                    actual=len(exps)
                )
            if sum(exps) > self.truncation:
                continue
            cleaned[exps] = cleaned.get(exps, Fraction(0)) + Fraction(coeff)
        self.terms = {k: v for k, v in cleaned.items() if v != 0}

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous(self, degree: int) -> 'RootExpansion':
        """Composante homogène de degré donné"""
        return RootExpansion(
            self.variables,
            self.truncation,
            {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def to_dict(self) -> List[Dict[str, Any]]:
        return [
            {'exps': list(exps), 'coeff': str(coeff)}
            for exps, coeff in sorted(self.terms.items(), reverse=True)
        ]
