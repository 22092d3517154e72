"""
Données de recollement (cocycles) et classes de fibrés sur S^2
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

OverlapKey = Tuple[str, str]


@dataclass
class CocycleData:
    """
    Fonctions de transition g_ab échantillonnées

    samples[(a, b)] associe un paramètre t à la matrice g_ab(t),
    qui envoie les coordonnées de la carte b vers celles de la carte a.
    """
    charts: List[str]
    samples: Dict[OverlapKey, Dict[float, np.ndarray]] = field(default_factory=dict)

    def overlaps(self) -> List[OverlapKey]:
        return sorted(self.samples)

    def rank(self) -> Optional[int]:
        for by_param in self.samples.values():
            for matrix in by_param.values():
                return matrix.shape[0]
        return None


@dataclass
class CocycleReport:
    """Résultat de la validation de la condition de cocycle"""
    passed: bool
    tolerance: float
    max_deviation: float = 0.0
    worst_triple: Optional[Tuple[str, str, str]] = None
    worst_parameter: Optional[float] = None
    checked_triples: int = 0
    checked_samples: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'passed': self.passed,
            'tolerance': self.tolerance,
            'max_deviation': self.max_deviation,
            'worst_triple': list(self.worst_triple) if self.worst_triple else None,
            'worst_parameter': self.worst_parameter,
            'checked_triples': self.checked_triples,
            'checked_samples': self.checked_samples,
            'violations': self.violations,
        }


@dataclass(frozen=True)
class ClutchingClass:
    """Invariant complet (rang, degré) d'un fibré sur S^2"""
    rank: int
    degree: int

    def to_dict(self) -> Dict[str, Any]:
        return {'rank': self.rank, 'degree': self.degree}
