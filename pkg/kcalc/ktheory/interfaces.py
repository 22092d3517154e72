"""
Interfaces (abstractions) pour kcalc
"""
from abc import ABC, abstractmethod
from typing import List

from kcalc.ktheory.models.run_report import PropertyCheck
from kcalc.ktheory.models.symbol import LaurentSymbol, WindingResult


class IWindingAlgorithm(ABC):
    """Interface pour un algorithme de calcul du nombre d'enroulement"""

    name: str = 'winding'

    @abstractmethod
    def compute(self, symbol: LaurentSymbol) -> WindingResult:
        """Calcule wn(f) pour un symbole inversible sur le cercle"""
        pass


class IPropertySuite(ABC):
    """Interface pour une batterie de propriétés (auto-test)"""

    name: str = 'suite'

    @abstractmethod
    def run(self, seed: int) -> List[PropertyCheck]:
        """Exécute la batterie avec une graine fixée"""
        pass
