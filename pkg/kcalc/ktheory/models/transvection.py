"""
Transvections e^a_ij, factorisations et rapports de Steinberg / Whitehead
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from kcalc.exceptions import InvalidParameterError
from kcalc.ktheory.models.abelian_group import AbelianGroup
from kcalc.ktheory.models.exact_matrix import ExactMatrix, RingElement, RingTag


@dataclass(frozen=True)
class Transvection:
    """e^a_ij = 1 + a·e_ij (indices 0-indexés, i ≠ j)"""
    i: int
    j: int
    a: RingElement

    def __post_init__(self):
        if self.i == self.j:
            raise InvalidParameterError(f"Transvection diagonale ({self.i}, {self.j})", parameter='indices')

    def matrix(self, n: int, ring: RingTag) -> ExactMatrix:
        grid = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
        grid[self.i][self.j] = self.a
        return ExactMatrix.from_rows(grid, ring)

    def inverse(self, ring: RingTag) -> 'Transvection':
        return Transvection(self.i, self.j, ring.neg(self.a))

    def to_dict(self, ring: RingTag) -> Dict[str, Any]:
        # 1-indexé à l'affichage, comme e^a_{12}
        return {'i': self.i + 1, 'j': self.j + 1, 'a': ring.to_text(self.a)}


@dataclass
class FactorizationResult:
    """A = e_1·e_2·...·e_r·diag(d, 1, ..., 1)"""
    factors: List[Transvection]
    diagonal: ExactMatrix

    @property
    def residue(self) -> RingElement:
        """d = det A, classe de A dans K_1 = F^×"""
        return self.diagonal[0, 0]

    def to_dict(self) -> Dict[str, Any]:
        ring = self.diagonal.ring
        return {
            'factors': [f.to_dict(ring) for f in self.factors],
            'diagonal': self.diagonal.to_dict(),
            'residue': ring.to_text(self.residue),
        }


@dataclass
class WhiteheadResult:
    """Les quatre facteurs par blocs et leur produit diag(aba^-1b^-1, 1, 1)"""
    factors: Tuple[ExactMatrix, ExactMatrix, ExactMatrix, ExactMatrix]
    product: ExactMatrix
    expected: ExactMatrix

    @property
    def holds(self) -> bool:
        return self.product == self.expected

    def to_dict(self) -> Dict[str, Any]:
        return {
            'holds': self.holds,
            'factors': [f.to_dict() for f in self.factors],
            'product': self.product.to_dict(),
        }


@dataclass
class SteinbergReport:
    """Résultat de la vérification des relations de Steinberg"""
    size: int
    trials: int
    ring: str
    checked: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.size,
            'trials': self.trials,
            'ring': self.ring,
            'checked': self.checked,
            'passed': self.passed,
            'violations': self.violations,
        }


@dataclass
class K1Result:
    """K_1(F_q) = F_q^× cyclique d'ordre q - 1 et un générateur vérifié"""
    q: int
    group: AbelianGroup
    generator: Tuple[int, ...]
    modulus: Optional[Tuple[int, ...]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'q': self.q,
            'group': str(self.group),
            # élément de F_p[x]/(m): coefficients de degré décroissant
            'generator': list(self.generator) if self.modulus else self.generator[0],
            'modulus': list(self.modulus) if self.modulus else None,
        }
