"""
Service de complétion de Grothendieck
Groupe associé à un monoïde commutatif de présentation finie
"""
import logging
from math import gcd
from typing import List, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from kcalc.exceptions import DimensionMismatchError
from kcalc.ktheory.models.abelian_group import AbelianGroup, GroupElement, MonoidPresentation
from kcalc.ktheory.models.exact_matrix import ExactMatrix, RingTag, SnfResult
from kcalc.ktheory.services.exact_linalg_service import ExactLinalgService

logger = logging.getLogger(__name__)


class GrothendieckService:
    """Service de calcul de Gr(M) = Z^g / L où L est le réseau des relations"""

    def __init__(self, linalg_service: ExactLinalgService = None):
        """Initialise le service de complétion"""
        self.linalg = linalg_service or ExactLinalgService()

    def relation_matrix(self, presentation: MonoidPresentation) -> ExactMatrix:
        """Matrice des relations: une ligne u - v par relation"""
        vectors = presentation.relation_vectors()
        return ExactMatrix(
            len(vectors),
            presentation.generator_count,
            tuple(x for row in vectors for x in row),
            RingTag('Z')
        )

    def _snf(self, presentation: MonoidPresentation) -> SnfResult:
        return self.linalg.smith_normal_form(self.relation_matrix(presentation))

    def group_completion(self, presentation: MonoidPresentation) -> AbelianGroup:
        """
        Calcule le groupe de Grothendieck sous forme de facteurs invariants

        Args:
            presentation: Présentation du monoïde

        Returns:
            AbelianGroup isomorphe à Z^g / L
        """
        snf = self._snf(presentation)
        factors = [d for d in snf.invariant_factors if d != 0]
        group = AbelianGroup(
            free_rank=presentation.generator_count - len(factors),
            torsion=tuple(d for d in factors if d > 1)
        )
        logger.info(
            f"Complétion de Grothendieck: {presentation.generator_count} générateurs, "
            f"{len(presentation.relations)} relations -> {group}"
        )
        return group

    def _check_dimension(self, presentation: MonoidPresentation, element: GroupElement) -> None:
        if len(element) != presentation.generator_count:
            raise DimensionMismatchError(
                "Élément incompatible avec la présentation",
                expected=presentation.generator_count,
                actual=len(element)
            )

    def _snf_coordinates(self, snf: SnfResult, element: GroupElement) -> List[int]:
        """Coordonnées y = x·V dans la base adaptée au réseau"""
        g = snf.V.rows
        return [sum(element.coefficients[k] * snf.V[k, i] for k in range(g)) for i in range(g)]

    @staticmethod
    def _diagonal(snf: SnfResult, g: int) -> List[int]:
        """d_i pour i < g, complété par des zéros"""
        factors = snf.invariant_factors
        return factors + [0] * (g - len(factors))

    def canonical_form(self, presentation: MonoidPresentation, element: GroupElement) -> GroupElement:
        """
        Représentant canonique de x modulo le réseau des relations

        On réduit y_i modulo d_i dans la base de Smith, puis on revient
        aux générateurs par V^-1.

        Raises:
            DimensionMismatchError: Si x n'a pas la bonne longueur
        """
        self._check_dimension(presentation, element)
        g = presentation.generator_count
        if g == 0:
            return element

        snf = self._snf(presentation)
        y = self._snf_coordinates(snf, element)
        for i, d in enumerate(self._diagonal(snf, g)):
            if d:
                y[i] %= d

        v_inverse = self.linalg.inverse(snf.V.with_ring('Q'))
        coefficients = tuple(int(sum(y[k] * v_inverse[k, j] for k in range(g))) for j in range(g))
        return GroupElement(coefficients)

    def in_relation_lattice(self, presentation: MonoidPresentation, element: GroupElement) -> bool:
        """Vrai si x appartient au réseau engendré par les u - v"""
        self._check_dimension(presentation, element)
        g = presentation.generator_count
        if g == 0:
            return True
        snf = self._snf(presentation)
        y = self._snf_coordinates(snf, element)
        for value, d in zip(y, self._diagonal(snf, g)):
            if (d == 0 and value != 0) or (d != 0 and value % d != 0):
                return False
        return True

    def element_equal(self, presentation: MonoidPresentation, x: GroupElement, y: GroupElement) -> bool:
        """
        Égalité dans Gr(M): x - y appartient au réseau des relations

        Raises:
            DimensionMismatchError: Si les dimensions sont incompatibles
        """
        self._check_dimension(presentation, x)
        self._check_dimension(presentation, y)
        return self.in_relation_lattice(presentation, x - y)

    # ------------------------------------------------------------------
    # Oracles indépendants (sympy)
    # ------------------------------------------------------------------

    @staticmethod
    def _sympy_invariants(rows: List[List[int]], g: int) -> Tuple[int, Tuple[int, ...]]:
        """(rang libre, torsion) de Z^g / <rows> via la forme de Smith de sympy"""
        if not rows:
            return g, ()
        diagonal = sympy_smith_normal_form(Matrix(rows), domain=ZZ)
        factors = [abs(int(diagonal[i, i])) for i in range(min(diagonal.shape)) if diagonal[i, i] != 0]
        # Diagonale quelconque -> chaîne de divisibilité (pgcd, ppcm)
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                factors[i], factors[j] = gcd(a, b), a * b // gcd(a, b)
        return g - len(factors), tuple(d for d in factors if d > 1)

    def oracle_group(self, presentation: MonoidPresentation) -> AbelianGroup:
        """Groupe de Grothendieck recalculé par sympy"""
        free_rank, torsion = self._sympy_invariants(
            presentation.relation_vectors(), presentation.generator_count
        )
        return AbelianGroup(free_rank, torsion)

    def oracle_in_lattice(self, presentation: MonoidPresentation, element: GroupElement) -> bool:
        """
        Appartenance au réseau sans passer par nos témoins de Smith

        L ⊆ L + Zx avec quotients isomorphes implique L = L + Zx
        (un groupe abélien de type fini est hopfien).
        """
        rows = presentation.relation_vectors()
        g = presentation.generator_count
        if not any(element.coefficients):
            return True
        if not rows:
            return False
        return self._sympy_invariants(rows, g) == self._sympy_invariants(rows + [list(element.coefficients)], g)
