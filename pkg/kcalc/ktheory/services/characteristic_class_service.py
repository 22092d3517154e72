"""
Service de classes caractéristiques par le principe de scindage
Classe de Chern totale, caractère de Chern et Adams via Newton
"""
import logging
from fractions import Fraction
from math import factorial
from typing import List

from sympy.polys.rings import PolyElement

from kcalc.exceptions import InvalidParameterError
from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.models.bundle import GradedClass, VirtualSplitBundle
from kcalc.ktheory.models.symmetric import RootExpansion
from kcalc.ktheory.services.bundle_operations_service import BundleOperationsService
from kcalc.ktheory.services.symmetric_function_service import (
    SymmetricFunctionService,
    poly_from_terms,
    poly_ring,
    poly_to_terms,
    to_qq,
    truncate,
    truncated_mul,
)

logger = logging.getLogger(__name__)


class CharacteristicClassService:
    """Service de calcul de c(V), ch(V) et de leurs compatibilités"""

    def __init__(
        self,
        numerics_config: NumericsConfig = None,
        symfun_service: SymmetricFunctionService = None,
        bundle_service: BundleOperationsService = None
    ):
        """Initialise le service de classes caractéristiques"""
        self.numerics_config = numerics_config or NumericsConfig.from_env()
        self.symfun = symfun_service or SymmetricFunctionService(self.numerics_config)
        self.bundles = bundle_service or BundleOperationsService()

    def _degree(self, degree: int = None) -> int:
        degree = self.numerics_config.truncation_degree if degree is None else degree
        if degree < 0:
            raise InvalidParameterError(f"Degré de troncature négatif: {degree}", parameter='N')
        return degree

    @staticmethod
    def _root(ring, exps) -> PolyElement:
        """Racine de Chern exps·(x_1..x_k)"""
        root = ring.zero
        for gen, a in zip(ring.gens, exps):
            root += a * gen
        return root

    def _to_class(self, v_lines: int, degree: int, poly: PolyElement) -> GradedClass:
        return GradedClass(v_lines, degree, poly_to_terms(truncate(poly, degree)))

    def _to_poly(self, graded: GradedClass) -> PolyElement:
        return poly_from_terms(poly_ring(graded.variables), graded.terms)

    def total_chern(self, v: VirtualSplitBundle, degree: int = None) -> GradedClass:
        """
        Classe de Chern totale Π (1 + r)^m, tronquée au degré N

        Les multiplicités négatives passent par l'inverse en série
        géométrique 1 - r + r² - ...

        Args:
            v: Fibré virtuel scindé
            degree: Troncature N

        Returns:
            GradedClass dont la composante de degré d est c_d(V)
        """
        degree = self._degree(degree)
        R = poly_ring(v.base_lines)
        result = R.one
        for mult, line in v.terms:
            root = self._root(R, line.exps)
            if mult > 0:
                factor = R.one + root
            else:
                factor = R.zero
                power = R.one
                for _ in range(degree + 1):
                    factor += power
                    power = truncated_mul(power, -root, degree)
            for _ in range(abs(mult)):
                result = truncated_mul(result, factor, degree)
        return self._to_class(v.base_lines, degree, result)

    def chern_classes(self, v: VirtualSplitBundle, degree: int = None) -> List[RootExpansion]:
        """Liste c_0..c_N des composantes homogènes de c(V)"""
        return self.total_chern(v, degree).components

    def chern_character(self, v: VirtualSplitBundle, degree: int = None) -> GradedClass:
        """ch(V) = Σ m·exp(r), tronqué; composante 0 = dimension virtuelle"""
        degree = self._degree(degree)
        R = poly_ring(v.base_lines)
        result = R.zero
        for mult, line in v.terms:
            root = self._root(R, line.exps)
            power = R.one
            for d in range(degree + 1):
                result += power.mul_ground(to_qq(Fraction(mult, factorial(d))))
                power = truncated_mul(power, root, degree)
        return self._to_class(v.base_lines, degree, result)

    def graded_sum(self, a: GradedClass, b: GradedClass) -> GradedClass:
        width = max(a.variables, b.variables)
        terms = dict(a.terms)
        for exps, coeff in b.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return GradedClass(width, min(a.truncation, b.truncation), terms)

    def graded_product(self, a: GradedClass, b: GradedClass) -> GradedClass:
        """Produit tronqué de deux classes (même anneau de base)"""
        width = max(a.variables, b.variables)
        degree = min(a.truncation, b.truncation)
        R = poly_ring(width)
        product = truncated_mul(poly_from_terms(R, a.terms), poly_from_terms(R, b.terms), degree)
        return self._to_class(width, degree, product)

    def adams_via_newton(self, chern_data: GradedClass, k: int, rank: int, degree: int = None) -> GradedClass:
        """
        ch(ψ^k V) calculé à partir des seules classes de Chern de V

        La composante de degré d vaut k^d·P_d(c_1..c_d)/d! où P_d est le
        polynôme de Newton; la composante 0 est le rang (non contenu dans c).

        Args:
            chern_data: Classe de Chern totale de V
            k: Ordre de l'opération d'Adams (k >= 1)
            rank: Dimension virtuelle de V
            degree: Troncature N (au plus celle de chern_data)
        """
        if k < 1:
            raise InvalidParameterError(f"ψ^{k}: k >= 1 requis", parameter='k')
        degree = min(self._degree(degree), chern_data.truncation)
        R = poly_ring(chern_data.variables)
        full = poly_from_terms(R, chern_data.terms)
        classes = [
            R.from_dict({m: c for m, c in full.items() if sum(m) == i})
            for i in range(1, degree + 1)
        ]
        result = R.one.mul_ground(to_qq(Fraction(rank)))
        for d in range(1, degree + 1):
            newton = self.symfun.newton_power_sum(d)
            p_d = self.symfun.substitute(newton, classes[:d], degree)
            result += p_d.mul_ground(to_qq(Fraction(k ** d, factorial(d))))
        logger.debug(f"ψ^{k} par Newton: rang {rank}, degré {degree}")
        return self._to_class(chern_data.variables, degree, result)

    def adams_congruence_holds(self, v: VirtualSplitBundle, p: int, degree: int = None) -> bool:
        """
        Vérifie d!·ch_d(ψ^p V) ≡ d!·ch_d(V^{⊗p}) mod p pour d <= N

        Forme opérationnelle de ψ^p(x) = x^p + p·y, sur fibrés effectifs.
        """
        if not v.is_effective:
            raise InvalidParameterError("Congruence testée seulement sur un fibré effectif", parameter='bundle')
        degree = self._degree(degree)
        adams = self.chern_character(self.bundles.adams_op(v, p), degree)
        power = self.chern_character(self.bundles.tensor_power(v, p), degree)
        for d in range(degree + 1):
            lhs = adams.integral_component(d)
            rhs = power.integral_component(d)
            for exps in set(lhs) | set(rhs):
                if (lhs.get(exps, 0) - rhs.get(exps, 0)) % p != 0:
                    logger.warning(f"Congruence d'Adams violée en degré {d} pour p={p}")
                    return False
        return True
