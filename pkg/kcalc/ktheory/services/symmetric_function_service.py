"""
Service de fonctions symétriques sur Q
Polynômes de Newton, développement en racines et symétrisation
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing, ring

from kcalc.exceptions import InvalidParameterError, NotSymmetricError
from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.models.symmetric import Exponents, RootExpansion, SymPoly

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def poly_ring(count: int, prefix: str = 'x') -> PolyRing:
    """Anneau Q[prefix1..prefixN] en ordre lexicographique (au moins une variable)"""
    names = ','.join(f'{prefix}{i}' for i in range(1, max(count, 1) + 1))
    return ring(names, QQ, lex)[0]


def to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def poly_from_terms(R: PolyRing, terms: Dict[Exponents, Fraction]) -> PolyElement:
    """Construit un élément de R depuis un dictionnaire d'exposants"""
    width = R.ngens
    return R.from_dict({
        tuple(exps) + (0,) * (width - len(exps)): to_qq(coeff)
        for exps, coeff in terms.items()
        if coeff != 0
    })


def poly_to_terms(poly: PolyElement) -> Dict[Exponents, Fraction]:
    return {tuple(exps): from_qq(coeff) for exps, coeff in poly.items()}


def truncate(poly: PolyElement, degree: int) -> PolyElement:
    """Supprime les monômes de degré total > degree"""
    return poly.ring.from_dict({m: c for m, c in poly.items() if sum(m) <= degree})


def homogeneous_parts(poly: PolyElement) -> Dict[int, PolyElement]:
    parts: Dict[int, dict] = {}
    for monom, coeff in poly.items():
        parts.setdefault(sum(monom), {})[monom] = coeff
    return {d: poly.ring.from_dict(terms) for d, terms in parts.items()}


def truncated_mul(a: PolyElement, b: PolyElement, degree: int) -> PolyElement:
    """Produit tronqué, calculé composante homogène par composante homogène"""
    parts_a, parts_b = homogeneous_parts(a), homogeneous_parts(b)
    result = a.ring.zero
    for da, pa in parts_a.items():
        for db, pb in parts_b.items():
            if da + db <= degree:
                result += pa * pb
    return result


@lru_cache(maxsize=None)
def _newton_terms(k: int) -> Tuple[Tuple[Exponents, Fraction], ...]:
    """p_k dans Q[e_1..e_k] par la récurrence de Newton"""
    R = poly_ring(k, 'e')
    e = R.gens
    powers: List[PolyElement] = [R.zero]
    for j in range(1, k + 1):
        p_j = R.zero
        for i in range(1, j):
            p_j += (-1) ** (i - 1) * e[i - 1] * powers[j - i]
        p_j += (-1) ** (j - 1) * j * e[j - 1]
        powers.append(p_j)
    return tuple(poly_to_terms(powers[k]).items())


class SymmetricFunctionService:
    """Service d'algèbre des fonctions symétriques graduée sur Q"""

    def __init__(self, numerics_config: NumericsConfig = None):
        """Initialise le service de fonctions symétriques"""
        self.numerics_config = numerics_config or NumericsConfig.from_env()

    def newton_power_sum(self, k: int) -> SymPoly:
        """
        Exprime p_k = x_1^k + x_2^k + ... dans la base e_1..e_k

        Récurrence: p_k = e_1 p_{k-1} - e_2 p_{k-2} + ... + (-1)^{k-1} k e_k

        Args:
            k: Degré de la somme de puissances (k >= 1)

        Returns:
            SymPoly de degré pondéré k
        """
        if k < 1:
            raise InvalidParameterError(f"Somme de Newton d'ordre {k}: k >= 1 requis", parameter='k')
        return SymPoly(dict(_newton_terms(k)))

    def elementary_polynomials(self, variables: int) -> List[PolyElement]:
        """σ_1..σ_m dans Q[x_1..x_m]"""
        R = poly_ring(variables)
        sigma = [R.one]
        for x in R.gens:
            # (1 + x t) multiplie la série génératrice des σ_i
            sigma = [
                (sigma[i] if i < len(sigma) else R.zero) + (x * sigma[i - 1] if i >= 1 else R.zero)
                for i in range(len(sigma) + 1)
            ]
        return sigma[1:]

    def substitute(self, f: SymPoly, values: Sequence[PolyElement], degree: int) -> PolyElement:
        """
        Évalue f en e_i -> values[i-1] (0 au-delà), tronqué au degré total donné

        values[i-1] doit être homogène de degré i (σ_i, c_i, ...).
        """
        R = values[0].ring if values else poly_ring(1)
        powers: Dict[Tuple[int, int], PolyElement] = {}

        def power_of(i: int, a: int) -> PolyElement:
            if (i, a) not in powers:
                base = values[i]
                powers[(i, a)] = base if a == 1 else truncated_mul(power_of(i, a - 1), base, degree)
            return powers[(i, a)]

        result = R.zero
        for exps, coeff in f.terms.items():
            if SymPoly.weight(exps) > degree:
                continue
            if any(power and i >= len(values) for i, power in enumerate(exps)):
                continue
            term = R.one.mul_ground(to_qq(coeff))
            for i, power in enumerate(exps):
                if power:
                    term = truncated_mul(term, power_of(i, power), degree)
            result += term
        return truncate(result, degree)

    def expand_in_roots(self, f: SymPoly, m: int, degree: int = None) -> RootExpansion:
        """
        Développe f en e_i -> σ_i(x_1..x_m), avec e_i -> 0 pour i > m

        Args:
            f: Polynôme en base élémentaire
            m: Nombre de racines (m >= 1)
            degree: Troncature N (par défaut celle de la configuration)

        Returns:
            RootExpansion tronquée au degré N
        """
        if m < 1:
            raise InvalidParameterError(f"Nombre de racines invalide: {m}", parameter='m')
        degree = self.numerics_config.truncation_degree if degree is None else degree
        expanded = self.substitute(f, self.elementary_polynomials(m), degree)
        return RootExpansion(m, degree, poly_to_terms(expanded))

    def find_asymmetry(self, p: RootExpansion) -> Optional[Tuple[int, int]]:
        """Première transposition adjacente (1-indexée) qui modifie p, ou None"""
        for i in range(p.variables - 1):
            swapped = {}
            for exps, coeff in p.terms.items():
                exps = list(exps)
                exps[i], exps[i + 1] = exps[i + 1], exps[i]
                swapped[tuple(exps)] = coeff
            if swapped != p.terms:
                return i + 1, i + 2
        return None

    def symmetrize_to_elementary(self, p: RootExpansion, m: int = None) -> SymPoly:
        """
        Réécrit un polynôme symétrique en fonction de e_1..e_m

        Algorithme glouton: on retire c·e_1^{a1-a2}...e_m^{am} où
        c·x^a est le terme dominant en ordre lexicographique.

        Raises:
            NotSymmetricError: Si une transposition modifie p
        """
        m = p.variables if m is None else m
        if m != p.variables:
            raise InvalidParameterError(
                f"Le polynôme a {p.variables} variables, {m} annoncées",
                parameter='m'
            )
        transposition = self.find_asymmetry(p)
        if transposition is not None:
            raise NotSymmetricError(
                f"Polynôme non symétrique sous la transposition {transposition}",
                transposition=transposition
            )

        R = poly_ring(m)
        sigma = self.elementary_polynomials(m)
        remainder = poly_from_terms(R, p.terms)
        result: Dict[Exponents, Fraction] = {}
        while remainder:
            lead = max(remainder.keys())
            coeff = remainder[lead]
            exps = tuple(lead[i] - (lead[i + 1] if i + 1 < m else 0) for i in range(m))
            product = R.one
            for i, power in enumerate(exps):
                if power:
                    product *= sigma[i] ** power
            remainder -= product.mul_ground(coeff)
            result[exps] = result.get(exps, Fraction(0)) + from_qq(coeff)
        logger.debug(f"Symétrisation: {len(p.terms)} monômes -> {len(result)} termes en e_i")
        return SymPoly(result)

    def power_sum_in_roots(self, k: int, m: int, degree: int = None) -> RootExpansion:
        """Σ x_i^k calculé directement (oracle)"""
        degree = max(k, 0) if degree is None else degree
        terms = {}
        for i in range(m):
            exps = [0] * m
            exps[i] = k
            terms[tuple(exps)] = Fraction(1)
        return RootExpansion(m, degree, terms)
