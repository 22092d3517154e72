"""
Service de tables de K-groupes en forme close
Sphères, corps finis, rangs de K_n(Z), homotopie stable de U et SO
"""
import logging
from typing import Optional, Tuple

from sympy import factorint

from kcalc.exceptions import InvalidParameterError
from kcalc.ktheory.models.abelian_group import AbelianGroup
from kcalc.ktheory.models.tables import FAMILIES, UNSPECIFIED_MARKER, KQuery, KTableAnswer

logger = logging.getLogger(__name__)

ZERO = AbelianGroup()
INTEGERS = AbelianGroup(1)

# π_i(SO) stable, indexé par i mod 8; None = case non imprimée
ORTHOGONAL_TABLE = {
    0: None,
    1: AbelianGroup.cyclic(2),
    2: ZERO,
    3: INTEGERS,
    4: ZERO,
    5: ZERO,
    6: ZERO,
    7: INTEGERS,
}


def prime_power(q: int) -> Tuple[int, int]:
    """
    Décompose q = p^e

    Raises:
        InvalidParameterError: Si q n'est pas une puissance de premier
    """
    if q < 2:
        raise InvalidParameterError(f"{q} n'est pas une puissance de nombre premier", parameter='q')
    factors = factorint(q)
    if len(factors) != 1:
        raise InvalidParameterError(f"{q} n'est pas une puissance de nombre premier", parameter='q')
    (p, e), = factors.items()
    return int(p), int(e)


class KTableService:
    """Service de consultation des K-groupes connus en forme close"""

    def reduce_degree(self, n: int) -> int:
        """Périodicité de Bott: K^n = K^{n-2}, donc n mod 2"""
        return n % 2

    def k_sphere(self, i: int, m: int) -> AbelianGroup:
        """
        Groupe réduit K̃^{-i}(S^m)

        Z si i + m est pair, 0 sinon.

        Raises:
            InvalidParameterError: Si i n'est pas 0 ou 1, ou si m < 0
        """
        if i not in (0, 1):
            raise InvalidParameterError(f"Degré i = {i} hors de {{0, 1}}", parameter='i')
        if m < 0:
            raise InvalidParameterError(f"Dimension de sphère négative: {m}", parameter='m')
        return INTEGERS if (i + m) % 2 == 0 else ZERO

    def k_finite_field(self, n: int, q: int) -> AbelianGroup:
        """
        K_n(F_q) par la formule de Quillen

        Z pour n = 0, 0 pour n pair > 0, Z/(q^{(n+1)/2} - 1) pour n impair.
        """
        prime_power(q)
        if n < 0:
            raise InvalidParameterError(f"Degré négatif: {n}", parameter='n')
        if n == 0:
            return INTEGERS
        if n % 2 == 0:
            return ZERO
        return AbelianGroup.cyclic(q ** ((n + 1) // 2) - 1)

    def stable_homotopy(self, tag: str, i: int) -> Optional[AbelianGroup]:
        """
        π_i(U) ou π_i(SO) en rang stable

        Returns:
            Le groupe, ou None pour la case i ≡ 0 (8) de SO non imprimée

        Raises:
            InvalidParameterError: Si tag inconnu ou i < 0
        """
        if i < 0:
            raise InvalidParameterError(f"Degré d'homotopie négatif: {i}", parameter='i')
        tag = tag.upper()
        if tag == 'U':
            return INTEGERS if i % 2 == 1 else ZERO
        if tag == 'SO':
            return ORTHOGONAL_TABLE[i % 8]
        raise InvalidParameterError(f"Groupe inconnu: {tag}", parameter='group')

    def k_integers_rank(self, n: int) -> int:
        """dim_Q K_n(Z)⊗Q: 1 si n = 0 ou n ≡ 1 (4) avec n >= 5, 0 sinon"""
        if n < 0:
            raise InvalidParameterError(f"Degré négatif: {n}", parameter='n')
        return 1 if n == 0 or (n >= 5 and n % 4 == 1) else 0

    def query(self, request: KQuery) -> KTableAnswer:
        """
        Consultation uniforme d'une famille de tables

        Raises:
            InvalidParameterError: Si la famille ou un paramètre est invalide
        """
        family = request.family
        if family not in FAMILIES:
            raise InvalidParameterError(f"Famille de table inconnue: {family}", parameter='family')

        def need(name: str) -> int:
            value = getattr(request, name)
            if value is None:
                raise InvalidParameterError(f"Paramètre {name} requis pour {family}", parameter=name)
            return value

        if family == 'sphere':
            answer = KTableAnswer(request, group=self.k_sphere(need('i'), need('m')))
        elif family == 'finite_field':
            answer = KTableAnswer(request, group=self.k_finite_field(need('n'), need('q')))
        elif family == 'integers_rank':
            answer = KTableAnswer(request, value=self.k_integers_rank(need('n')))
        elif family == 'degree_reduce':
            answer = KTableAnswer(request, value=self.reduce_degree(need('n')))
        else:
            tag = 'U' if family == 'stable_unitary' else 'SO'
            group = self.stable_homotopy(tag, need('i'))
            answer = KTableAnswer(request, group=group, marker=None if group is not None else UNSPECIFIED_MARKER)

        logger.debug(f"Table {family} {request.to_dict()} -> {answer.text}")
        return answer
