"""
Service de matrices élémentaires
Factorisation en transvections, identité de Whitehead, relations de Steinberg et K_1 des corps finis
"""
import logging
import random
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import ZZ, factorint
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod, gf_strip

from kcalc.exceptions import DimensionMismatchError, InvalidParameterError, SingularMatrixError
from kcalc.ktheory.models.abelian_group import AbelianGroup
from kcalc.ktheory.models.exact_matrix import ExactMatrix, RingElement, RingTag
from kcalc.ktheory.models.transvection import (
    FactorizationResult,
    K1Result,
    SteinbergReport,
    Transvection,
    WhiteheadResult,
)
from kcalc.ktheory.services.exact_linalg_service import ExactLinalgService
from kcalc.ktheory.services.ktable_service import prime_power

logger = logging.getLogger(__name__)

# I + S, S creux indexé par (ligne, colonne)
Sparse = Dict[Tuple[int, int], RingElement]


def _sparse_mul(s: Sparse, t: Sparse, ring: RingTag) -> Sparse:
    """(I + S)(I + T) = I + S + T + ST"""
    out = dict(s)
    for key, v in t.items():
        out[key] = ring.add(out.get(key, 0), v)
    by_row: Dict[int, List[Tuple[int, RingElement]]] = {}
    for (r, c), w in t.items():
        by_row.setdefault(r, []).append((c, w))
    for (r, c), v in s.items():
        for d, w in by_row.get(c, ()):
            out[(r, d)] = ring.add(out.get((r, d), 0), ring.mul(v, w))
    return {k: v for k, v in out.items() if v != 0}


def _sparse_commutator(x: Sparse, x_inv: Sparse, y: Sparse, y_inv: Sparse, ring: RingTag) -> Sparse:
    return _sparse_mul(_sparse_mul(_sparse_mul(x, y, ring), x_inv, ring), y_inv, ring)


class WhiteheadService:
    """Service des identités du groupe élémentaire E_n"""

    def __init__(self, linalg_service: ExactLinalgService = None):
        self.linalg = linalg_service or ExactLinalgService()

    # ------------------------------------------------------------------
    # Factorisation
    # ------------------------------------------------------------------

    def transvection_factorize(self, matrix: ExactMatrix) -> FactorizationResult:
        """
        Écrit A = e_1·...·e_r·diag(d, 1, ..., 1) avec des transvections

        Seules des additions de lignes sont utilisées (pas d'échange, qui
        sortirait de E_n). Une matrice entière est lue sur Q.

        Args:
            matrix: Matrice carrée inversible sur un corps

        Returns:
            FactorizationResult dont le produit redonne exactement A, d = det A

        Raises:
            SingularMatrixError: Si A n'est pas inversible
        """
        if not matrix.is_square:
            raise DimensionMismatchError("Factorisation d'une matrice non carrée", expected=matrix.rows, actual=matrix.cols)
        if not matrix.ring.is_field:
            matrix = matrix.with_ring('Q')
        ring = matrix.ring
        n = matrix.rows
        if n == 0:
            raise InvalidParameterError("Matrice vide", parameter='matrix')

        rows = matrix.to_rows()
        ops: List[Transvection] = []

        def add_row(target: int, source: int, c: RingElement) -> None:
            if c == 0:
                return
            rows[target] = [ring.add(x, ring.mul(c, y)) for x, y in zip(rows[target], rows[source])]
            ops.append(Transvection(target, source, c))

        for k in range(n - 1):
            if rows[k][k] != 1:
                j = next((r for r in range(k + 1, n) if rows[r][k] != 0), None)
                if j is None:
                    if rows[k][k] == 0:
                        raise SingularMatrixError(f"Matrice singulière (colonne {k + 1} sans pivot)")
                    add_row(k + 1, k, ring.normalize(1))
                    j = k + 1
                add_row(k, j, ring.div(ring.sub(1, rows[k][k]), rows[j][k]))
            for i in range(n):
                if i != k:
                    add_row(i, k, ring.neg(rows[i][k]))

        d = rows[n - 1][n - 1]
        if d == 0:
            raise SingularMatrixError("Matrice singulière (dernier pivot nul)")
        for i in range(n - 1):
            add_row(i, n - 1, ring.neg(ring.div(rows[i][n - 1], d)))

        factors = [op.inverse(ring) for op in ops]
        if n > 1 and d != 1:
            # diag(1, ..., d) = diag(d^-1, ..., d)·diag(d, 1, ..., 1), le premier facteur valant w(1/d)·w(-1)
            factors.extend(self._diagonal_swap(ring.inverse(d), 0, n - 1, ring))
        diagonal = ExactMatrix.diagonal([d] + [1] * (n - 1), ring)

        result = FactorizationResult(factors=factors, diagonal=diagonal)
        logger.debug(f"Factorisation {n}x{n} sur {ring}: {len(factors)} transvections, résidu {d}")
        return result

    @staticmethod
    def _diagonal_swap(u: RingElement, i: int, j: int, ring: RingTag) -> List[Transvection]:
        """Transvections de diag(u, u^-1) en positions (i, j)"""

        def w(v: RingElement) -> List[Transvection]:
            return [
                Transvection(i, j, v),
                Transvection(j, i, ring.neg(ring.inverse(v))),
                Transvection(i, j, v),
            ]

        return w(u) + w(ring.normalize(-1))

    @staticmethod
    def reassemble(result: FactorizationResult, n: int) -> ExactMatrix:
        """Produit e_1·...·e_r·diag(d, 1, ..., 1)"""
        ring = result.diagonal.ring
        product = ExactMatrix.identity(n, ring)
        for factor in result.factors:
            product = product @ factor.matrix(n, ring)
        return product @ result.diagonal

    # ------------------------------------------------------------------
    # Lemme de Whitehead
    # ------------------------------------------------------------------

    def whitehead_identity(self, a: ExactMatrix, b: ExactMatrix) -> WhiteheadResult:
        """
        Vérifie diag([a, b], 1, 1) = diag(a, a^-1, 1)·diag(b, 1, b^-1)·diag(a^-1, a, 1)·diag(b^-1, 1, b)

        Raises:
            SingularMatrixError: Si a ou b n'est pas inversible
            DimensionMismatchError: Si a et b n'ont pas la même taille
        """
        if not a.is_square or not b.is_square or a.rows != b.rows:
            raise DimensionMismatchError("Blocs a et b de tailles incompatibles", expected=a.rows, actual=b.rows)
        if not a.ring.is_field:
            a = a.with_ring('Q')
        if not b.ring.is_field:
            b = b.with_ring(a.ring)
        ring = a.ring
        n = a.rows
        one = ExactMatrix.identity(n, ring)
        a_inv = self.linalg.inverse(a)
        b_inv = self.linalg.inverse(b)

        factors = (
            a.block_diagonal(a_inv, one),
            b.block_diagonal(one, b_inv),
            a_inv.block_diagonal(a, one),
            b_inv.block_diagonal(one, b),
        )
        product = factors[0] @ factors[1] @ factors[2] @ factors[3]
        commutator = a @ b @ a_inv @ b_inv
        result = WhiteheadResult(factors=factors, product=product, expected=commutator.block_diagonal(one, one))
        if not result.holds:
            logger.error("Identité de Whitehead en défaut")
        return result

    def factorize_commutator(self, a: ExactMatrix, b: ExactMatrix) -> List[FactorizationResult]:
        """
        Factorise chacun des quatre facteurs par blocs en transvections

        Chaque facteur est de déterminant 1, donc de résidu 1: [a, b] ⊕ 1 ⊕ 1 est dans E_{3n}.
        """
        identity = self.whitehead_identity(a, b)
        results = [self.transvection_factorize(f) for f in identity.factors]
        for r in results:
            if r.residue != 1:
                raise SingularMatrixError(f"Facteur par blocs de résidu {r.residue} != 1")
        logger.info(f"Commutateur factorisé: {sum(len(r.factors) for r in results)} transvections")
        return results

    # ------------------------------------------------------------------
    # Relations de Steinberg
    # ------------------------------------------------------------------

    def steinberg_check(self, n: int, trials: int, ring: RingTag, seed: int = 0) -> SteinbergReport:
        """
        Vérifie la table des commutateurs sur les matrices e^a_ij

        [e^a_ij, e^b_kl] = 1 si j ≠ k et i ≠ l, e^{ab}_il si j = k et i ≠ l,
        e^{-ba}_kj si j ≠ k et i = l; vérifie aussi e^a_ij·e^b_ij = e^{a+b}_ij.

        Args:
            n: Taille (n >= 3)
            trials: Nombre de tirages (a, b)
            ring: Z, Q ou F_p
            seed: Graine du générateur

        Returns:
            SteinbergReport dont la liste de violations doit être vide
        """
        if n < 3:
            raise InvalidParameterError(f"n = {n}: n >= 3 requis", parameter='n')
        if trials < 0:
            raise InvalidParameterError(f"Nombre de tirages négatif: {trials}", parameter='trials')

        rng = random.Random(seed)
        report = SteinbergReport(size=n, trials=trials, ring=str(ring))
        pairs = list(permutations(range(n), 2))

        for _ in range(trials):
            a, b = self._draw(rng, ring), self._draw(rng, ring)
            for (i, j) in pairs:
                x, x_inv = {(i, j): a}, {(i, j): ring.neg(a)}
                if a == 0:
                    x, x_inv = {}, {}
                total = ring.add(a, b)
                got = _sparse_mul(x, {(i, j): b} if b else {}, ring)
                report.checked += 1
                if got != ({(i, j): total} if total != 0 else {}):
                    report.violations.append({'case': 'additivity', 'indices': [i + 1, j + 1], 'a': str(a), 'b': str(b)})

                for (k, l) in pairs:
                    if j == k and i == l:
                        continue
                    y = {(k, l): b} if b else {}
                    y_inv = {(k, l): ring.neg(b)} if b else {}
                    got = _sparse_commutator(x, x_inv, y, y_inv, ring)
                    if j != k and i != l:
                        case, expected = 'disjoint', {}
                    elif j == k:
                        case, expected = 'chain', {(i, l): ring.mul(a, b)}
                    else:
                        case, expected = 'reverse_chain', {(k, j): ring.neg(ring.mul(b, a))}
                    expected = {key: v for key, v in expected.items() if v != 0}
                    report.checked += 1
                    if got != expected:
                        report.violations.append({
                            'case': case,
                            'indices': [i + 1, j + 1, k + 1, l + 1],
                            'a': str(a),
                            'b': str(b),
                        })

        if report.passed:
            logger.info(f"Relations de Steinberg vérifiées: {report.checked} cas (n = {n}, {ring})")
        else:
            logger.warning(f"Relations de Steinberg: {len(report.violations)} violations")
        return report

    @staticmethod
    def _draw(rng: random.Random, ring: RingTag) -> RingElement:
        if ring.kind == 'Fp':
            return rng.randrange(ring.modulus)
        if ring.kind == 'Q':
            return Fraction(rng.randint(-10, 10), rng.randint(1, 5))
        return rng.randint(-10, 10)

    # ------------------------------------------------------------------
    # K_1 des corps finis
    # ------------------------------------------------------------------

    def k1_finite_field(self, q: int, modulus: Optional[Sequence[int]] = None) -> K1Result:
        """
        K_1(F_q) = F_q^×, cyclique d'ordre q - 1, avec un générateur vérifié

        Le générateur est trouvé par test d'ordre: g engendre si et seulement
        si g^{(q-1)/r} ≠ 1 pour tout premier r divisant q - 1. Pour q = p^e
        avec e > 1, les éléments sont des polynômes de F_p[x]/(m) et le
        module m irréductible de degré e doit être fourni.

        Raises:
            InvalidParameterError: q n'est pas une puissance de premier, module manquant ou réductible
        """
        p, e = prime_power(q)
        order = q - 1
        group = AbelianGroup.cyclic(order) if order > 1 else AbelianGroup()
        primes = list(factorint(order)) if order > 1 else []

        if e == 1:
            generator = next(
                g for g in range(1, p)
                if all(pow(g, order // r, p) != 1 for r in primes)
            )
            logger.info(f"K_1(F_{q}) = {group}, générateur {generator}")
            return K1Result(q=q, group=group, generator=(generator,))

        if modulus is None:
            raise InvalidParameterError(f"F_{q} exige un polynôme module de degré {e}", parameter='modulus')
        m = gf_strip([int(c) % p for c in modulus])
        if len(m) - 1 != e:
            raise InvalidParameterError(f"Module de degré {len(m) - 1}, {e} attendu", parameter='modulus')
        if m[0] != 1:
            m = [c * pow(m[0], -1, p) % p for c in m]
        if not gf_irreducible_p(m, p, ZZ):
            raise InvalidParameterError(f"Module {m} réductible sur F_{p}", parameter='modulus')

        for index in range(1, q):
            element = self._field_element(index, p)
            if all(gf_pow_mod(element, order // r, m, p, ZZ) != [1] for r in primes):
                logger.info(f"K_1(F_{q}) = {group}, générateur {element} modulo {m}")
                return K1Result(q=q, group=group, generator=tuple(element), modulus=tuple(m))
        raise InvalidParameterError(f"Aucun générateur trouvé pour F_{q}", parameter='modulus')

    @staticmethod
    def _field_element(index: int, p: int) -> List[int]:
        """Écriture de index en base p, lue comme polynôme (degré décroissant)"""
        digits = []
        while index:
            index, r = divmod(index, p)
            digits.append(r)
        return gf_strip(list(reversed(digits)))
