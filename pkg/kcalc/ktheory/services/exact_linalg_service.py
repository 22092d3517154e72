"""
Service d'algèbre linéaire exacte
Forme normale de Smith sur Z, rang et noyau sur un corps, déterminant et inverse
"""
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from kcalc.exceptions import InvalidParameterError, SingularMatrixError, DimensionMismatchError
from kcalc.ktheory.models.exact_matrix import ExactMatrix, RingElement, RingTag, SnfResult

logger = logging.getLogger(__name__)

Grid = List[List[RingElement]]


def _identity_grid(n: int) -> Grid:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class ExactLinalgService:
    """Service d'algèbre linéaire exacte sur Z, Q et F_p"""

    # ------------------------------------------------------------------
    # Forme normale de Smith
    # ------------------------------------------------------------------

    def smith_normal_form(self, matrix: ExactMatrix) -> SnfResult:
        """
        Calcule la forme normale de Smith U·A·V = D

        Le pivot est toujours un coefficient non nul de valeur absolue
        minimale (premier dans l'ordre (ligne, colonne)), puis une passe
        finale de pgcd impose la chaîne de divisibilité.

        Args:
            matrix: Matrice à coefficients entiers

        Returns:
            SnfResult contenant U, D et V (unimodulaires pour U et V)

        Raises:
            InvalidParameterError: Si la matrice n'est pas sur Z
        """
        if matrix.ring.kind != 'Z':
            raise InvalidParameterError(
                f"La forme de Smith exige une matrice sur Z (reçu {matrix.ring})",
                parameter='ring'
            )

        m, n = matrix.rows, matrix.cols
        a = matrix.to_rows()
        u = _identity_grid(m)
        v = _identity_grid(n)

        t = 0
        while t < min(m, n):
            pivot = self._find_pivot(a, t)
            if pivot is None:
                break
            self._swap_rows(a, u, t, pivot[0])
            self._swap_cols(a, v, t, pivot[1])
            self._clear_cross(a, u, v, t)
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            t += 1

        self._enforce_divisibility(a, u, v, t)

        result = SnfResult(
            U=ExactMatrix.from_rows(u, 'Z') if m else ExactMatrix.zeros(0, 0, 'Z'),
            D=ExactMatrix(m, n, tuple(x for row in a for x in row), RingTag('Z')),
            V=ExactMatrix.from_rows(v, 'Z') if n else ExactMatrix.zeros(0, 0, 'Z'),
        )
        logger.debug(f"Forme de Smith {m}x{n}: facteurs {result.invariant_factors}")
        return result

    @staticmethod
    def _find_pivot(a: Grid, t: int) -> Optional[Tuple[int, int]]:
        """Coefficient non nul minimal en valeur absolue dans le bloc [t:, t:]"""
        best = None
        best_abs = 0
        for i in range(t, len(a)):
            for j in range(t, len(a[i])):
                value = abs(a[i][j])
                if value and (best is None or value < best_abs):
                    best, best_abs = (i, j), value
        return best

    @staticmethod
    def _swap_rows(a: Grid, u: Grid, i: int, k: int) -> None:
        if i != k:
            a[i], a[k] = a[k], a[i]
            u[i], u[k] = u[k], u[i]

    @staticmethod
    def _swap_cols(a: Grid, v: Grid, j: int, k: int) -> None:
        if j != k:
            for row in a:
                row[j], row[k] = row[k], row[j]
            for row in v:
                row[j], row[k] = row[k], row[j]

    def _clear_cross(self, a: Grid, u: Grid, v: Grid, t: int) -> None:
        """Annule la ligne et la colonne t par étapes euclidiennes"""
        m, n = len(a), len(a[0])
        while True:
            pivot = a[t][t]
            for r in range(t + 1, m):
                if a[r][t]:
                    q = a[r][t] // pivot
                    a[r] = [x - q * y for x, y in zip(a[r], a[t])]
                    u[r] = [x - q * y for x, y in zip(u[r], u[t])]
            for c in range(t + 1, n):
                if a[t][c]:
                    q = a[t][c] // pivot
                    for row in a:
                        row[c] -= q * row[t]
                    for row in v:
                        row[c] -= q * row[t]

            # Restes non nuls: ils deviennent le nouveau pivot (strictement plus petit)
            best = None
            best_abs = 0
            for r in range(t + 1, m):
                if a[r][t] and (best is None or abs(a[r][t]) < best_abs):
                    best, best_abs = ('row', r), abs(a[r][t])
            for c in range(t + 1, n):
                if a[t][c] and (best is None or abs(a[t][c]) < best_abs):
                    best, best_abs = ('col', c), abs(a[t][c])
            if best is None:
                return
            if best[0] == 'row':
                self._swap_rows(a, u, t, best[1])
            else:
                self._swap_cols(a, v, t, best[1])

    @staticmethod
    def _enforce_divisibility(a: Grid, u: Grid, v: Grid, rank: int) -> None:
        """Remplace (d_i, d_j) par (pgcd, ppcm) tant que d_i ne divise pas d_j"""
        for i in range(rank):
            for j in range(i + 1, rank):
                d_i, d_j = a[i][i], a[j][j]
                if d_j % d_i == 0:
                    continue
                s, t, g = (int(x) for x in igcdex(d_i, d_j))
                bg, ag = d_j // g, d_i // g
                # Lignes: L = [[s, t], [-b/g, a/g]]
                for grid in (a, u):
                    row_i, row_j = grid[i], grid[j]
                    grid[i] = [s * x + t * y for x, y in zip(row_i, row_j)]
                    grid[j] = [-bg * x + ag * y for x, y in zip(row_i, row_j)]
                # Colonnes: R = [[1, -t·b/g], [1, s·a/g]]
                for grid in (a, v):
                    for row in grid:
                        col_i, col_j = row[i], row[j]
                        row[i] = col_i + col_j
                        row[j] = -t * bg * col_i + s * ag * col_j

    # ------------------------------------------------------------------
    # Algèbre linéaire sur un corps
    # ------------------------------------------------------------------

    def row_reduce(self, matrix: ExactMatrix) -> Tuple[Grid, List[int]]:
        """
        Forme échelonnée réduite sur un corps

        Returns:
            Tuple (lignes réduites, colonnes pivots)
        """
        ring = matrix.ring
        if not ring.is_field:
            raise InvalidParameterError(f"Réduction de Gauss-Jordan sur {ring}: corps requis", parameter='ring')
        rows = matrix.to_rows()
        m = matrix.rows
        pivots: List[int] = []
        r = 0
        for c in range(matrix.cols):
            if r == m:
                break
            p = next((i for i in range(r, m) if rows[i][c] != 0), None)
            if p is None:
                continue
            rows[r], rows[p] = rows[p], rows[r]
            inv = ring.inverse(rows[r][c])
            rows[r] = [ring.mul(inv, x) for x in rows[r]]
            for i in range(m):
                factor = rows[i][c]
                if i != r and factor != 0:
                    rows[i] = [ring.sub(x, ring.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return rows, pivots

    def field_rank_kernel(self, matrix: ExactMatrix) -> Tuple[int, List[List[RingElement]]]:
        """
        Rang et base du noyau d'une matrice sur Q ou F_p

        Chaque vecteur de base est normalisé pour que sa première
        coordonnée non nulle vaille 1.

        Args:
            matrix: Matrice sur un corps

        Returns:
            Tuple (rang, base du noyau)
        """
        ring = matrix.ring
        rows, pivots = self.row_reduce(matrix)
        pivot_set = set(pivots)
        basis = []
        for free in range(matrix.cols):
            if free in pivot_set:
                continue
            vector: List[RingElement] = [ring.normalize(0)] * matrix.cols
            vector[free] = ring.normalize(1)
            for k, column in enumerate(pivots):
                vector[column] = ring.neg(rows[k][free])
            lead = next(x for x in vector if x != 0)
            inv = ring.inverse(lead)
            basis.append([ring.mul(inv, x) for x in vector])
        return len(pivots), basis

    def rank(self, matrix: ExactMatrix) -> int:
        """Rang sur le corps des fractions (Q pour une matrice entière)"""
        if matrix.ring.kind == 'Z':
            matrix = matrix.with_ring('Q')
        return len(self.row_reduce(matrix)[1])

    def determinant(self, matrix: ExactMatrix) -> RingElement:
        """
        Déterminant exact par élimination

        Sur Z le calcul passe par Q, le résultat est ramené à un entier.
        """
        if not matrix.is_square:
            raise DimensionMismatchError("Déterminant d'une matrice non carrée", expected=matrix.rows, actual=matrix.cols)
        work = matrix.with_ring('Q') if matrix.ring.kind == 'Z' else matrix
        ring = work.ring
        rows = work.to_rows()
        n = matrix.rows
        det: RingElement = ring.normalize(1)
        for c in range(n):
            p = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if p is None:
                return ring.normalize(0) if matrix.ring.kind != 'Z' else 0
            if p != c:
                rows[c], rows[p] = rows[p], rows[c]
                det = ring.neg(det)
            det = ring.mul(det, rows[c][c])
            inv = ring.inverse(rows[c][c])
            for i in range(c + 1, n):
                factor = ring.mul(rows[i][c], inv)
                if factor != 0:
                    rows[i] = [ring.sub(x, ring.mul(factor, y)) for x, y in zip(rows[i], rows[c])]
        if matrix.ring.kind == 'Z':
            return int(Fraction(det))
        return det

    def inverse(self, matrix: ExactMatrix) -> ExactMatrix:
        """
        Inverse exacte sur un corps (Gauss-Jordan sur [A | I])

        Raises:
            SingularMatrixError: Si la matrice n'est pas inversible
        """
        if not matrix.is_square:
            raise DimensionMismatchError("Inverse d'une matrice non carrée", expected=matrix.rows, actual=matrix.cols)
        n = matrix.rows
        if n == 0:
            return matrix
        augmented = ExactMatrix.from_rows(
            [row + ident for row, ident in zip(matrix.to_rows(), _identity_grid(n))],
            matrix.ring
        )
        rows, pivots = self.row_reduce(augmented)
        if pivots[:n] != list(range(n)):
            raise SingularMatrixError("Matrice singulière: aucune inverse")
        return ExactMatrix.from_rows([row[n:] for row in rows], matrix.ring)

    def is_unimodular(self, matrix: ExactMatrix) -> bool:
        """Vrai si la matrice entière est de déterminant ±1"""
        return matrix.is_square and self.determinant(matrix) in (1, -1)

    def has_divisibility_chain(self, snf: SnfResult) -> bool:
        """Vérifie d_1 | d_2 | ... avec d_i >= 0 et zéros en fin de diagonale"""
        factors = snf.invariant_factors
        nonzero = [d for d in factors if d != 0]
        if any(d < 0 for d in factors) or factors[:len(nonzero)] != nonzero:
            return False
        if any(snf.D[i, j] != 0 for i in range(snf.D.rows) for j in range(snf.D.cols) if i != j):
            return False
        return all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
