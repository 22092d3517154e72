"""
Service d'indice de Fredholm pour les opérateurs de Toeplitz
Indice par le symbole, symboles matriciels, troncatures et opérateurs
structurés (décalage + rang fini) calculés exactement
"""
import logging
from typing import List, Tuple

import numpy as np

from kcalc.exceptions import (
    DegeneratePolynomialError,
    InvalidParameterError,
    WindingDisagreementError,
    WindowNotStabilizedError,
)
from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.models.exact_matrix import ExactMatrix
from kcalc.ktheory.models.symbol import (
    IndexReport,
    LaurentSymbol,
    MatrixSymbol,
    StructuredOperator,
    ToeplitzTruncation,
)
from kcalc.ktheory.services.exact_linalg_service import ExactLinalgService
from kcalc.ktheory.services.winding_service import (
    ArgumentPrincipleWinding,
    RootCountWinding,
    min_modulus,
    required_samples,
)

logger = logging.getLogger(__name__)

# Coefficients relatifs en dessous de ce seuil: bruit d'annulation du déterminant
DETERMINANT_TRIM = 1e-12


class ToeplitzService:
    """Service de calcul d'indices d'opérateurs de Toeplitz et de Fredholm"""

    def __init__(self, numerics_config: NumericsConfig = None, linalg_service: ExactLinalgService = None):
        """Initialise le service avec les deux algorithmes d'enroulement"""
        self.numerics_config = numerics_config or NumericsConfig.from_env()
        self.linalg = linalg_service or ExactLinalgService()
        self.argument_principle = ArgumentPrincipleWinding(self.numerics_config)
        self.root_count = RootCountWinding(self.numerics_config)

    # ------------------------------------------------------------------
    # Indice par le symbole
    # ------------------------------------------------------------------

    def index_report(self, symbol: LaurentSymbol) -> IndexReport:
        """
        Calcule Ind T_f = -wn(f) avec les deux algorithmes et leurs diagnostics

        Raises:
            WindingError: Si un des algorithmes échoue
            WindingDisagreementError: Si les deux valeurs diffèrent
        """
        argument = self.argument_principle.compute(symbol)
        roots = self.root_count.compute(symbol)
        if argument.value != roots.value:
            logger.error(f"Désaccord d'enroulement: {argument.value} (argument) / {roots.value} (racines)")
            raise WindingDisagreementError(
                f"Les algorithmes d'enroulement divergent: {argument.value} != {roots.value}",
                values=(argument.value, roots.value)
            )
        modulus = min_modulus(symbol, max(self.numerics_config.max_samples, required_samples(symbol)))
        return IndexReport(
            index=-argument.value,
            winding=argument.value,
            argument_principle=argument,
            root_count=roots,
            min_modulus=modulus,
        )

    def toeplitz_index(self, symbol: LaurentSymbol) -> int:
        """Ind T_f = -wn(f), convention wn(z) = +1"""
        return self.index_report(symbol).index

    def winding(self, symbol: LaurentSymbol) -> int:
        return self.index_report(symbol).winding

    # ------------------------------------------------------------------
    # Symboles matriciels
    # ------------------------------------------------------------------

    def matrix_determinant(self, symbol: MatrixSymbol) -> LaurentSymbol:
        """Déterminant par développement de Laplace sur les polynômes de Laurent"""
        return self._laplace([list(row) for row in symbol.entries])

    def _laplace(self, rows: List[List[LaurentSymbol]]) -> LaurentSymbol:
        n = len(rows)
        if n == 0:
            return LaurentSymbol.constant(1.0)
        if n == 1:
            return rows[0][0]
        total = LaurentSymbol()
        for j, entry in enumerate(rows[0]):
            if entry.is_zero:
                continue
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            term = entry * self._laplace(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    def _clean_determinant(self, det: LaurentSymbol) -> LaurentSymbol:
        if det.is_zero:
            raise DegeneratePolynomialError("Déterminant du symbole identiquement nul")
        scale = max(abs(c) for c in det.coeffs)
        return det.trimmed(DETERMINANT_TRIM * scale)

    def matrix_symbol_report(self, symbol: MatrixSymbol) -> IndexReport:
        """Rapport d'indice pour det F"""
        det = self._clean_determinant(self.matrix_determinant(symbol))
        report = self.index_report(det)
        report.extra['size'] = symbol.size
        report.extra['determinant'] = det.to_dict()
        return report

    def matrix_symbol_index(self, symbol: MatrixSymbol) -> int:
        """Ind T_F = -wn(det F)"""
        return self.matrix_symbol_report(symbol).index

    # ------------------------------------------------------------------
    # Troncatures
    # ------------------------------------------------------------------

    def truncate(self, symbol: LaurentSymbol, size: int) -> ToeplitzTruncation:
        """
        Section finie N×N: coefficient (i, j) = a_{i-j}

        Raises:
            InvalidParameterError: Si N < 1
        """
        if size < 1:
            raise InvalidParameterError(f"Taille de troncature invalide: {size}", parameter='N')
        matrix = np.zeros((size, size), dtype=complex)
        for k, value in symbol.as_mapping().items():
            if abs(k) < size:
                # diagonale i - j = k
                matrix += value * np.eye(size, k=-k, dtype=complex)
        return ToeplitzTruncation(size, matrix)

    # ------------------------------------------------------------------
    # Opérateurs structurés (calcul exact)
    # ------------------------------------------------------------------

    def structured_matrix(self, operator: StructuredOperator, rows: int, cols: int) -> ExactMatrix:
        """Bloc M[0:rows, 0:cols] avec M[i][j] = [i - j = m] + F[i][j]"""
        m = operator.shift_power
        F = operator.perturbation
        K = operator.support
        grid = [
            [
                (1 if i - j == m else 0) + (F[i, j] if i < K and j < K else 0)
                for j in range(cols)
            ]
            for i in range(rows)
        ]
        return ExactMatrix.from_rows(grid, 'Q')

    def kernel_cokernel(self, operator: StructuredOperator, window: int) -> Tuple[int, int]:
        """dim ker A et dim ker A* calculés sur une fenêtre de support W"""
        m = operator.shift_power
        block = self.structured_matrix(operator, window + max(m, 0), window)
        rank, _ = self.linalg.field_rank_kernel(block)
        kernel = window - rank

        co_block = self.structured_matrix(operator, window, window + max(-m, 0)).transpose()
        co_rank, _ = self.linalg.field_rank_kernel(co_block)
        cokernel = window - co_rank
        return kernel, cokernel

    def structured_report(self, operator: StructuredOperator) -> dict:
        """Dimensions du noyau et du conoyau, fenêtre utilisée, indice"""
        window = operator.support + abs(operator.shift_power) + self.numerics_config.window_padding
        first = self.kernel_cokernel(operator, window)
        second = self.kernel_cokernel(operator, window + 1)
        if first != second:
            raise WindowNotStabilizedError(
                f"Dimensions instables: {first} (W={window}) / {second} (W={window + 1})",
                window=window
            )
        kernel, cokernel = first
        return {'index': kernel - cokernel, 'kernel': kernel, 'cokernel': cokernel, 'window': window}

    def structured_index(self, operator: StructuredOperator) -> int:
        """
        Indice exact dim ker A - dim ker A* d'un décalage perturbé

        Raises:
            WindowNotStabilizedError: Si les dimensions varient de W à W + 1
        """
        report = self.structured_report(operator)
        logger.info(
            f"Opérateur structuré m={operator.shift_power}, K={operator.support}: "
            f"noyau {report['kernel']}, conoyau {report['cokernel']}, indice {report['index']}"
        )
        return report['index']

    def finite_index(self, matrix: ExactMatrix) -> int:
        """dim ker - dim coker d'une application linéaire en dimension finie"""
        work = matrix.with_ring('Q') if matrix.ring.kind == 'Z' else matrix
        rank, kernel = self.linalg.field_rank_kernel(work)
        cokernel = work.rows - rank
        return len(kernel) - cokernel
