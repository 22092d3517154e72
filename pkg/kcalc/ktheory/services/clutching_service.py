"""
Service de recollement: condition de cocycle et classification sur S^2
"""
import logging
from itertools import permutations
from typing import Dict

import numpy as np

from kcalc.exceptions import InconsistentSamplingError, InvalidParameterError
from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.models.clutching import ClutchingClass, CocycleData, CocycleReport
from kcalc.ktheory.models.symbol import MatrixSymbol
from kcalc.ktheory.services.toeplitz_service import ToeplitzService

logger = logging.getLogger(__name__)


class ClutchingService:
    """Service de validation de cocycles et de classification par recollement"""

    def __init__(self, numerics_config: NumericsConfig = None, toeplitz_service: ToeplitzService = None):
        """Initialise le service de recollement"""
        self.numerics_config = numerics_config or NumericsConfig.from_env()
        self.toeplitz = toeplitz_service or ToeplitzService(self.numerics_config)

    def validate_cocycle(self, data: CocycleData, tolerance: float) -> CocycleReport:
        """
        Vérifie g_cb·g_ba = g_ca sur chaque triple recouvrement

        Vérifie aussi g_aa = I et g_ab·g_ba = I aux points communs.

        Args:
            data: Fonctions de transition échantillonnées
            tolerance: Écart maximal admis (coefficient par coefficient)

        Returns:
            CocycleReport avec l'écart maximal et le triple fautif

        Raises:
            InconsistentSamplingError: Si un triple recouvrement n'a aucun point commun
        """
        if tolerance < 0:
            raise InvalidParameterError(f"Tolérance négative: {tolerance}", parameter='tol')

        report = CocycleReport(passed=True, tolerance=tolerance)
        samples = data.samples

        def record(deviation: float, triple, parameter: float, kind: str) -> None:
            report.checked_samples += 1
            if deviation > report.max_deviation:
                report.max_deviation = deviation
                report.worst_triple = triple
                report.worst_parameter = parameter
            if deviation > tolerance:
                report.violations.append({
                    'kind': kind,
                    'triple': list(triple),
                    'parameter': parameter,
                    'deviation': deviation,
                })

        for (a, b), by_param in samples.items():
            if a == b:
                for t, g in by_param.items():
                    record(self._deviation(g, np.eye(g.shape[0])), (a, a, a), t, 'identity')
                continue
            inverse = samples.get((b, a))
            if inverse is None or a > b:
                continue
            for t in sorted(set(by_param) & set(inverse)):
                g = by_param[t]
                record(self._deviation(g @ inverse[t], np.eye(g.shape[0])), (a, b, a), t, 'inverse')

        for a, b, c in permutations(data.charts, 3):
            if (c, b) not in samples or (b, a) not in samples or (c, a) not in samples:
                continue
            g_cb, g_ba, g_ca = samples[(c, b)], samples[(b, a)], samples[(c, a)]
            common = set(g_cb) & set(g_ba) & set(g_ca)
            if not common:
                raise InconsistentSamplingError(
                    f"Le triple recouvrement ({a}, {b}, {c}) n'a aucun point d'échantillonnage commun",
                    triple=(a, b, c)
                )
            report.checked_triples += 1
            for t in sorted(common):
                record(self._deviation(g_cb[t] @ g_ba[t], g_ca[t]), (a, b, c), t, 'cocycle')

        report.passed = report.max_deviation <= tolerance
        if report.passed:
            logger.info(
                f"Condition de cocycle vérifiée: {report.checked_triples} triples, "
                f"écart maximal {report.max_deviation:.3e}"
            )
        else:
            logger.warning(
                f"Condition de cocycle violée: écart {report.max_deviation:.3e} "
                f"sur {report.worst_triple} (t = {report.worst_parameter})"
            )
        return report

    @staticmethod
    def _deviation(left: np.ndarray, right: np.ndarray) -> float:
        return float(np.max(np.abs(left - right))) if left.size else 0.0

    def classify_over_s2(self, symbol: MatrixSymbol) -> ClutchingClass:
        """
        Classe (rang, degré) du fibré sur S^2 de fonction de recollement f

        Le degré est wn(det f); deux symboles donnent le même fibré
        si et seulement si rangs et degrés coïncident.
        """
        report = self.toeplitz.matrix_symbol_report(symbol)
        result = ClutchingClass(rank=symbol.size, degree=report.winding)
        logger.info(f"Recollement sur S^2: rang {result.rank}, degré {result.degree}")
        return result

    def honest_line_atlas(self, degree: int, samples: int = 16, seed: int = 0) -> CocycleData:
        """
        Atlas à trois cartes d'un fibré en droites de transition z^m

        g_ab = φ_a / φ_b avec φ_N = 1, φ_S = z^{-m} et φ_E une fonction
        lisse ne s'annulant pas, de sorte que le cocycle est exact.
        """
        rng = np.random.default_rng(seed)
        params = [float(t) for t in np.linspace(0.0, 2 * np.pi, samples, endpoint=False)]
        amplitude = rng.uniform(0.5, 2.0)
        phase = int(rng.integers(-3, 4))

        def chart_value(chart: str, t: float) -> complex:
            z = np.exp(1j * t)
            if chart == 'N':
                return 1.0 + 0j
            if chart == 'S':
                return z ** (-degree)
            return amplitude * np.exp(1j * phase * t) * (1.5 + np.cos(t))

        charts = ['N', 'S', 'E']
        data: Dict = {}
        for a in charts:
            for b in charts:
                if a != b:
                    data[(a, b)] = {
                        t: np.array([[chart_value(a, t) / chart_value(b, t)]], dtype=complex)
                        for t in params
                    }
        return CocycleData(charts=charts, samples=data)
