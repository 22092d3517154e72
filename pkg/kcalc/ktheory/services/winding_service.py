"""
Service de calcul du nombre d'enroulement d'un symbole de Laurent
Deux algorithmes indépendants: principe de l'argument et comptage de racines
"""
import logging

import numpy as np

from kcalc.exceptions import (
    DegeneratePolynomialError,
    InvalidParameterError,
    NotInvertibleOnCircleError,
    QuadratureNotConvergedError,
    RootOnCircleError,
)
from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.interfaces import IWindingAlgorithm
from kcalc.ktheory.models.symbol import LaurentSymbol, WindingResult

logger = logging.getLogger(__name__)


def circle_points(samples: int) -> np.ndarray:
    """Points équirépartis z_j = exp(2iπj/M)"""
    return np.exp(2j * np.pi * np.arange(samples) / samples)


def required_samples(symbol: LaurentSymbol) -> int:
    """Nombre minimal d'échantillons 4(p + q + 1)"""
    return 4 * (symbol.pole_order + symbol.top_degree + 1)


def min_modulus(symbol: LaurentSymbol, samples: int) -> float:
    """
    Minimum de |f(z)| sur M points uniformes du cercle

    Raises:
        InvalidParameterError: Si M < 4(p + q + 1)
    """
    if samples < required_samples(symbol):
        raise InvalidParameterError(
            f"{samples} échantillons insuffisants (minimum {required_samples(symbol)})",
            parameter='samples'
        )
    if symbol.is_zero:
        return 0.0
    return float(np.min(np.abs(symbol.evaluate(circle_points(samples)))))


class _GatedWinding(IWindingAlgorithm):
    """Contrôle commun: f doit être inversible sur le cercle"""

    def __init__(self, numerics_config: NumericsConfig = None):
        self.numerics_config = numerics_config or NumericsConfig.from_env()

    def check_gate(self, symbol: LaurentSymbol) -> float:
        samples = max(self.numerics_config.max_samples, required_samples(symbol))
        modulus = min_modulus(symbol, samples)
        if modulus <= self.numerics_config.modulus_gate:
            raise NotInvertibleOnCircleError(
                f"Symbole non inversible sur le cercle (min |f| = {modulus:.3e})",
                min_modulus=modulus
            )
        return modulus


class ArgumentPrincipleWinding(_GatedWinding):
    """wn(f) = moyenne de z·f'(z)/f(z) par la méthode des trapèzes"""

    name = 'argument_principle'

    def compute(self, symbol: LaurentSymbol) -> WindingResult:
        """
        Quadrature avec doublement de 2^8 à 2^14 points

        Raises:
            NotInvertibleOnCircleError: Si le symbole s'annule sur le cercle
            QuadratureNotConvergedError: Si le résidu reste >= tolérance
        """
        self.check_gate(symbol)
        derivative = symbol.derivative()
        config = self.numerics_config

        log2 = config.min_log2_samples
        while 2 ** log2 < required_samples(symbol) and log2 < config.max_log2_samples:
            log2 += 1

        residual = float('inf')
        samples = 0
        for exponent in range(log2, config.max_log2_samples + 1):
            samples = 2 ** exponent
            z = circle_points(samples)
            value = np.mean(z * derivative.evaluate(z) / symbol.evaluate(z))
            rounded = int(np.rint(value.real))
            residual = float(abs(value - rounded))
            if residual < config.quadrature_tolerance:
                logger.debug(f"Principe de l'argument: wn = {rounded}, M = {samples}, résidu {residual:.2e}")
                return WindingResult(rounded, self.name, residual=residual, samples=samples)

        raise QuadratureNotConvergedError(
            f"Quadrature non convergée après {samples} points (résidu {residual:.2e})",
            residual=residual
        )


class RootCountWinding(_GatedWinding):
    """wn(f) = low + nombre de racines de z^{-low}·f dans le disque unité"""

    name = 'root_count'

    def compute(self, symbol: LaurentSymbol) -> WindingResult:
        """
        Valeurs propres de la matrice compagnon (équilibrée par LAPACK)

        Raises:
            DegeneratePolynomialError: Si le polynôme est nul
            RootOnCircleError: Si une racine est à moins de la tolérance du cercle
        """
        if symbol.is_zero:
            raise DegeneratePolynomialError("Polynôme identiquement nul")
        self.check_gate(symbol)

        coeffs = np.array(symbol.coeffs, dtype=complex)
        inside = 0
        if len(coeffs) > 1:
            degree = len(coeffs) - 1
            companion = np.diag(np.ones(degree - 1, dtype=complex), -1)
            companion[0] = -(coeffs[:-1][::-1] / coeffs[-1])
            roots = np.linalg.eigvals(companion)
            distances = np.abs(np.abs(roots) - 1.0)
            if np.any(distances < self.numerics_config.root_circle_tolerance):
                raise RootOnCircleError(
                    f"Racine à {float(np.min(distances)):.2e} du cercle unité",
                    distance=float(np.min(distances))
                )
            inside = int(np.sum(np.abs(roots) < 1.0))

        value = inside + symbol.low
        logger.debug(f"Comptage de racines: {inside} racines intérieures, wn = {value}")
        return WindingResult(value, self.name, roots_inside=inside)
