"""
Modèles pour les symboles de Toeplitz: polynômes de Laurent, symboles
matriciels, troncatures et opérateurs structurés
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple

import numpy as np

from kcalc.exceptions import DimensionMismatchError
from kcalc.ktheory.models.exact_matrix import ExactMatrix


@dataclass(frozen=True)
class LaurentSymbol:
    """
    f(z) = Σ a_k z^k pour k dans [low, low + len(coeffs) - 1]

    Les coefficients nuls aux extrémités sont supprimés (zéro exact).
    """
    low: int = 0
    coeffs: Tuple[complex, ...] = ()

    def __post_init__(self):
        values = [complex(c) for c in self.coeffs]
        start = 0
        while start < len(values) and values[start] == 0:
            start += 1
        end = len(values)
        while end > start and values[end - 1] == 0:
            end -= 1
        low = int(self.low) + start if end > start else 0
        object.__setattr__(self, 'low', low)
        object.__setattr__(self, 'coeffs', tuple(values[start:end]))

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, complex]) -> 'LaurentSymbol':
        """Construit le symbole depuis {k: a_k}"""
        if not mapping:
            return cls()
        low, high = min(mapping), max(mapping)
        return cls(low, tuple(mapping.get(k, 0) for k in range(low, high + 1)))

    @classmethod
    def constant(cls, value: complex = 1.0) -> 'LaurentSymbol':
        return cls(0, (value,))

    @classmethod
    def monomial(cls, power: int, value: complex = 1.0) -> 'LaurentSymbol':
        """value·z^power"""
        return cls(power, (value,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def pole_order(self) -> int:
        """p: ordre du pôle en 0 (a_{-p} ≠ 0 ou p = 0)"""
        return max(-self.low, 0) if self.coeffs else 0

    @property
    def top_degree(self) -> int:
        """q: plus haut exposant positif"""
        return max(self.high, 0) if self.coeffs else 0

    def coefficient(self, k: int) -> complex:
        index = k - self.low
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return 0j

    def as_mapping(self) -> Dict[int, complex]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        """f(z) = z^low·P(z), P de coefficients croissants"""
        z = np.asarray(z, dtype=complex)
        if not self.coeffs:
            return np.zeros_like(z)
        return z ** self.low * np.polynomial.polynomial.polyval(z, np.array(self.coeffs))

    def derivative(self) -> 'LaurentSymbol':
        return LaurentSymbol.from_mapping({k - 1: k * c for k, c in self.as_mapping().items() if k != 0})

    def __add__(self, other: 'LaurentSymbol') -> 'LaurentSymbol':
        mapping = self.as_mapping()
        for k, c in other.as_mapping().items():
            mapping[k] = mapping.get(k, 0) + c
        return LaurentSymbol.from_mapping(mapping)

    def __neg__(self) -> 'LaurentSymbol':
        return LaurentSymbol(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other: 'LaurentSymbol') -> 'LaurentSymbol':
        return self + (-other)

    def __mul__(self, other: 'LaurentSymbol') -> 'LaurentSymbol':
        if self.is_zero or other.is_zero:
            return LaurentSymbol()
        product = np.convolve(np.array(self.coeffs), np.array(other.coeffs))
        return LaurentSymbol(self.low + other.low, tuple(product))

    def scaled(self, factor: complex) -> 'LaurentSymbol':
        return LaurentSymbol(self.low, tuple(factor * c for c in self.coeffs))

    def trimmed(self, tolerance: float) -> 'LaurentSymbol':
        """Supprime les coefficients extrêmes de module <= tolerance"""
        return LaurentSymbol(self.low, tuple(0j if abs(c) <= tolerance else c for c in self.coeffs))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'coeffs': [
                {'k': k, 're': c.real, 'im': c.imag}
                for k, c in sorted(self.as_mapping().items())
            ]
        }


@dataclass(frozen=True)
class MatrixSymbol:
    """Symbole matriciel n×n à coefficients de Laurent"""
    entries: Tuple[Tuple[LaurentSymbol, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        for i, row in enumerate(rows):
            if len(row) != len(rows):
                raise DimensionMismatchError(
                    f"Symbole matriciel non carré (ligne {i})",
                    expected=len(rows),
                    actual=len(row)
                )
        object.__setattr__(self, 'entries', rows)

    @classmethod
    def identity(cls, n: int) -> 'MatrixSymbol':
        return cls.diagonal([LaurentSymbol.constant(1.0)] * n)

    @classmethod
    def diagonal(cls, symbols: Iterable[LaurentSymbol]) -> 'MatrixSymbol':
        symbols = list(symbols)
        n = len(symbols)
        return cls(tuple(
            tuple(symbols[i] if i == j else LaurentSymbol() for j in range(n))
            for i in range(n)
        ))

    @property
    def size(self) -> int:
        return len(self.entries)

    def stabilized(self) -> 'MatrixSymbol':
        """diag(f, 1)"""
        n = self.size
        rows = [list(row) + [LaurentSymbol()] for row in self.entries]
        rows.append([LaurentSymbol()] * n + [LaurentSymbol.constant(1.0)])
        return MatrixSymbol(tuple(tuple(r) for r in rows))

    def __matmul__(self, other: 'MatrixSymbol') -> 'MatrixSymbol':
        if self.size != other.size:
            raise DimensionMismatchError("Produit de symboles de tailles différentes", expected=self.size, actual=other.size)
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentSymbol()
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return MatrixSymbol(tuple(rows))

    def to_dict(self) -> Dict[str, Any]:
        return {'matrix': [[entry.to_dict() for entry in row] for row in self.entries]}


@dataclass(frozen=True, eq=False)
class ToeplitzTruncation:
    """Section finie N×N de T_f, coefficient (i, j) = a_{i-j}"""
    size: int
    matrix: np.ndarray

    def is_toeplitz(self, tolerance: float = 0.0) -> bool:
        """Vérifie que la matrice est constante le long des diagonales"""
        m = self.matrix
        return bool(np.all(np.abs(m[1:, 1:] - m[:-1, :-1]) <= tolerance)) if self.size > 1 else True

    def to_dict(self) -> Dict[str, Any]:
        return {
            'size': self.size,
            'matrix': [[[float(v.real), float(v.imag)] for v in row] for row in self.matrix],
        }


@dataclass(frozen=True)
class StructuredOperator:
    """(Au)_i = u_{i-m} + (Fu)_i sur les suites unilatérales, F fini sur Q"""
    shift_power: int
    perturbation: ExactMatrix

    def __post_init__(self):
        if not self.perturbation.is_square:
            raise DimensionMismatchError(
                "La perturbation doit être carrée",
                expected=self.perturbation.rows,
                actual=self.perturbation.cols
            )
        if self.perturbation.ring.kind != 'Q':
            object.__setattr__(self, 'perturbation', self.perturbation.with_ring('Q'))

    @property
    def support(self) -> int:
        """K: taille du bloc supportant F"""
        return self.perturbation.rows


@dataclass
class WindingResult:
    """Nombre d'enroulement calculé par un algorithme donné"""
    value: int
    algorithm: str
    residual: Optional[float] = None
    samples: Optional[int] = None
    roots_inside: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {'value': self.value, 'algorithm': self.algorithm}
        if self.residual is not None:
            data['residual'] = self.residual
        if self.samples is not None:
            data['samples'] = self.samples
        if self.roots_inside is not None:
            data['roots_inside'] = self.roots_inside
        return data


@dataclass
class IndexReport:
    """Indice de T_f accompagné des deux enroulements et des diagnostics"""
    index: int
    winding: int
    argument_principle: WindingResult
    root_count: WindingResult
    min_modulus: float
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def residual(self) -> float:
        return self.argument_principle.residual

    def to_dict(self) -> Dict[str, Any]:
        return {
            'index': self.index,
            'winding': self.winding,
            'residual': self.residual,
            'winding_argument_principle': self.argument_principle.value,
            'winding_root_count': self.root_count.value,
            'samples': self.argument_principle.samples,
            'min_modulus': self.min_modulus,
            **self.extra,
        }

