"""
Modèles ExactMatrix / SnfResult : matrices exactes sur Z, Q ou F_p
"""
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from sympy import isprime

from kcalc.exceptions import DimensionMismatchError, InvalidParameterError

RingElement = Union[int, Fraction]


@dataclass(frozen=True)
class RingTag:
    """Anneau des coefficients: 'Z', 'Q' ou 'Fp' avec p premier"""
    kind: str
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ('Z', 'Q', 'Fp'):
            raise InvalidParameterError(f"Anneau inconnu: {self.kind}", parameter='ring')
        if self.kind == 'Fp':
            if self.modulus is None or not isprime(self.modulus):
                raise InvalidParameterError(
                    f"Le corps F_p exige un p premier (reçu {self.modulus})",
                    parameter='ring'
                )
        elif self.modulus is not None:
            raise InvalidParameterError(f"Pas de module pour l'anneau {self.kind}", parameter='ring')

    @classmethod
    def parse(cls, text: str) -> 'RingTag':
        """Analyse 'Z', 'Q' ou 'Fp:<p>'"""
        text = text.strip()
        if text.startswith('Fp:'):
            try:
                return cls('Fp', int(text[3:]))
            except ValueError as e:
                raise InvalidParameterError(f"Module invalide: {text}", parameter='ring') from e
        return cls(text)

    def __str__(self) -> str:
        return f"Fp:{self.modulus}" if self.kind == 'Fp' else self.kind

    @property
    def is_field(self) -> bool:
        return self.kind != 'Z'

    def normalize(self, value: Any) -> RingElement:
        """Convertit une valeur (int, Fraction, chaîne décimale) vers l'anneau"""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool) or not isinstance(value, Rational):
            raise InvalidParameterError(f"Coefficient non exact: {value!r}", parameter='entries')
        value = Fraction(value)
        if self.kind == 'Q':
            return value
        if self.kind == 'Z':
            if value.denominator != 1:
                raise InvalidParameterError(f"Coefficient non entier sur Z: {value}", parameter='entries')
            return int(value)
        # F_p: un rationnel a/b est lu comme a * b^-1 mod p
        if value.denominator % self.modulus == 0:
            raise InvalidParameterError(f"Dénominateur nul modulo {self.modulus}: {value}", parameter='entries')
        return (value.numerator * pow(value.denominator, -1, self.modulus)) % self.modulus

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        return (a + b) % self.modulus if self.kind == 'Fp' else a + b

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        return (a - b) % self.modulus if self.kind == 'Fp' else a - b

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        return (a * b) % self.modulus if self.kind == 'Fp' else a * b

    def neg(self, a: RingElement) -> RingElement:
        return (-a) % self.modulus if self.kind == 'Fp' else -a

    def inverse(self, a: RingElement) -> RingElement:
        """Inverse multiplicatif (corps uniquement)"""
        if a == 0:
            raise ZeroDivisionError("Inverse de zéro")
        if self.kind == 'Fp':
            return pow(a, -1, self.modulus)
        if self.kind == 'Q':
            return 1 / Fraction(a)
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} n'est pas inversible dans Z")

    def div(self, a: RingElement, b: RingElement) -> RingElement:
        return self.mul(a, self.inverse(b))

    def to_text(self, value: RingElement) -> str:
        """Représentation décimale exacte"""
        return str(value)


@dataclass(frozen=True)
class ExactMatrix:
    """Matrice dense exacte, coefficients stockés ligne par ligne"""
    rows: int
    cols: int
    entries: Tuple[RingElement, ...]
    ring: RingTag

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("Dimensions négatives")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                "Nombre de coefficients incohérent",
                expected=self.rows * self.cols,
                actual=len(self.entries)
            )
        object.__setattr__(self, 'entries', tuple(self.ring.normalize(v) for v in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], ring: Union[RingTag, str] = 'Z') -> 'ExactMatrix':
        """Construit une matrice depuis une liste de lignes"""
        if isinstance(ring, str):
            ring = RingTag.parse(ring)
        rows = [list(r) for r in rows]
        n_cols = len(rows[0]) if rows else 0
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionMismatchError(f"Ligne {i}: longueur incohérente", expected=n_cols, actual=len(row))
        return cls(len(rows), n_cols, tuple(v for row in rows for v in row), ring)

    @classmethod
    def identity(cls, n: int, ring: Union[RingTag, str] = 'Z') -> 'ExactMatrix':
        if isinstance(ring, str):
            ring = RingTag.parse(ring)
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)), ring)

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: Union[RingTag, str] = 'Z') -> 'ExactMatrix':
        if isinstance(ring, str):
            ring = RingTag.parse(ring)
        return cls(rows, cols, (0,) * (rows * cols), ring)

    @classmethod
    def diagonal(cls, values: Sequence[Any], ring: Union[RingTag, str] = 'Z') -> 'ExactMatrix':
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], ring)

    def __getitem__(self, index: Tuple[int, int]) -> RingElement:
        i, j = index
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[RingElement]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def with_ring(self, ring: Union[RingTag, str]) -> 'ExactMatrix':
        """Réinterprète les coefficients dans un autre anneau"""
        if isinstance(ring, str):
            ring = RingTag.parse(ring)
        return ExactMatrix(self.rows, self.cols, self.entries, ring)

    def transpose(self) -> 'ExactMatrix':
        return ExactMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
            self.ring
        )

    def __matmul__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        if self.cols != other.rows:
            raise DimensionMismatchError("Produit matriciel impossible", expected=self.cols, actual=other.rows)
        if self.ring != other.ring:
            raise InvalidParameterError(f"Anneaux différents: {self.ring} / {other.ring}", parameter='ring')
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            row_a = a[i]
            for j in range(other.cols):
                acc = 0
                for k in range(self.cols):
                    if row_a[k]:
                        acc += row_a[k] * b[k][j]
                out.append(acc)
        return ExactMatrix(self.rows, other.cols, tuple(out), self.ring)

    def block_diagonal(self, *others: 'ExactMatrix') -> 'ExactMatrix':
        """Matrice diagonale par blocs diag(self, others...)"""
        blocks = (self,) + others
        size_r = sum(b.rows for b in blocks)
        size_c = sum(b.cols for b in blocks)
        grid = [[0] * size_c for _ in range(size_r)]
        r0 = c0 = 0
        for block in blocks:
            for i in range(block.rows):
                for j in range(block.cols):
                    grid[r0 + i][c0 + j] = block[i, j]
            r0 += block.rows
            c0 += block.cols
        return ExactMatrix.from_rows(grid, self.ring) if grid else ExactMatrix.zeros(0, 0, self.ring)

    def to_dict(self) -> Dict[str, Any]:
        """Convertit la matrice en dictionnaire JSON (coefficients en chaînes)"""
        return {
            'ring': str(self.ring),
            'entries': [[self.ring.to_text(v) for v in row] for row in self.to_rows()],
        }


@dataclass(frozen=True)
class SnfResult:
    """Témoin de forme normale de Smith: U·A·V = D"""
    U: ExactMatrix
    D: ExactMatrix
    V: ExactMatrix

    @property
    def invariant_factors(self) -> List[int]:
        """Coefficients diagonaux d_1 | d_2 | ... (zéros compris)"""
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d != 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'U': self.U.to_dict(),
            'D': self.D.to_dict(),
            'V': self.V.to_dict(),
            'invariant_factors': [str(d) for d in self.invariant_factors],
        }
