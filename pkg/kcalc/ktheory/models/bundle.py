"""
Modèles de fibrés scindés formels (principe de scindage)
LineMonomial, VirtualSplitBundle, GradedClass et SphereKElement
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from kcalc.exceptions import DimensionMismatchError, InvalidParameterError
from kcalc.ktheory.models.symmetric import Exponents, RootExpansion


@dataclass(frozen=True, order=True)
class LineMonomial:
    """L_1^{a_1} ⊗ ... ⊗ L_k^{a_k} (exposants négatifs = duaux)"""
    exps: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'exps', tuple(int(a) for a in self.exps))

    @classmethod
    def trivial(cls, base_lines: int) -> 'LineMonomial':
        return cls((0,) * base_lines)

    def padded(self, base_lines: int) -> 'LineMonomial':
        if len(self.exps) > base_lines:
            raise DimensionMismatchError(
                "Monôme sur trop de fibrés de base",
                expected=base_lines,
                actual=len(self.exps)
            )
        return LineMonomial(self.exps + (0,) * (base_lines - len(self.exps)))

    def tensor(self, other: 'LineMonomial') -> 'LineMonomial':
        width = max(len(self.exps), len(other.exps))
        a, b = self.padded(width), other.padded(width)
        return LineMonomial(tuple(x + y for x, y in zip(a.exps, b.exps)))

    def power(self, k: int) -> 'LineMonomial':
        return LineMonomial(tuple(k * a for a in self.exps))

    @property
    def is_trivial(self) -> bool:
        return not any(self.exps)


@dataclass(frozen=True)
class VirtualSplitBundle:
    """
    Somme formelle Σ m_i·L_i de fibrés en droites, m_i entiers non nuls

    Forme canonique: termes fusionnés, multiplicités nulles supprimées,
    monômes triés. Deux fibrés virtuels égaux ont donc la même
    représentation.
    """
    base_lines: int
    terms: Tuple[Tuple[int, LineMonomial], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.base_lines < 0:
            raise InvalidParameterError("Nombre de fibrés de base négatif", parameter='base_lines')
        merged: Dict[LineMonomial, int] = {}
        for mult, line in self.terms:
            if not isinstance(line, LineMonomial):
                line = LineMonomial(tuple(line))
            line = line.padded(self.base_lines)
            merged[line] = merged.get(line, 0) + int(mult)
        canonical = tuple(sorted(((m, line) for line, m in merged.items() if m != 0), key=lambda t: t[1]))
        object.__setattr__(self, 'terms', canonical)

    @classmethod
    def zero(cls, base_lines: int) -> 'VirtualSplitBundle':
        return cls(base_lines, ())

    @classmethod
    def trivial(cls, rank: int, base_lines: int) -> 'VirtualSplitBundle':
        """Fibré trivial C^rank (rang négatif admis pour les classes virtuelles)"""
        return cls(base_lines, ((rank, LineMonomial.trivial(base_lines)),))

    @classmethod
    def line(cls, exps: Sequence[int], mult: int = 1) -> 'VirtualSplitBundle':
        return cls(len(exps), ((mult, LineMonomial(tuple(exps))),))

    @classmethod
    def from_multiset(cls, base_lines: int, items: Iterable[Tuple[int, Sequence[int]]]) -> 'VirtualSplitBundle':
        return cls(base_lines, tuple((m, LineMonomial(tuple(e))) for m, e in items))

    def padded(self, base_lines: int) -> 'VirtualSplitBundle':
        if base_lines == self.base_lines:
            return self
        return VirtualSplitBundle(base_lines, self.terms)

    @property
    def dim(self) -> int:
        return sum(m for m, _ in self.terms)

    @property
    def is_effective(self) -> bool:
        return all(m > 0 for m, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def positive_part(self) -> 'VirtualSplitBundle':
        return VirtualSplitBundle(self.base_lines, tuple((m, l) for m, l in self.terms if m > 0))

    def negative_part(self) -> 'VirtualSplitBundle':
        """Partie Q de V = P - Q, avec multiplicités positives"""
        return VirtualSplitBundle(self.base_lines, tuple((-m, l) for m, l in self.terms if m < 0))

    def roots(self) -> List[Tuple[int, Tuple[int, ...]]]:
        """(multiplicité, racine de Chern) où la racine est exps·(x_1..x_k)"""
        return [(m, line.exps) for m, line in self.terms]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'base_lines': self.base_lines,
            'terms': [{'mult': m, 'exps': list(line.exps)} for m, line in self.terms],
            'dim': self.dim,
        }


@dataclass
class GradedClass:
    """Classe de cohomologie rationnelle tronquée au degré N, en x_1..x_k"""
    variables: int
    truncation: int
    terms: Dict[Exponents, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = RootExpansion(max(self.variables, 1), self.truncation, self.terms).terms

    def component(self, degree: int) -> RootExpansion:
        return RootExpansion(max(self.variables, 1), self.truncation, self.terms).homogeneous(degree)

    @property
    def components(self) -> List[RootExpansion]:
        """Composantes homogènes de degré 0..N"""
        return [self.component(d) for d in range(self.truncation + 1)]

    @property
    def rank_part(self) -> Fraction:
        """Composante de degré 0"""
        return self.terms.get((0,) * max(self.variables, 1), Fraction(0))

    def integral_component(self, degree: int) -> Dict[Exponents, int]:
        """d!·(composante de degré d), coefficients entiers attendus"""
        scale = factorial(degree)
        out = {}
        for exps, coeff in self.component(degree).terms.items():
            value = coeff * scale
            if value.denominator != 1:
                raise InvalidParameterError(f"Coefficient non entier après d!: {value}", parameter='degree')
            out[exps] = int(value)
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            'variables': self.variables,
            'truncation': self.truncation,
            'components': [
                {'degree': d, 'terms': comp.to_dict()}
                for d, comp in enumerate(self.components)
            ],
        }


@dataclass(frozen=True)
class SphereKElement:
    """Élément a·1 + b·u de K(S^{2n}), avec u² = 0"""
    n: int
    a: int = 0
    b: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameterError(f"Demi-dimension négative: {self.n}", parameter='n')

    @classmethod
    def one(cls, n: int) -> 'SphereKElement':
        return cls(n, 1, 0)

    @classmethod
    def generator(cls, n: int) -> 'SphereKElement':
        """Générateur réduit u (pour n = 1: h = [J] - 1)"""
        return cls(n, 0, 1)

    def __add__(self, other: 'SphereKElement') -> 'SphereKElement':
        if self.n != other.n:
            raise DimensionMismatchError("Sphères différentes", expected=self.n, actual=other.n)
        return SphereKElement(self.n, self.a + other.a, self.b + other.b)

    def hopf_form(self) -> Tuple[int, int]:
        """Pour n = 1: a + b·h = b·[J] + (a - b), retourne (b, a - b)"""
        if self.n != 1:
            raise InvalidParameterError("Forme [J] définie seulement sur S^2", parameter='n')
        return self.b, self.a - self.b

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'a': self.a, 'b': self.b}
