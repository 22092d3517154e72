"""
Modèles pour la complétion de Grothendieck: présentations de monoïdes,
groupes abéliens de type fini et éléments de groupe
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

from kcalc.exceptions import DimensionMismatchError, InvalidParameterError


@dataclass(frozen=True)
class AbelianGroup:
    """Groupe Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_s sous forme de facteurs invariants"""
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion if d != 1)
        if self.free_rank < 0:
            raise InvalidParameterError("Rang libre négatif", parameter='free_rank')
        for d in torsion:
            if d < 2:
                raise InvalidParameterError(f"Facteur invariant invalide: {d}", parameter='torsion')
        for d_i, d_j in zip(torsion, torsion[1:]):
            if d_j % d_i != 0:
                raise InvalidParameterError(f"Chaîne de divisibilité rompue: {d_i} ∤ {d_j}", parameter='torsion')
        object.__setattr__(self, 'torsion', torsion)

    @classmethod
    def cyclic(cls, order: int) -> 'AbelianGroup':
        """Groupe cyclique d'ordre donné (0 signifie Z)"""
        if order == 0:
            return cls(1)
        return cls(0, (abs(order),))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int:
        """Ordre du groupe (0 si infini)"""
        if self.free_rank:
            return 0
        total = 1
        for d in self.torsion:
            total *= d
        return total

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append('Z')
        elif self.free_rank > 1:
            parts.append(f'Z^{self.free_rank}')
        parts.extend(f'Z/{d}' for d in self.torsion)
        return ' (+) '.join(parts) if parts else '0'

    def to_dict(self) -> Dict[str, Any]:
        return {
            'group': str(self),
            'free_rank': self.free_rank,
            'torsion': list(self.torsion),
        }


@dataclass(frozen=True)
class MonoidPresentation:
    """Monoïde commutatif de présentation finie ⟨g générateurs | u = v, ...⟩"""
    generator_count: int
    relations: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.generator_count < 0:
            raise InvalidParameterError("Nombre de générateurs négatif", parameter='generators')
        normalized = []
        for index, (lhs, rhs) in enumerate(self.relations):
            lhs, rhs = tuple(int(v) for v in lhs), tuple(int(v) for v in rhs)
            for side in (lhs, rhs):
                if len(side) != self.generator_count:
                    raise DimensionMismatchError(
                        f"Relation {index}: longueur incohérente",
                        expected=self.generator_count,
                        actual=len(side)
                    )
                if any(v < 0 for v in side):
                    raise InvalidParameterError(f"Relation {index}: exposant négatif", parameter='relations')
            normalized.append((lhs, rhs))
        object.__setattr__(self, 'relations', tuple(normalized))

    def relation_vectors(self) -> List[List[int]]:
        """Vecteurs u - v engendrant le réseau des relations"""
        return [[a - b for a, b in zip(lhs, rhs)] for lhs, rhs in self.relations]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'generators': self.generator_count,
            'relations': [{'lhs': list(lhs), 'rhs': list(rhs)} for lhs, rhs in self.relations],
        }


@dataclass(frozen=True)
class GroupElement:
    """Différence formelle [u] - [v] stockée comme u - v dans Z^g"""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(int(c) for c in self.coefficients))

    @classmethod
    def difference(cls, u: Sequence[int], v: Sequence[int]) -> 'GroupElement':
        if len(u) != len(v):
            raise DimensionMismatchError("Différence formelle de longueurs distinctes", expected=len(u), actual=len(v))
        return cls(tuple(a - b for a, b in zip(u, v)))

    @classmethod
    def zero(cls, generator_count: int) -> 'GroupElement':
        return cls((0,) * generator_count)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __sub__(self, other: 'GroupElement') -> 'GroupElement':
        return GroupElement.difference(self.coefficients, other.coefficients)

    def __add__(self, other: 'GroupElement') -> 'GroupElement':
        if len(self) != len(other):
            raise DimensionMismatchError("Somme de longueurs distinctes", expected=len(self), actual=len(other))
        return GroupElement(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))
