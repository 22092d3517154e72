"""
Requêtes de tables de K-groupes et rapport de la recherche de Hopf
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from kcalc.ktheory.models.abelian_group import AbelianGroup

FAMILIES = (
    'sphere',
    'finite_field',
    'integers_rank',
    'stable_unitary',
    'stable_orthogonal',
    'degree_reduce',
)

UNSPECIFIED_MARKER = 'unspecified-in-source'


@dataclass(frozen=True)
class KQuery:
    """Famille de table et paramètres (n, q, i, m selon la famille)"""
    family: str
    n: Optional[int] = None
    q: Optional[int] = None
    i: Optional[int] = None
    m: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {k: v for k, v in (
            ('family', self.family), ('n', self.n), ('q', self.q), ('i', self.i), ('m', self.m)
        ) if v is not None}


@dataclass
class KTableAnswer:
    """Réponse: un groupe, un entier (rang, degré réduit) ou un marqueur"""
    query: KQuery
    group: Optional[AbelianGroup] = None
    value: Optional[int] = None
    marker: Optional[str] = None

    @property
    def text(self) -> str:
        if self.marker:
            return self.marker
        if self.group is not None:
            return str(self.group)
        return str(self.value)

    def to_dict(self) -> Dict[str, Any]:
        data = {'query': self.query.to_dict(), 'answer': self.text}
        if self.group is not None:
            data['group'] = self.group.to_dict()
        if self.value is not None:
            data['value'] = self.value
        if self.marker:
            data['marker'] = self.marker
        return data


@dataclass
class HopfReport:
    """Recherche exhaustive des n <= B tels que 2^n divise 3^n - 1"""
    bound: int
    solutions: List[int] = field(default_factory=list)
    v2_table: List[Tuple[int, int]] = field(default_factory=list)
    closed_form_agrees: bool = True
    first_disagreement: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'bound': self.bound,
            'solutions': self.solutions,
            'v2_table': [{'n': n, 'v2': v} for n, v in self.v2_table],
            'closed_form_agrees': self.closed_form_agrees,
            'first_disagreement': self.first_disagreement,
        }
