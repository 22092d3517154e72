"""
Modèles de données de kcalc
Valeurs exactes, fibrés virtuels, symboles et rapports
"""

from kcalc.ktheory.models.exact_matrix import ExactMatrix, RingTag, SnfResult
from kcalc.ktheory.models.abelian_group import AbelianGroup, GroupElement, MonoidPresentation
from kcalc.ktheory.models.symmetric import RootExpansion, SymPoly
from kcalc.ktheory.models.bundle import GradedClass, LineMonomial, SphereKElement, VirtualSplitBundle
from kcalc.ktheory.models.symbol import (
    IndexReport,
    LaurentSymbol,
    MatrixSymbol,
    StructuredOperator,
    ToeplitzTruncation,
    WindingResult,
)
from kcalc.ktheory.models.clutching import ClutchingClass, CocycleData, CocycleReport
from kcalc.ktheory.models.tables import HopfReport, KQuery, KTableAnswer
from kcalc.ktheory.models.transvection import (
    FactorizationResult,
    K1Result,
    SteinbergReport,
    Transvection,
    WhiteheadResult,
)
from kcalc.ktheory.models.run_report import CommandRequest, PropertyCheck, RunReport

__all__ = [
    'ExactMatrix',
    'RingTag',
    'SnfResult',
    'AbelianGroup',
    'GroupElement',
    'MonoidPresentation',
    'RootExpansion',
    'SymPoly',
    'GradedClass',
    'LineMonomial',
    'SphereKElement',
    'VirtualSplitBundle',
    'IndexReport',
    'LaurentSymbol',
    'MatrixSymbol',
    'StructuredOperator',
    'ToeplitzTruncation',
    'WindingResult',
    'ClutchingClass',
    'CocycleData',
    'CocycleReport',
    'HopfReport',
    'KQuery',
    'KTableAnswer',
    'FactorizationResult',
    'K1Result',
    'SteinbergReport',
    'Transvection',
    'WhiteheadResult',
    'CommandRequest',
    'PropertyCheck',
    'RunReport',
]
