"""
Services de calcul de kcalc
"""
from kcalc.ktheory.services.exact_linalg_service import ExactLinalgService
from kcalc.ktheory.services.grothendieck_service import GrothendieckService
from kcalc.ktheory.services.symmetric_function_service import SymmetricFunctionService
from kcalc.ktheory.services.bundle_operations_service import BundleOperationsService
from kcalc.ktheory.services.characteristic_class_service import CharacteristicClassService
from kcalc.ktheory.services.winding_service import ArgumentPrincipleWinding, RootCountWinding
from kcalc.ktheory.services.toeplitz_service import ToeplitzService
from kcalc.ktheory.services.clutching_service import ClutchingService
from kcalc.ktheory.services.ktable_service import KTableService
from kcalc.ktheory.services.hopf_service import HopfService
from kcalc.ktheory.services.whitehead_service import WhiteheadService
from kcalc.ktheory.services.input_service import InputFileService

__all__ = [
    'ExactLinalgService',
    'GrothendieckService',
    'SymmetricFunctionService',
    'BundleOperationsService',
    'CharacteristicClassService',
    'ArgumentPrincipleWinding',
    'RootCountWinding',
    'ToeplitzService',
    'ClutchingService',
    'KTableService',
    'HopfService',
    'WhiteheadService',
    'InputFileService',
]
