"""
Fixtures partagées des tests kcalc
"""
import json

import pytest

from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.services.bundle_operations_service import BundleOperationsService
from kcalc.ktheory.services.characteristic_class_service import CharacteristicClassService
from kcalc.ktheory.services.clutching_service import ClutchingService
from kcalc.ktheory.services.exact_linalg_service import ExactLinalgService
from kcalc.ktheory.services.grothendieck_service import GrothendieckService
from kcalc.ktheory.services.hopf_service import HopfService
from kcalc.ktheory.services.ktable_service import KTableService
from kcalc.ktheory.services.symmetric_function_service import SymmetricFunctionService
from kcalc.ktheory.services.toeplitz_service import ToeplitzService
from kcalc.ktheory.services.whitehead_service import WhiteheadService


@pytest.fixture
def numerics_config():
    return NumericsConfig()


@pytest.fixture
def linalg():
    return ExactLinalgService()


@pytest.fixture
def grothendieck(linalg):
    return GrothendieckService(linalg)


@pytest.fixture
def symfun(numerics_config):
    return SymmetricFunctionService(numerics_config)


@pytest.fixture
def bundles():
    return BundleOperationsService()


@pytest.fixture
def classes(numerics_config, symfun, bundles):
    return CharacteristicClassService(numerics_config, symfun, bundles)


@pytest.fixture
def toeplitz(numerics_config, linalg):
    return ToeplitzService(numerics_config, linalg)


@pytest.fixture
def clutching(numerics_config, toeplitz):
    return ClutchingService(numerics_config, toeplitz)


@pytest.fixture
def ktables():
    return KTableService()


@pytest.fixture
def hopf():
    return HopfService()


@pytest.fixture
def whitehead(linalg):
    return WhiteheadService(linalg)


@pytest.fixture
def write_json(tmp_path):
    """Écrit un document JSON dans tmp_path et retourne son chemin"""
    def _write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding='utf-8')
        return str(path)
    return _write
