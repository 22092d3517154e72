import numpy as np
import pytest

from kcalc.exceptions import InvalidParameterError, NotInvertibleOnCircleError, RootOnCircleError
from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.models.exact_matrix import ExactMatrix
from kcalc.ktheory.models.symbol import LaurentSymbol, MatrixSymbol, StructuredOperator
from kcalc.ktheory.services.winding_service import (
    ArgumentPrincipleWinding,
    RootCountWinding,
    min_modulus,
    required_samples,
)


def symbol(mapping):
    return LaurentSymbol.from_mapping(mapping)


def random_symbol(rng, p=3, q=3):
    """Symbole de module minimal >= 0.1 sur le cercle"""
    while True:
        low = -int(rng.integers(0, p + 1))
        high = int(rng.integers(0, q + 1))
        coeffs = rng.normal(size=high - low + 1) + 1j * rng.normal(size=high - low + 1)
        f = LaurentSymbol(low, tuple(coeffs))
        if min_modulus(f, 4096) >= 0.1:
            return f


def test_shift_has_index_minus_one(toeplitz):
    report = toeplitz.index_report(symbol({1: 1.0}))
    assert report.index == -1
    assert report.winding == 1
    assert report.residual < 1e-6


@pytest.mark.parametrize('mapping, winding', [
    ({-1: 1.0}, -1),
    ({0: 3.0}, 0),
    ({0: 2.0, 1: 1.0}, 0),
    ({0: 1.0, 1: 2.0}, 1),
    ({-2: 1.0, 0: 0.1}, -2),
    ({3: 1.0, -1: 0.2j}, 3),
])
def test_winding_examples(toeplitz, mapping, winding):
    assert toeplitz.winding(symbol(mapping)) == winding
    assert toeplitz.toeplitz_index(symbol(mapping)) == -winding


def test_both_algorithms_agree_on_random_symbols(numerics_config):
    rng = np.random.default_rng(0)
    argument = ArgumentPrincipleWinding(numerics_config)
    roots = RootCountWinding(numerics_config)
    for _ in range(40):
        f = random_symbol(rng)
        result = argument.compute(f)
        assert result.value == roots.compute(f).value
        assert result.residual < 1e-6
        assert result.samples <= 2 ** 14


def test_winding_is_additive(toeplitz):
    rng = np.random.default_rng(1)
    for _ in range(15):
        f, g = random_symbol(rng, 2, 2), random_symbol(rng, 2, 2)
        if min_modulus(f * g, 4096) < 0.01:
            continue
        assert toeplitz.winding(f * g) == toeplitz.winding(f) + toeplitz.winding(g)


def test_symbol_vanishing_on_circle_is_rejected(toeplitz):
    with pytest.raises(NotInvertibleOnCircleError):
        toeplitz.index_report(symbol({0: 1.0, 1: 1.0}))
    with pytest.raises(NotInvertibleOnCircleError):
        toeplitz.index_report(LaurentSymbol())


def test_root_close_to_circle_is_rejected():
    # racine à 1e-7 du cercle, entre deux points d'échantillonnage
    config = NumericsConfig(modulus_gate=1e-12)
    root = (1 + 1e-7) * np.exp(1j * np.pi / 3 + 1e-5j)
    with pytest.raises(RootOnCircleError):
        RootCountWinding(config).compute(symbol({0: -root, 1: 1.0}))


def test_min_modulus_requires_enough_samples():
    f = symbol({-3: 1.0, 3: 1.0})
    assert required_samples(f) == 28
    with pytest.raises(InvalidParameterError):
        min_modulus(f, 16)


def test_truncation_is_toeplitz(toeplitz):
    section = toeplitz.truncate(symbol({1: 1.0, -1: 2.0, 0: 5.0}), 4)
    assert section.is_toeplitz()
    assert section.matrix[1, 0] == 1.0
    assert section.matrix[0, 1] == 2.0
    assert section.matrix[2, 2] == 5.0
    with pytest.raises(InvalidParameterError):
        toeplitz.truncate(symbol({0: 1.0}), 0)


def test_matrix_symbol_index(toeplitz):
    z = symbol({1: 1.0})
    assert toeplitz.matrix_symbol_index(MatrixSymbol.diagonal([z, z])) == -2
    # Stabilisation diag(f, 1): même indice
    f = MatrixSymbol.diagonal([symbol({-1: 1.0})])
    assert toeplitz.matrix_symbol_index(f.stabilized()) == toeplitz.matrix_symbol_index(f) == 1


def test_matrix_symbol_index_is_multiplicative(toeplitz):
    z, one, zero = symbol({1: 1.0}), symbol({0: 1.0}), LaurentSymbol()
    a = MatrixSymbol(((z, one), (zero, one)))
    b = MatrixSymbol(((one, zero), (zero, z)))
    assert toeplitz.matrix_symbol_index(a @ b) == toeplitz.matrix_symbol_index(a) + toeplitz.matrix_symbol_index(b)


@pytest.mark.parametrize('m', range(-5, 6))
def test_structured_index_ignores_finite_rank_perturbation(toeplitz, m):
    rng = np.random.default_rng(m + 10)
    for _ in range(3):
        K = int(rng.integers(1, 4))
        F = ExactMatrix.from_rows([[int(v) for v in rng.integers(-3, 4, size=K)] for _ in range(K)], 'Q')
        assert toeplitz.structured_index(StructuredOperator(m, F)) == -m


def test_structured_kernel_and_cokernel(toeplitz):
    # I + F avec F = diag(-1): noyau et conoyau de dimension 1
    report = toeplitz.structured_report(StructuredOperator(0, ExactMatrix.from_rows([[-1]], 'Q')))
    assert (report['kernel'], report['cokernel'], report['index']) == (1, 1, 0)

    left_shift = toeplitz.structured_report(StructuredOperator(-1, ExactMatrix.zeros(1, 1, 'Q')))
    assert (left_shift['kernel'], left_shift['cokernel']) == (1, 0)


def test_finite_index_is_cols_minus_rows(toeplitz):
    assert toeplitz.finite_index(ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6]])) == 1
    assert toeplitz.finite_index(ExactMatrix.zeros(4, 2, 'Q')) == -2


def test_index_constant_along_invertible_homotopy(toeplitz):
    # |2 + t·z + 0.8t·z^3| >= 2 - 1.8t > 0 sur le cercle
    for t in np.linspace(0.0, 1.0, 11):
        f = symbol({-2: 2.0, -1: t, 1: 0.8 * t})
        assert min_modulus(f, 4096) > 0.19
        assert toeplitz.toeplitz_index(f) == 2
