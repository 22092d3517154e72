import numpy as np
import pytest

from kcalc.exceptions import InconsistentSamplingError, InvalidParameterError
from kcalc.ktheory.models.clutching import ClutchingClass, CocycleData
from kcalc.ktheory.models.symbol import LaurentSymbol, MatrixSymbol


TOL = 1e-9


def monomial(power):
    return LaurentSymbol.monomial(power)


@pytest.mark.parametrize('degree', range(-3, 4))
def test_honest_atlas_satisfies_cocycle(clutching, degree):
    report = clutching.validate_cocycle(clutching.honest_line_atlas(degree, seed=degree + 3), TOL)
    assert report.passed
    assert report.checked_triples == 6
    assert report.max_deviation < 1e-9


def test_corrupted_transition_is_reported(clutching):
    data = clutching.honest_line_atlas(1)
    t = sorted(data.samples[('N', 'S')])[3]
    data.samples[('N', 'S')][t] = data.samples[('N', 'S')][t] * 1.01
    report = clutching.validate_cocycle(data, TOL)
    assert not report.passed
    assert report.max_deviation > 1e-3
    assert report.worst_parameter == t
    assert 'N' in report.worst_triple and 'S' in report.worst_triple
    assert report.violations


def test_tolerance_can_absorb_small_errors(clutching):
    data = clutching.honest_line_atlas(2)
    t = sorted(data.samples[('E', 'N')])[0]
    data.samples[('E', 'N')][t] = data.samples[('E', 'N')][t] * (1 + 1e-7)
    assert not clutching.validate_cocycle(data, TOL).passed
    assert clutching.validate_cocycle(data, tolerance=1e-3).passed


def test_triple_overlap_without_common_samples(clutching):
    one = np.eye(1, dtype=complex)
    data = CocycleData(
        charts=['A', 'B', 'C'],
        samples={
            ('B', 'A'): {0.0: one},
            ('C', 'B'): {1.0: one},
            ('C', 'A'): {0.0: one},
        }
    )
    with pytest.raises(InconsistentSamplingError) as excinfo:
        clutching.validate_cocycle(data, TOL)
    assert excinfo.value.extra['triple'] == ('A', 'B', 'C')


def test_identity_transition_must_be_identity(clutching):
    data = CocycleData(charts=['A'], samples={('A', 'A'): {0.0: 2 * np.eye(2, dtype=complex)}})
    report = clutching.validate_cocycle(data, TOL)
    assert not report.passed
    assert report.violations[0]['kind'] == 'identity'


def test_negative_tolerance(clutching):
    with pytest.raises(InvalidParameterError):
        clutching.validate_cocycle(CocycleData(charts=[]), tolerance=-1.0)


def test_line_bundles_over_the_sphere(clutching):
    assert clutching.classify_over_s2(MatrixSymbol.diagonal([monomial(2)])) == ClutchingClass(1, 2)
    assert clutching.classify_over_s2(MatrixSymbol.diagonal([monomial(1), monomial(-1)])) == ClutchingClass(2, 0)
    assert clutching.classify_over_s2(MatrixSymbol.identity(3)) == ClutchingClass(3, 0)


def test_degree_is_additive_under_stabilisation(clutching):
    f = MatrixSymbol.diagonal([monomial(1), monomial(1)])
    assert clutching.classify_over_s2(f).degree == clutching.classify_over_s2(f.stabilized()).degree == 2


def test_tolerance_is_an_explicit_argument(clutching):
    with pytest.raises(TypeError):
        clutching.validate_cocycle(clutching.honest_line_atlas(1))


def test_class_survives_degree_zero_gauge_change(clutching):
    z = monomial(1)
    zero = LaurentSymbol()
    one = LaurentSymbol.constant(1.0)
    f = MatrixSymbol(((z * z, one), (zero, monomial(-1))))
    shear = MatrixSymbol(((one, z), (zero, one)))
    shear_inv = MatrixSymbol(((one, z.scaled(-1.0)), (zero, one)))
    twist = MatrixSymbol.diagonal([z, monomial(-1)])
    twist_inv = MatrixSymbol.diagonal([monomial(-1), z])
    g, g_inv = shear @ twist, twist_inv @ shear_inv

    base = clutching.classify_over_s2(f)
    assert base == ClutchingClass(2, 1)
    assert clutching.classify_over_s2(g).degree == 0
    assert clutching.classify_over_s2(f @ g) == base
    assert clutching.classify_over_s2(f @ g @ g_inv) == base
