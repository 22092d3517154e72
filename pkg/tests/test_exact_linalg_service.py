import random
from fractions import Fraction

import pytest

from kcalc.exceptions import DimensionMismatchError, InvalidParameterError, SingularMatrixError
from kcalc.ktheory.models.exact_matrix import ExactMatrix, RingTag


def test_snf_diagonal_two_four(linalg):
    a = ExactMatrix.from_rows([[2, 4], [6, 8]])
    snf = linalg.smith_normal_form(a)
    assert snf.invariant_factors == [2, 4]
    assert snf.U @ a @ snf.V == snf.D


def test_snf_enforces_divisibility_chain(linalg):
    a = ExactMatrix.diagonal([2, 3])
    snf = linalg.smith_normal_form(a)
    assert snf.invariant_factors == [1, 6]
    assert linalg.has_divisibility_chain(snf)
    assert linalg.is_unimodular(snf.U) and linalg.is_unimodular(snf.V)


def test_snf_zero_and_rectangular(linalg):
    zero = ExactMatrix.zeros(2, 3)
    assert linalg.smith_normal_form(zero).rank == 0

    a = ExactMatrix.from_rows([[1, 1, 1]])
    snf = linalg.smith_normal_form(a)
    assert snf.invariant_factors == [1]
    assert snf.U @ a @ snf.V == snf.D


def test_snf_witness_on_random_matrices(linalg):
    rng = random.Random(7)
    for _ in range(500):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        a = ExactMatrix.from_rows([[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)])
        snf = linalg.smith_normal_form(a)
        assert snf.U @ a @ snf.V == snf.D
        assert linalg.is_unimodular(snf.U)
        assert linalg.is_unimodular(snf.V)
        assert linalg.has_divisibility_chain(snf)


def test_snf_is_deterministic_and_matches_rational_rank(linalg):
    rng = random.Random(11)
    for _ in range(100):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
        if rng.random() < 0.3:
            rows[-1] = [2 * x for x in rows[0]]
        a = ExactMatrix.from_rows(rows)
        first, second = linalg.smith_normal_form(a), linalg.smith_normal_form(a)
        assert first == second
        assert linalg.rank(a.with_ring('Q')) == first.rank


def test_bezout_coefficients_from_installed_sympy():
    from kcalc.ktheory.services import exact_linalg_service

    s, t, g = exact_linalg_service.igcdex(4, 6)
    assert g == 2
    assert 4 * s + 6 * t == 2


def test_snf_rejects_field_matrix(linalg):
    with pytest.raises(InvalidParameterError):
        linalg.smith_normal_form(ExactMatrix.identity(2, 'Q'))


def test_rank_and_kernel_over_q(linalg):
    a = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6]], 'Q')
    rank, kernel = linalg.field_rank_kernel(a)
    assert rank == 1
    assert len(kernel) == 2
    for vector in kernel:
        assert all(sum(a[i, j] * vector[j] for j in range(3)) == 0 for i in range(2))


def test_rank_over_finite_field(linalg):
    a = ExactMatrix.from_rows([[1, 2], [3, 1]], 'Fp:5')
    # det = 1 - 6 = -5 = 0 mod 5
    assert linalg.rank(a) == 1
    assert linalg.rank(a.with_ring('Q')) == 2


def test_determinant_and_inverse(linalg):
    a = ExactMatrix.from_rows([[2, 1], [1, 1]], 'Q')
    assert linalg.determinant(a) == 1
    assert a @ linalg.inverse(a) == ExactMatrix.identity(2, 'Q')
    assert linalg.determinant(ExactMatrix.from_rows([[2, 1], [4, 2]])) == 0


def test_inverse_of_singular_matrix(linalg):
    with pytest.raises(SingularMatrixError):
        linalg.inverse(ExactMatrix.from_rows([[1, 2], [2, 4]], 'Q'))


def test_determinant_requires_square(linalg):
    with pytest.raises(DimensionMismatchError):
        linalg.determinant(ExactMatrix.zeros(2, 3))


def test_ring_parsing_and_normalisation():
    assert RingTag.parse('Fp:7').normalize(Fraction(1, 2)) == 4
    assert RingTag.parse('Q').normalize('0.25') == Fraction(1, 4)
    with pytest.raises(InvalidParameterError):
        RingTag.parse('Fp:6')
    with pytest.raises(InvalidParameterError):
        RingTag('Z').normalize('1/2')
    with pytest.raises(InvalidParameterError):
        RingTag('Q').normalize(0.5)


def test_ragged_rows_are_rejected():
    with pytest.raises(DimensionMismatchError):
        ExactMatrix.from_rows([[1, 2], [3]])
