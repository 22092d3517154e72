import random
from fractions import Fraction

import pytest

from kcalc.exceptions import DimensionMismatchError, InvalidParameterError, SingularMatrixError
from kcalc.ktheory.models.exact_matrix import ExactMatrix, RingTag
from kcalc.ktheory.models.transvection import Transvection
from kcalc.ktheory.services.exact_linalg_service import ExactLinalgService


def random_invertible(rng, n, ring):
    linalg = ExactLinalgService()
    while True:
        matrix = ExactMatrix.from_rows([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)], ring)
        if linalg.determinant(matrix) != 0:
            return matrix


def test_rotation_by_a_quarter_turn(whitehead):
    a = ExactMatrix.from_rows([[0, 1], [-1, 0]], 'Q')
    result = whitehead.transvection_factorize(a)
    assert result.residue == 1
    assert [f.to_dict(a.ring) for f in result.factors] == [
        {'i': 1, 'j': 2, 'a': '1'},
        {'i': 2, 'j': 1, 'a': '-1'},
        {'i': 1, 'j': 2, 'a': '1'},
    ]
    assert whitehead.reassemble(result, 2) == a


def test_single_transvection(whitehead):
    a = ExactMatrix.from_rows([[1, 5], [0, 1]], 'Q')
    result = whitehead.transvection_factorize(a)
    assert result.factors == [Transvection(0, 1, 5)]


def test_diagonal_residue_is_the_determinant(whitehead, linalg):
    a = ExactMatrix.from_rows([[2, 0], [0, 3]], 'Q')
    result = whitehead.transvection_factorize(a)
    assert result.residue == 6
    assert result.diagonal == ExactMatrix.diagonal([6, 1], 'Q')
    assert whitehead.reassemble(result, 2) == a


def test_integer_matrix_is_read_over_q(whitehead):
    result = whitehead.transvection_factorize(ExactMatrix.from_rows([[2, 1], [1, 1]]))
    assert result.diagonal.ring == RingTag('Q')
    assert result.residue == 1


@pytest.mark.parametrize('ring', ['Q', 'Fp:7'])
def test_random_factorizations_reassemble(whitehead, linalg, ring):
    rng = random.Random(ring)
    for _ in range(25):
        n = rng.randint(1, 4)
        a = random_invertible(rng, n, ring)
        result = whitehead.transvection_factorize(a)
        assert whitehead.reassemble(result, n) == a
        assert result.residue == linalg.determinant(a)


def test_singular_and_malformed_inputs(whitehead):
    with pytest.raises(SingularMatrixError):
        whitehead.transvection_factorize(ExactMatrix.from_rows([[1, 2], [2, 4]], 'Q'))
    with pytest.raises(SingularMatrixError):
        whitehead.transvection_factorize(ExactMatrix.from_rows([[1, 1], [1, 1]], 'Fp:2'))
    with pytest.raises(DimensionMismatchError):
        whitehead.transvection_factorize(ExactMatrix.zeros(2, 3, 'Q'))
    with pytest.raises(InvalidParameterError):
        whitehead.transvection_factorize(ExactMatrix.zeros(0, 0, 'Q'))


def test_transvection_needs_distinct_indices():
    with pytest.raises(InvalidParameterError):
        Transvection(1, 1, 3)


def test_whitehead_identity_on_random_pairs(whitehead):
    rng = random.Random(4)
    for _ in range(20):
        a, b = random_invertible(rng, 2, 'Q'), random_invertible(rng, 2, 'Q')
        assert whitehead.whitehead_identity(a, b).holds


def test_whitehead_identity_for_commuting_blocks(whitehead):
    a = ExactMatrix.from_rows([[1, 1], [0, 1]], 'Q')
    result = whitehead.whitehead_identity(a, a @ a)
    assert result.holds
    assert result.product == ExactMatrix.identity(6, 'Q')


def test_commutator_lies_in_elementary_subgroup(whitehead):
    a = ExactMatrix.from_rows([[2, 1], [1, 1]], 'Q')
    b = ExactMatrix.from_rows([[Fraction(1, 2), 0], [3, 2]], 'Q')
    results = whitehead.factorize_commutator(a, b)
    assert len(results) == 4
    assert all(r.residue == 1 for r in results)


@pytest.mark.parametrize('ring, n', [('Z', 3), ('Z', 4), ('Q', 3), ('Fp:5', 4)])
def test_steinberg_relations_hold(whitehead, ring, n):
    report = whitehead.steinberg_check(n, 20, RingTag.parse(ring), seed=1)
    assert report.passed
    assert report.checked > 0
    assert report.to_dict()['violations'] == []


def test_steinberg_is_reproducible(whitehead):
    first = whitehead.steinberg_check(3, 5, RingTag('Z'), seed=9)
    second = whitehead.steinberg_check(3, 5, RingTag('Z'), seed=9)
    assert first.to_dict() == second.to_dict()


def test_steinberg_requires_three_rows(whitehead):
    with pytest.raises(InvalidParameterError):
        whitehead.steinberg_check(2, 10, RingTag('Z'))


@pytest.mark.parametrize('q, generator', [(2, 1), (5, 2), (7, 3), (11, 2), (13, 2)])
def test_k1_of_prime_fields(whitehead, q, generator):
    result = whitehead.k1_finite_field(q)
    assert result.generator == (generator,)
    assert result.group.order == q - 1
    assert result.to_dict()['generator'] == generator


def test_k1_of_field_with_four_elements(whitehead):
    result = whitehead.k1_finite_field(4, [1, 1, 1])
    assert str(result.group) == 'Z/3'
    assert result.to_dict()['generator'] == [1, 0]
    assert result.to_dict()['modulus'] == [1, 1, 1]


def test_k1_of_extension_field_requires_irreducible_modulus(whitehead):
    with pytest.raises(InvalidParameterError):
        whitehead.k1_finite_field(9)
    with pytest.raises(InvalidParameterError):
        whitehead.k1_finite_field(9, [1, 0, 2])
    with pytest.raises(InvalidParameterError):
        whitehead.k1_finite_field(9, [1, 1])
    assert str(whitehead.k1_finite_field(9, [1, 0, 1]).group) == 'Z/8'


def test_k1_rejects_non_prime_powers(whitehead):
    with pytest.raises(InvalidParameterError):
        whitehead.k1_finite_field(6)
