import pytest

from kcalc.exceptions import InvalidParameterError
from kcalc.ktheory.models.abelian_group import AbelianGroup
from kcalc.ktheory.models.tables import UNSPECIFIED_MARKER, KQuery
from kcalc.ktheory.services.ktable_service import prime_power


@pytest.mark.parametrize('n, q, expected', [
    (0, 4, 'Z'),
    (1, 7, 'Z/6'),
    (2, 4, '0'),
    (3, 4, 'Z/15'),
    (5, 2, 'Z/7'),
])
def test_finite_field_examples(ktables, n, q, expected):
    assert str(ktables.k_finite_field(n, q)) == expected


@pytest.mark.parametrize('q', [2, 3, 4, 5, 7, 8, 9])
def test_finite_field_orders(ktables, q):
    for n in range(1, 21):
        assert ktables.k_finite_field(2 * n - 1, q).order == q ** n - 1


def test_finite_field_requires_prime_power(ktables):
    with pytest.raises(InvalidParameterError):
        ktables.k_finite_field(1, 6)
    assert prime_power(27) == (3, 3)


def test_reduced_k_of_spheres(ktables):
    for n in range(5):
        assert ktables.k_sphere(0, 2 * n) == AbelianGroup(1)
        assert ktables.k_sphere(1, 2 * n + 1) == AbelianGroup(1)
        assert ktables.k_sphere(0, 2 * n + 1).is_trivial
        assert ktables.k_sphere(1, 2 * n).is_trivial
    with pytest.raises(InvalidParameterError):
        ktables.k_sphere(2, 4)


def test_rank_of_k_groups_of_integers(ktables):
    assert [ktables.k_integers_rank(n) for n in range(10)] == [1, 0, 0, 0, 0, 1, 0, 0, 0, 1]


def test_bott_periodicity(ktables):
    assert [ktables.reduce_degree(n) for n in (-3, -2, 0, 5)] == [1, 0, 0, 1]


def test_stable_homotopy(ktables):
    assert str(ktables.stable_homotopy('U', 1)) == 'Z'
    assert ktables.stable_homotopy('U', 2).is_trivial
    assert str(ktables.stable_homotopy('SO', 1)) == 'Z/2'
    assert str(ktables.stable_homotopy('SO', 3)) == 'Z'
    assert ktables.stable_homotopy('SO', 8) is None


def test_query_dispatch(ktables):
    assert ktables.query(KQuery('finite_field', n=3, q=4)).text == 'Z/15'
    assert ktables.query(KQuery('sphere', i=0, m=4)).text == 'Z'
    assert ktables.query(KQuery('integers_rank', n=5)).value == 1
    answer = ktables.query(KQuery('stable_orthogonal', i=0))
    assert answer.marker == UNSPECIFIED_MARKER
    assert answer.to_dict()['answer'] == UNSPECIFIED_MARKER


def test_query_errors(ktables):
    with pytest.raises(InvalidParameterError):
        ktables.query(KQuery('projective_space', n=1))
    with pytest.raises(InvalidParameterError) as excinfo:
        ktables.query(KQuery('finite_field', n=3))
    assert excinfo.value.parameter == 'q'
