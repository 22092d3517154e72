import random
from fractions import Fraction

import pytest

from kcalc.exceptions import InvalidParameterError, NotSymmetricError
from kcalc.ktheory.models.symmetric import RootExpansion, SymPoly


def test_newton_second_power_sum(symfun):
    # p_2 = σ_1^2 - 2σ_2
    assert symfun.newton_power_sum(2).terms == {(2,): Fraction(1), (0, 1): Fraction(-2)}


def test_newton_third_power_sum(symfun):
    # p_3 = σ_1^3 - 3σ_1σ_2 + 3σ_3
    expected = {(3,): Fraction(1), (1, 1): Fraction(-3), (0, 0, 1): Fraction(3)}
    assert symfun.newton_power_sum(3).terms == expected


@pytest.mark.parametrize('k', range(1, 9))
def test_newton_matches_brute_force(symfun, k):
    m = 8 if k <= 5 else 4
    expanded = symfun.expand_in_roots(symfun.newton_power_sum(k), m, degree=k)
    assert expanded == symfun.power_sum_in_roots(k, m, degree=k)


def test_newton_rejects_non_positive_order(symfun):
    with pytest.raises(InvalidParameterError):
        symfun.newton_power_sum(0)


def test_elementary_substitution_vanishes_beyond_root_count(symfun):
    # e_3 -> 0 avec deux racines
    expanded = symfun.expand_in_roots(SymPoly({(0, 0, 1): Fraction(1)}), 2, degree=4)
    assert expanded.is_zero()


def test_symmetrization_round_trip(symfun):
    f = SymPoly({(2, 1): Fraction(3), (0, 0, 1): Fraction(-1, 2)})
    expanded = symfun.expand_in_roots(f, 3, degree=6)
    assert symfun.symmetrize_to_elementary(expanded).terms == f.terms


def test_symmetrization_detects_asymmetry(symfun):
    p = RootExpansion(2, 3, {(2, 0): Fraction(1)})
    with pytest.raises(NotSymmetricError) as excinfo:
        symfun.symmetrize_to_elementary(p)
    assert excinfo.value.transposition == (1, 2)


def test_sympoly_strips_trailing_zero_exponents():
    assert SymPoly({(1, 0, 0): 2}).terms == {(1,): Fraction(2)}
    assert SymPoly({(1, 2): 1}).degree == 5


def random_sympoly(rng, m, max_degree=8):
    terms = {}
    size = rng.randint(1, 4)
    while len(terms) < size:
        exps = [0] * m
        budget = rng.randint(1, max_degree)
        while budget:
            i = rng.randrange(min(m, budget))
            exps[i] += 1
            budget -= i + 1
        terms[tuple(exps)] = Fraction(rng.choice([-5, -3, -1, 1, 2, 4]), rng.randint(1, 3))
    return SymPoly(terms)


def test_symmetrization_round_trip_on_random_polynomials(symfun):
    rng = random.Random(8)
    for _ in range(15):
        m = rng.randint(1, 8)
        f = random_sympoly(rng, m)
        expanded = symfun.expand_in_roots(f, m, degree=8)
        assert symfun.symmetrize_to_elementary(expanded).terms == f.terms
