import random
from fractions import Fraction

import pytest

from kcalc.exceptions import InvalidParameterError
from kcalc.ktheory.models.bundle import VirtualSplitBundle


def bundle(base_lines, *items):
    return VirtualSplitBundle.from_multiset(base_lines, items)


def random_bundle(rng, base_lines=2, effective=False):
    signs = [1, 2] if effective else [-2, -1, 1, 2]
    return bundle(base_lines, *[
        (rng.choice(signs), [rng.randint(-2, 2) for _ in range(base_lines)])
        for _ in range(rng.randint(1, 3))
    ])


def test_total_chern_of_two_lines(classes):
    c = classes.total_chern(bundle(2, (1, [1, 0]), (1, [0, 1])), 4)
    assert c.terms == {
        (0, 0): Fraction(1),
        (1, 0): Fraction(1),
        (0, 1): Fraction(1),
        (1, 1): Fraction(1),
    }
    assert [comp.terms for comp in classes.chern_classes(bundle(1, (1, [1])), 2)] == [
        {(0,): Fraction(1)}, {(1,): Fraction(1)}, {}
    ]


def test_total_chern_of_negative_line_is_geometric_series(classes):
    c = classes.total_chern(bundle(1, (-1, [1])), 4)
    assert c.terms == {(d,): Fraction((-1) ** d) for d in range(5)}


def test_chern_character_of_a_line(classes):
    ch = classes.chern_character(bundle(1, (1, [2])), 3)
    assert ch.terms == {(0,): Fraction(1), (1,): Fraction(2), (2,): Fraction(2), (3,): Fraction(4, 3)}
    assert ch.rank_part == 1


def test_chern_character_is_a_ring_homomorphism(classes, bundles):
    rng = random.Random(13)
    for _ in range(15):
        v, w = random_bundle(rng), random_bundle(rng)
        ch_v, ch_w = classes.chern_character(v, 5), classes.chern_character(w, 5)
        assert classes.chern_character(bundles.bundle_sum(v, w), 5).terms == classes.graded_sum(ch_v, ch_w).terms
        assert classes.chern_character(bundles.bundle_tensor(v, w), 5).terms == \
            classes.graded_product(ch_v, ch_w).terms


def test_total_chern_is_multiplicative(classes, bundles):
    rng = random.Random(17)
    for _ in range(10):
        v, w = random_bundle(rng), random_bundle(rng)
        lhs = classes.total_chern(bundles.bundle_sum(v, w), 5)
        rhs = classes.graded_product(classes.total_chern(v, 5), classes.total_chern(w, 5))
        assert lhs.terms == rhs.terms


def test_adams_from_chern_classes(classes, bundles):
    rng = random.Random(19)
    for _ in range(15):
        v = random_bundle(rng)
        k = rng.randint(1, 4)
        expected = classes.chern_character(bundles.adams_op(v, k), 5)
        got = classes.adams_via_newton(classes.total_chern(v, 5), k, v.dim, 5)
        assert got.terms == expected.terms


def test_adams_scales_chern_character_by_degree(classes, bundles):
    v = bundle(2, (1, [1, 0]), (2, [1, 1]))
    ch_v = classes.chern_character(v, 4)
    ch_psi = classes.chern_character(bundles.adams_op(v, 3), 4)
    for d in range(5):
        assert ch_psi.component(d).terms == {e: c * 3 ** d for e, c in ch_v.component(d).terms.items()}


@pytest.mark.parametrize('p', [2, 3, 5])
def test_adams_congruence(classes, p):
    rng = random.Random(p)
    for _ in range(5):
        assert classes.adams_congruence_holds(random_bundle(rng, effective=True), p, 4)


def test_congruence_requires_effective_bundle(classes):
    with pytest.raises(InvalidParameterError):
        classes.adams_congruence_holds(bundle(1, (-1, [1])), 2, 3)


def test_negative_truncation_is_rejected(classes):
    with pytest.raises(InvalidParameterError):
        classes.total_chern(bundle(1, (1, [1])), -1)
