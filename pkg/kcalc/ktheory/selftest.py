"""
Batteries de propriétés (auto-test) de kcalc

Chaque batterie rejoue les identités et oracles d'un module sur des
données tirées avec une graine fixée, de sorte qu'une exécution est
reproductible bit à bit.
"""
import logging
import random
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Type

import numpy as np
import pandas as pd

from kcalc.exceptions import KCalcException, SuiteNotFoundError
from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.interfaces import IPropertySuite
from kcalc.ktheory.models.abelian_group import AbelianGroup, GroupElement, MonoidPresentation
from kcalc.ktheory.models.bundle import SphereKElement, VirtualSplitBundle
from kcalc.ktheory.models.exact_matrix import ExactMatrix, RingTag
from kcalc.ktheory.models.run_report import PropertyCheck
from kcalc.ktheory.models.symbol import LaurentSymbol, MatrixSymbol, StructuredOperator
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
from kcalc.ktheory.services.winding_service import circle_points

logger = logging.getLogger(__name__)


class _Suite(IPropertySuite):
    """Socle commun: chronométrage et capture des échecs"""

    def __init__(self, numerics_config: NumericsConfig = None):
        self.numerics_config = numerics_config or NumericsConfig.from_env()
        self.checks: List[PropertyCheck] = []

    def check(self, name: str, body: Callable[[], int]) -> None:
        """
        Exécute une propriété; body lève AssertionError en cas de violation
        et retourne le nombre de cas vérifiés
        """
        start = time.perf_counter()
        try:
            cases = body()
            self.checks.append(PropertyCheck(self.name, name, True, cases, elapsed=time.perf_counter() - start))
        except (AssertionError, KCalcException) as e:
            logger.error(f"[{self.name}] propriété {name} violée: {e}")
            self.checks.append(PropertyCheck(
                self.name, name, False, detail=str(e) or type(e).__name__, elapsed=time.perf_counter() - start
            ))

    def run(self, seed: int) -> List[PropertyCheck]:
        self.checks = []
        self.rng = random.Random(seed)
        self.np_rng = np.random.default_rng(seed)
        self.register()
        return self.checks

    def register(self) -> None:
        raise NotImplementedError


def _random_matrix(rng: random.Random, rows: int, cols: int, low: int = -9, high: int = 9) -> List[List[int]]:
    return [[rng.randint(low, high) for _ in range(cols)] for _ in range(rows)]


def _random_invertible(rng: random.Random, n: int, ring: RingTag, linalg: ExactLinalgService) -> ExactMatrix:
    while True:
        if ring.kind == 'Fp':
            grid = [[rng.randrange(ring.modulus) for _ in range(n)] for _ in range(n)]
        else:
            grid = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        matrix = ExactMatrix.from_rows(grid, ring)
        if linalg.determinant(matrix) != 0:
            return matrix


def _random_bundle(rng: random.Random, base_lines: int = 2, max_terms: int = 3, effective: bool = False) -> VirtualSplitBundle:
    items = []
    for _ in range(rng.randint(1, max_terms)):
        mult = rng.randint(1, 2) if effective else rng.choice([-2, -1, 1, 2])
        items.append((mult, [rng.randint(-2, 2) for _ in range(base_lines)]))
    return VirtualSplitBundle.from_multiset(base_lines, items)


class LinalgSuite(_Suite):
    name = 'snf'

    def register(self) -> None:
        linalg = ExactLinalgService()

        def smith_witness() -> int:
            for _ in range(500):
                rows, cols = self.rng.randint(1, 6), self.rng.randint(1, 6)
                a = ExactMatrix.from_rows(_random_matrix(self.rng, rows, cols, -20, 20), 'Z')
                snf = linalg.smith_normal_form(a)
                assert snf.U @ a @ snf.V == snf.D, f"U·A·V != D pour {a.to_rows()}"
                assert linalg.is_unimodular(snf.U) and linalg.is_unimodular(snf.V), "U ou V non unimodulaire"
                assert linalg.has_divisibility_chain(snf), f"Chaîne de divisibilité rompue: {snf.invariant_factors}"
            return 500

        self.check('smith_normal_form_witness', smith_witness)


class GrothendieckSuite(_Suite):
    name = 'grothendieck'

    def register(self) -> None:
        service = GrothendieckService()

        def free_monoids() -> int:
            for k in range(1, 6):
                assert service.group_completion(MonoidPresentation(k)) == AbelianGroup(k), f"Gr(N^{k}) != Z^{k}"
            return 5

        def two_a_equals_two_b() -> int:
            presentation = MonoidPresentation(2, (((2, 0), (0, 2)),))
            group = service.group_completion(presentation)
            assert str(group) == 'Z (+) Z/2', f"<a,b | 2a=2b> donne {group}"
            return 1

        def membership_oracle() -> int:
            for _ in range(200):
                g = self.rng.randint(1, 3)
                relations = tuple(
                    (tuple(self.rng.randint(0, 3) for _ in range(g)), tuple(self.rng.randint(0, 3) for _ in range(g)))
                    for _ in range(self.rng.randint(0, 3))
                )
                presentation = MonoidPresentation(g, relations)
                x = GroupElement(tuple(self.rng.randint(-3, 3) for _ in range(g)))
                y = GroupElement(tuple(self.rng.randint(-3, 3) for _ in range(g)))
                assert service.group_completion(presentation) == service.oracle_group(presentation), \
                    f"Groupe différent de l'oracle pour {presentation.to_dict()}"
                assert service.element_equal(presentation, x, y) == service.oracle_in_lattice(presentation, x - y), \
                    f"Appartenance différente de l'oracle pour {presentation.to_dict()}"
            return 200

        self.check('free_monoids', free_monoids)
        self.check('two_a_equals_two_b', two_a_equals_two_b)
        self.check('membership_oracle', membership_oracle)


class SymfunSuite(_Suite):
    name = 'symfun'

    def register(self) -> None:
        service = SymmetricFunctionService(self.numerics_config)

        def newton_brute_force() -> int:
            for k in range(1, 9):
                expanded = service.expand_in_roots(service.newton_power_sum(k), 8, degree=k)
                assert expanded.terms == service.power_sum_in_roots(k, 8, degree=k).terms, f"p_{k} != Σ x_i^{k}"
            return 8

        def symmetrization_roundtrip() -> int:
            for k in range(1, 6):
                assert service.symmetrize_to_elementary(service.power_sum_in_roots(k, k, degree=k)) \
                    == service.newton_power_sum(k), f"Symétrisation de p_{k} incorrecte"
            return 5

        self.check('newton_brute_force', newton_brute_force)
        self.check('symmetrization_roundtrip', symmetrization_roundtrip)


class CharclassSuite(_Suite):
    name = 'charclass'

    def register(self) -> None:
        bundles = BundleOperationsService()
        classes = CharacteristicClassService(self.numerics_config, bundle_service=bundles)

        def chern_character_homomorphism() -> int:
            for _ in range(200):
                v, w = _random_bundle(self.rng), _random_bundle(self.rng)
                ch_v, ch_w = classes.chern_character(v, 6), classes.chern_character(w, 6)
                assert classes.chern_character(bundles.bundle_sum(v, w), 6).terms == classes.graded_sum(ch_v, ch_w).terms, \
                    "ch(V⊕W) != chV + chW"
                assert classes.chern_character(bundles.bundle_tensor(v, w), 6).terms \
                    == classes.graded_product(ch_v, ch_w).terms, "ch(V⊗W) != chV·chW"
            return 200

        def lambda_ring_identities() -> int:
            for _ in range(100):
                v = _random_bundle(self.rng, max_terms=2)
                w = _random_bundle(self.rng, max_terms=2)
                assert bundles.lambda_series(bundles.bundle_sum(v, w), 8) == bundles.series_product(
                    bundles.lambda_series(v, 8), bundles.lambda_series(w, 8), 8
                ), "λ_t(V⊕W) != λ_tV·λ_tW"
                inverse = bundles.series_product(
                    bundles.lambda_series(v, 8), bundles.negate_variable(bundles.sym_series(v, 8)), 8
                )
                assert inverse[0] == VirtualSplitBundle.trivial(1, v.base_lines) and all(s.is_zero for s in inverse[1:]), \
                    "λ_t(V)·S_{-t}(V) != 1"
            return 100

        def adams_composition() -> int:
            cases = 0
            for _ in range(10):
                v = _random_bundle(self.rng)
                for k in range(1, 6):
                    for l in range(1, 6):
                        assert bundles.adams_op(bundles.adams_op(v, l), k) == bundles.adams_op(v, k * l), \
                            f"ψ^{k}ψ^{l} != ψ^{k * l}"
                        cases += 1
            return cases

        def adams_through_lambda() -> int:
            for _ in range(20):
                v = _random_bundle(self.rng, max_terms=2)
                for k in range(1, 5):
                    assert bundles.adams_via_lambda(v, k) == bundles.adams_op(v, k), f"ψ^{k} par λ != ψ^{k}"
            return 80

        def adams_congruence() -> int:
            for p in (2, 3, 5):
                for _ in range(10):
                    v = _random_bundle(self.rng, max_terms=2, effective=True)
                    assert classes.adams_congruence_holds(v, p, 5), f"Congruence ψ^{p} violée"
            return 30

        def adams_via_newton() -> int:
            for _ in range(100):
                v = _random_bundle(self.rng, max_terms=2)
                k = self.rng.randint(1, 4)
                expected = classes.chern_character(bundles.adams_op(v, k), 5)
                got = classes.adams_via_newton(classes.total_chern(v, 5), k, v.dim, 5)
                assert got.terms == expected.terms, f"ψ^{k} par Newton != mise à l'échelle des racines"
            return 100

        def sphere_adams() -> int:
            for n in range(1, 5):
                for k in range(1, 6):
                    got = bundles.sphere_adams(SphereKElement.generator(n), k)
                    assert got == SphereKElement(n, 0, k ** n), f"ψ^{k}(u) != {k}^{n}·u sur S^{2 * n}"
            return 20

        self.check('chern_character_homomorphism', chern_character_homomorphism)
        self.check('lambda_ring_identities', lambda_ring_identities)
        self.check('adams_composition', adams_composition)
        self.check('adams_through_lambda', adams_through_lambda)
        self.check('adams_congruence', adams_congruence)
        self.check('adams_via_newton', adams_via_newton)
        self.check('sphere_adams', sphere_adams)


class ToeplitzSuite(_Suite):
    name = 'toeplitz'

    def _random_symbol(self, max_pole: int, max_top: int, min_modulus: float = 0.1) -> LaurentSymbol:
        points = circle_points(1024)
        while True:
            p = int(self.np_rng.integers(0, max_pole + 1))
            q = int(self.np_rng.integers(0, max_top + 1))
            coeffs = self.np_rng.uniform(-1, 1, p + q + 1) + 1j * self.np_rng.uniform(-1, 1, p + q + 1)
            symbol = LaurentSymbol(-p, tuple(coeffs))
            if np.min(np.abs(symbol.evaluate(points))) >= min_modulus:
                return symbol

    def register(self) -> None:
        service = ToeplitzService(self.numerics_config)

        def winding_agreement() -> int:
            for _ in range(500):
                report = service.index_report(self._random_symbol(8, 8))
                assert report.residual < 1e-6, f"Résidu de quadrature {report.residual:.2e}"
            return 500

        def shift_index() -> int:
            assert service.toeplitz_index(LaurentSymbol.monomial(1)) == -1, "Ind T_z != -1"
            assert service.toeplitz_index(LaurentSymbol.monomial(-1)) == 1, "Ind T_{z^-1} != 1"
            return 2

        def compact_perturbation() -> int:
            cases = 0
            for m in range(-5, 6):
                for _ in range(10):
                    k = self.rng.randint(1, 4)
                    grid = [[Fraction(self.rng.randint(-3, 3), self.rng.randint(1, 3)) for _ in range(k)] for _ in range(k)]
                    operator = StructuredOperator(m, ExactMatrix.from_rows(grid, 'Q'))
                    assert service.structured_index(operator) == -m, f"Ind(S^{m} + F) != {-m}"
                    cases += 1
            return cases

        def winding_additivity() -> int:
            for _ in range(200):
                f, g = self._random_symbol(4, 4), self._random_symbol(4, 4)
                assert service.winding(f * g) == service.winding(f) + service.winding(g), "wn(fg) != wn f + wn g"
            return 200

        self.check('winding_agreement', winding_agreement)
        self.check('shift_index', shift_index)
        self.check('compact_perturbation', compact_perturbation)
        self.check('winding_additivity', winding_additivity)


class ClutchingSuite(_Suite):
    name = 'clutching'

    def register(self) -> None:
        service = ClutchingService(self.numerics_config)

        def honest_atlases() -> int:
            for degree in range(-3, 4):
                data = service.honest_line_atlas(degree, seed=self.rng.randint(0, 10 ** 6))
                assert service.validate_cocycle(data, self.numerics_config.cocycle_tolerance).passed, f"Atlas de degré {degree} rejeté"
            return 7

        def corrupted_atlas() -> int:
            data = service.honest_line_atlas(1, seed=self.rng.randint(0, 10 ** 6))
            t = sorted(data.samples[('N', 'E')])[0]
            data.samples[('N', 'E')][t] = data.samples[('N', 'E')][t] * 1.01
            assert not service.validate_cocycle(data, self.numerics_config.cocycle_tolerance).passed, "Cocycle corrompu accepté"
            return 1

        def clutching_degree() -> int:
            for a in range(-2, 3):
                for b in range(-2, 3):
                    symbol = MatrixSymbol.diagonal([LaurentSymbol.monomial(a), LaurentSymbol.monomial(b)])
                    assert service.classify_over_s2(symbol).degree == a + b, f"deg diag(z^{a}, z^{b}) != {a + b}"
            return 25

        self.check('honest_atlases', honest_atlases)
        self.check('corrupted_atlas', corrupted_atlas)
        self.check('clutching_degree', clutching_degree)


class KTablesSuite(_Suite):
    name = 'ktables'

    def register(self) -> None:
        service = KTableService()

        def finite_fields() -> int:
            assert str(service.k_finite_field(3, 4)) == 'Z/15', "K_3(F_4) != Z/15"
            assert str(service.k_finite_field(5, 2)) == 'Z/7', "K_5(F_2) != Z/7"
            cases = 2
            for q in (2, 3, 4, 5, 7, 8, 9):
                for n in range(1, 21):
                    assert service.k_finite_field(2 * n - 1, q).order == q ** n - 1, f"|K_{2 * n - 1}(F_{q})| != {q}^{n} - 1"
                    assert service.k_finite_field(2 * n, q).is_trivial, f"K_{2 * n}(F_{q}) != 0"
                    cases += 2
            return cases

        def spheres() -> int:
            for n in range(0, 6):
                assert service.k_sphere(0, 2 * n) == AbelianGroup(1), f"K̃^0(S^{2 * n}) != Z"
                assert service.k_sphere(1, 2 * n + 1) == AbelianGroup(1), f"K̃^1(S^{2 * n + 1}) != Z"
                assert service.k_sphere(1, 2 * n).is_trivial and service.k_sphere(0, 2 * n + 1).is_trivial, \
                    "K̃ non nul en degré de parité opposée"
            return 24

        def integer_ranks() -> int:
            pattern = [service.k_integers_rank(n) for n in range(10)]
            assert pattern == [1, 0, 0, 0, 0, 1, 0, 0, 0, 1], f"Rangs de K_n(Z): {pattern}"
            return 10

        self.check('finite_fields', finite_fields)
        self.check('spheres', spheres)
        self.check('integer_ranks', integer_ranks)


class HopfSuite(_Suite):
    name = 'hopf'

    def register(self) -> None:
        service = HopfService()

        def exhaustive_search() -> int:
            report = service.hopf_search(10 ** 5)
            assert report.solutions == [1, 2, 4], f"Solutions {report.solutions}"
            assert report.closed_form_agrees, f"Forme close de v_2 en défaut pour n = {report.first_disagreement}"
            return 10 ** 5

        def odd_a_refuted() -> int:
            cases = 0
            for n in (3, 5, 6):
                assert not service.odd_a_admissible(n)['admissible'], f"a impair admissible pour n = {n}"
                left, right = 2 ** n * (2 ** n - 1), 3 ** n * (3 ** n - 1)
                for a in range(1, 200, 2):
                    assert (right * a) % left != 0, f"b entier pour n = {n}, a = {a}"
                    cases += 1
            for n in (1, 2, 4):
                result = service.odd_a_admissible(n)
                assert result['admissible'] and service.hopf_constraint(n, result['a'], result['b']), \
                    f"Aucun a impair pour n = {n}"
                cases += 1
            return cases

        self.check('exhaustive_search', exhaustive_search)
        self.check('odd_a_refuted', odd_a_refuted)


class WhiteheadSuite(_Suite):
    name = 'whitehead'

    def register(self) -> None:
        linalg = ExactLinalgService()
        service = WhiteheadService(linalg)

        def factorization() -> int:
            cases = 0
            for ring in (RingTag('Q'), RingTag('Fp', 7)):
                for _ in range(100):
                    n = self.rng.randint(1, 4)
                    a = _random_invertible(self.rng, n, ring, linalg)
                    result = service.transvection_factorize(a)
                    assert service.reassemble(result, n) == a, f"Produit != A sur {ring}"
                    assert result.residue == linalg.determinant(a), f"Résidu != det A sur {ring}"
                    cases += 1
            return cases

        def steinberg() -> int:
            checked = 0
            for ring, n, trials in ((RingTag('Z'), 4, 500), (RingTag('Fp', 7), 4, 500), (RingTag('Z'), 5, 50)):
                report = service.steinberg_check(n, trials, ring, seed=self.rng.randint(0, 10 ** 6))
                assert report.passed, f"Relations de Steinberg violées: {report.violations[:3]}"
                checked += report.checked
            return checked

        def whitehead_identity() -> int:
            q = RingTag('Q')
            for _ in range(100):
                a, b = _random_invertible(self.rng, 2, q, linalg), _random_invertible(self.rng, 2, q, linalg)
                assert service.whitehead_identity(a, b).holds, "Identité de Whitehead en défaut"
            a = _random_invertible(self.rng, 2, q, linalg)
            product = service.whitehead_identity(a, a @ a).product
            assert product == ExactMatrix.identity(6, q), "Commutateur trivial non identité"
            return 101

        self.check('factorization', factorization)
        self.check('steinberg', steinberg)
        self.check('whitehead_identity', whitehead_identity)


SUITES: Dict[str, Type[_Suite]] = {
    suite.name: suite
    for suite in (
        LinalgSuite,
        GrothendieckSuite,
        SymfunSuite,
        CharclassSuite,
        ToeplitzSuite,
        ClutchingSuite,
        KTablesSuite,
        HopfSuite,
        WhiteheadSuite,
    )
}


def run_suites(tag: str, seed: int = 0, numerics_config: Optional[NumericsConfig] = None) -> List[PropertyCheck]:
    """
    Exécute une batterie (ou 'all')

    Raises:
        SuiteNotFoundError: Si la batterie est inconnue
    """
    if tag == 'all':
        names = list(SUITES)
    elif tag in SUITES:
        names = [tag]
    else:
        raise SuiteNotFoundError(f"Batterie inconnue: {tag} (disponibles: all, {', '.join(SUITES)})", suite=tag)

    checks: List[PropertyCheck] = []
    for name in names:
        logger.info(f"Batterie {name} (graine {seed})")
        checks.extend(SUITES[name](numerics_config).run(seed))
    return checks


def summary_frame(checks: List[PropertyCheck]) -> pd.DataFrame:
    """Tableau récapitulatif par batterie: propriétés, cas, échecs, durée"""
    frame = pd.DataFrame([c.to_dict() for c in checks], columns=['suite', 'name', 'passed', 'cases', 'elapsed'])
    if frame.empty:
        return frame
    return (
        frame.assign(failed=~frame['passed'].astype(bool))
        .groupby('suite', sort=False)
        .agg(properties=('name', 'count'), cases=('cases', 'sum'), failed=('failed', 'sum'), elapsed=('elapsed', 'sum'))
        .reset_index()
    )
