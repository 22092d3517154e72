"""
Orchestrateur de kcalc
Route chaque sous-commande vers le service concerné et construit le RunReport
"""
import logging
import time
from typing import Any, Callable, Dict, Optional, Tuple

import pandas as pd

from kcalc.exceptions import (
    DocumentSchemaError,
    InputFileError,
    InvalidParameterError,
    KCalcException,
    SuiteNotFoundError,
)
from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.models.exact_matrix import ExactMatrix, RingTag
from kcalc.ktheory.models.run_report import (
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_USAGE_ERROR,
    CommandRequest,
    RunReport,
)
from kcalc.ktheory.models.symbol import StructuredOperator
from kcalc.ktheory.models.tables import KQuery
from kcalc.ktheory.selftest import run_suites, summary_frame
from kcalc.ktheory.services.bundle_operations_service import BundleOperationsService
from kcalc.ktheory.services.characteristic_class_service import CharacteristicClassService
from kcalc.ktheory.services.clutching_service import ClutchingService
from kcalc.ktheory.services.exact_linalg_service import ExactLinalgService
from kcalc.ktheory.services.grothendieck_service import GrothendieckService
from kcalc.ktheory.services.hopf_service import HopfService
from kcalc.ktheory.services.input_service import InputFileService
from kcalc.ktheory.services.ktable_service import KTableService
from kcalc.ktheory.services.symmetric_function_service import SymmetricFunctionService
from kcalc.ktheory.services.toeplitz_service import ToeplitzService
from kcalc.ktheory.services.whitehead_service import WhiteheadService
from kcalc.ktheory.transformer import KCalcTransformer
from kcalc.ktheory.validator import KCalcValidator

logger = logging.getLogger(__name__)

# Noms courts acceptés par `kcalc ktable`
FAMILY_ALIASES = {
    'fq': 'finite_field',
    'sphere': 'sphere',
    'zrank': 'integers_rank',
    'u': 'stable_unitary',
    'so': 'stable_orthogonal',
    'bott': 'degree_reduce',
}

# (charge utile, diagnostics, résumé lisible, code d'échec éventuel)
Outcome = Tuple[Dict[str, Any], Dict[str, Any], str, Optional[str]]

USAGE_ERRORS = (InputFileError, DocumentSchemaError, SuiteNotFoundError)


class KCalcOrchestrator:
    """
    Orchestrateur de la ligne de commande
    Lecture, validation, transformation, calcul et mise en forme du rapport
    """

    def __init__(self, numerics_config: NumericsConfig = None):
        """Initialise l'orchestrateur et ses services"""
        self.numerics_config = numerics_config or NumericsConfig.from_env()

        self.input_service = InputFileService()
        self.validator = KCalcValidator()
        self.transformer = KCalcTransformer()

        self.linalg = ExactLinalgService()
        self.grothendieck = GrothendieckService(self.linalg)
        self.symfun = SymmetricFunctionService(self.numerics_config)
        self.bundles = BundleOperationsService()
        self.classes = CharacteristicClassService(self.numerics_config, self.symfun, self.bundles)
        self.toeplitz = ToeplitzService(self.numerics_config, self.linalg)
        self.clutching = ClutchingService(self.numerics_config, self.toeplitz)
        self.ktables = KTableService()
        self.hopf = HopfService()
        self.whitehead = WhiteheadService(self.linalg)

        self._routes: Dict[str, Callable[[CommandRequest], Outcome]] = {
            'grothendieck': self._grothendieck,
            'chern': self._chern,
            'ch': self._ch,
            'adams': self._adams,
            'lambda': self._lambda,
            'winding': self._winding,
            'toeplitz-index': self._toeplitz_index,
            'structured-index': self._structured_index,
            'cocycle': self._cocycle,
            'clutch': self._clutch,
            'ktable': self._ktable,
            'hopf': self._hopf,
            'factorize': self._factorize,
            'steinberg': self._steinberg,
            'k1': self._k1,
            'selftest': self._selftest,
        }

    @property
    def subcommands(self):
        return list(self._routes)

    def dispatch(self, request: CommandRequest) -> RunReport:
        """
        Exécute une sous-commande

        Args:
            request: Requête analysée

        Returns:
            RunReport (exit_code 0 succès, 1 erreur de domaine, 2 erreur d'usage)
        """
        start_time = time.time()
        command = request.subcommand
        route = self._routes.get(command)
        if route is None:
            return self._error(command, 'usage_error', f"Sous-commande inconnue: {command}", EXIT_USAGE_ERROR, start_time)

        logger.info(f"Début de la commande {command}")
        try:
            payload, diagnostics, summary, failure = route(request)
        except USAGE_ERRORS as e:
            logger.error(f"Erreur d'usage ({command}): {e.message}")
            return self._error(command, e.code, e.message, EXIT_USAGE_ERROR, start_time, e)
        except KCalcException as e:
            logger.error(f"Erreur de domaine ({command}): {e.message}")
            return self._error(command, e.code, e.message, EXIT_DOMAIN_ERROR, start_time, e)
        except Exception as e:
            logger.error(f"Erreur inattendue lors de la commande {command}: {e}", exc_info=True)
            return self._error(command, 'internal_error', f"Erreur inattendue: {e}", EXIT_DOMAIN_ERROR, start_time)

        elapsed = time.time() - start_time
        if failure:
            logger.warning(f"Commande {command} terminée avec échec: {failure}")
            return RunReport(
                command=command,
                status='error',
                payload=payload,
                diagnostics=diagnostics,
                elapsed=elapsed,
                error_code=failure,
                error_message=summary.splitlines()[0] if summary else failure,
                exit_code=EXIT_DOMAIN_ERROR,
                summary=summary,
            )

        logger.info(f"Commande {command} réussie en {elapsed:.2f}s")
        return RunReport(
            command=command,
            status='ok',
            payload=payload,
            diagnostics=diagnostics,
            elapsed=elapsed,
            exit_code=EXIT_OK,
            summary=summary,
        )

    def _error(
        self,
        command: str,
        code: str,
        message: str,
        exit_code: int,
        start_time: float,
        error: Optional[KCalcException] = None
    ) -> RunReport:
        """Construit un rapport d'erreur"""
        return RunReport(
            command=command,
            status='error',
            diagnostics=self.transformer.error_payload(error) if error else {},
            elapsed=time.time() - start_time,
            error_code=code,
            error_message=message,
            exit_code=exit_code,
            summary=f"Erreur [{code}]: {message}",
        )

    # ------------------------------------------------------------------
    # Entrées
    # ------------------------------------------------------------------

    def _load(self, request: CommandRequest, kind: str, index: int = 0) -> Dict[str, Any]:
        """Lit et valide le index-ième fichier de la requête"""
        if len(request.input_files) <= index:
            raise InputFileError(f"Fichier d'entrée manquant pour {request.subcommand}")
        path = request.input_files[index]
        document = self.input_service.read_document(path)
        schema_error = self.validator.validate_schema(document, kind)
        if schema_error:
            raise DocumentSchemaError(f"Schéma invalide ({path}): {schema_error}", kind=kind)
        return document

    @staticmethod
    def _option(request: CommandRequest, name: str, default: Any = None) -> Any:
        value = request.options.get(name)
        return default if value is None else value

    def _require(self, request: CommandRequest, name: str) -> Any:
        value = request.options.get(name)
        if value is None:
            raise InvalidParameterError(f"Option --{name} requise pour {request.subcommand}", parameter=name)
        return value

    # ------------------------------------------------------------------
    # Grothendieck
    # ------------------------------------------------------------------

    def _grothendieck(self, request: CommandRequest) -> Outcome:
        document = self._load(request, 'presentation')
        presentation = self.transformer.to_presentation(document)
        group = self.grothendieck.group_completion(presentation)
        oracle = self.grothendieck.oracle_group(presentation)

        payload: Dict[str, Any] = group.to_dict()
        elements = self.transformer.to_elements(document)
        if elements:
            payload['canonical_forms'] = [
                list(self.grothendieck.canonical_form(presentation, x).coefficients) for x in elements
            ]
        diagnostics = {'oracle_group': str(oracle), 'oracle_agrees': oracle == group}
        if oracle != group:
            return payload, diagnostics, f"Désaccord avec l'oracle: {group} / {oracle}", 'oracle_disagreement'
        lines = [str(group)]
        for x, form in zip(elements, payload.get('canonical_forms', [])):
            lines.append(f"  {list(x.coefficients)} ~ {form}")
        return payload, diagnostics, '\n'.join(lines), None

    # ------------------------------------------------------------------
    # Classes caractéristiques
    # ------------------------------------------------------------------

    def _degree(self, request: CommandRequest) -> int:
        return int(self._option(request, 'N', self.numerics_config.truncation_degree))

    def _graded_summary(self, title: str, graded, symbol: str) -> str:
        lines = [title]
        for d, component in enumerate(graded.components):
            lines.append(f"  {symbol}_{d} = {self.transformer.format_terms(component.terms)}")
        return '\n'.join(lines)

    def _chern(self, request: CommandRequest) -> Outcome:
        bundle = self.transformer.to_bundle(self._load(request, 'bundle'))
        total = self.classes.total_chern(bundle, self._degree(request))
        payload = {'bundle': bundle.to_dict(), 'total_chern': total.to_dict()}
        return payload, {}, self._graded_summary(f"c({self.transformer.format_bundle(bundle)})", total, 'c'), None

    def _ch(self, request: CommandRequest) -> Outcome:
        bundle = self.transformer.to_bundle(self._load(request, 'bundle'))
        character = self.classes.chern_character(bundle, self._degree(request))
        payload = {'bundle': bundle.to_dict(), 'chern_character': character.to_dict()}
        return payload, {}, self._graded_summary(f"ch({self.transformer.format_bundle(bundle)})", character, 'ch'), None

    def _adams(self, request: CommandRequest) -> Outcome:
        bundle = self.transformer.to_bundle(self._load(request, 'bundle'))
        k = int(self._require(request, 'k'))
        degree = self._degree(request)
        result = self.bundles.adams_op(bundle, k)
        character = self.classes.chern_character(result, degree)
        newton = self.classes.adams_via_newton(self.classes.total_chern(bundle, degree), k, bundle.dim, degree)
        diagnostics = {
            'via_lambda_agrees': self.bundles.adams_via_lambda(bundle, k) == result,
            'via_newton_agrees': newton.terms == character.terms,
        }
        payload = {'bundle': result.to_dict(), 'chern_character': character.to_dict()}
        summary = self._graded_summary(
            f"ψ^{k}: {self.transformer.format_bundle(result)}", character, 'ch'
        )
        failure = None if all(diagnostics.values()) else 'adams_oracle_disagreement'
        return payload, diagnostics, summary, failure

    def _lambda(self, request: CommandRequest) -> Outcome:
        bundle = self.transformer.to_bundle(self._load(request, 'bundle'))
        k = int(self._require(request, 'k'))
        result = self.bundles.lambda_op(bundle, k)
        character = self.classes.chern_character(result, self._degree(request))
        payload = {'bundle': result.to_dict(), 'chern_character': character.to_dict()}
        summary = self._graded_summary(f"λ^{k}: {self.transformer.format_bundle(result)}", character, 'ch')
        return payload, {}, summary, None

    # ------------------------------------------------------------------
    # Toeplitz
    # ------------------------------------------------------------------

    def _winding(self, request: CommandRequest) -> Outcome:
        symbol = self.transformer.to_symbol(self._load(request, 'symbol'))
        report = self.toeplitz.index_report(symbol)
        payload = {
            'winding': report.winding,
            'winding_argument_principle': report.argument_principle.value,
            'winding_root_count': report.root_count.value,
            'residual': report.residual,
        }
        diagnostics = {'samples': report.argument_principle.samples, 'min_modulus': report.min_modulus}
        return payload, diagnostics, f"wn = {report.winding} (résidu {report.residual:.2e})", None

    def _toeplitz_index(self, request: CommandRequest) -> Outcome:
        document = self._load(request, 'matrix_symbol')
        if 'matrix' in document:
            report = self.toeplitz.matrix_symbol_report(self.transformer.to_matrix_symbol(document))
        else:
            report = self.toeplitz.index_report(self.transformer.to_symbol(document))
        payload = report.to_dict()
        diagnostics = {'samples': report.argument_principle.samples, 'min_modulus': report.min_modulus}
        summary = f"Ind T_f = {report.index} (wn = {report.winding}, résidu {report.residual:.2e})"
        return payload, diagnostics, summary, None

    def _structured_index(self, request: CommandRequest) -> Outcome:
        m = int(self._require(request, 'm'))
        if request.input_files:
            perturbation = self.transformer.to_matrix(self._load(request, 'matrix'), 'Q')
        else:
            perturbation = ExactMatrix.zeros(1, 1, 'Q')
        report = self.toeplitz.structured_report(StructuredOperator(m, perturbation))
        summary = f"Ind = {report['index']} (noyau {report['kernel']}, conoyau {report['cokernel']})"
        return report, {'window': report['window']}, summary, None

    # ------------------------------------------------------------------
    # Recollement
    # ------------------------------------------------------------------

    def _cocycle(self, request: CommandRequest) -> Outcome:
        data = self.transformer.to_cocycle(self._load(request, 'cocycle'))
        report = self.clutching.validate_cocycle(
            data, float(self._option(request, 'tol', self.numerics_config.cocycle_tolerance))
        )
        payload = report.to_dict()
        if report.passed:
            return payload, {}, f"Cocycle valide (écart maximal {report.max_deviation:.3e})", None
        summary = f"Cocycle violé: écart {report.max_deviation:.3e} sur {report.worst_triple}"
        return payload, {}, summary, 'cocycle_violated'

    def _clutch(self, request: CommandRequest) -> Outcome:
        symbol = self.transformer.to_matrix_symbol(self._load(request, 'matrix_symbol'))
        result = self.clutching.classify_over_s2(symbol)
        return result.to_dict(), {}, f"Fibré sur S^2: rang {result.rank}, degré {result.degree}", None

    # ------------------------------------------------------------------
    # Tables et Hopf
    # ------------------------------------------------------------------

    def _ktable(self, request: CommandRequest) -> Outcome:
        family = str(self._require(request, 'family'))
        family = FAMILY_ALIASES.get(family.lower(), family)
        query = KQuery(
            family,
            n=self._option(request, 'n'),
            q=self._option(request, 'q'),
            i=self._option(request, 'i'),
            m=self._option(request, 'm'),
        )
        answer = self.ktables.query(query)
        return answer.to_dict(), {}, answer.text, None

    def _hopf(self, request: CommandRequest) -> Outcome:
        bound = int(self._option(request, 'bound', 100))
        report = self.hopf.hopf_search(bound)
        payload = report.to_dict()
        n = self._option(request, 'n')
        if n is not None:
            payload['odd_a'] = self.hopf.odd_a_admissible(int(n))
            a, b = self._option(request, 'a'), self._option(request, 'b')
            if a is not None and b is not None:
                payload['constraint'] = {
                    'holds': self.hopf.hopf_constraint(int(n), int(a), int(b)),
                    'adams_coefficients': list(self.hopf.adams_square_coefficients(int(n), int(a), int(b))),
                }

        table = pd.DataFrame(report.v2_table, columns=['n', 'v2(3^n - 1)'])
        lines = [f"Solutions n <= {bound}: {report.solutions}", table.head(16).to_string(index=False)]
        if 'odd_a' in payload:
            lines.append(f"a impair admissible pour n = {n}: {payload['odd_a']['admissible']}")
        diagnostics = {'closed_form_agrees': report.closed_form_agrees}
        failure = None if report.closed_form_agrees else 'closed_form_disagreement'
        return payload, diagnostics, '\n'.join(lines), failure

    # ------------------------------------------------------------------
    # Matrices élémentaires
    # ------------------------------------------------------------------

    def _factorize(self, request: CommandRequest) -> Outcome:
        matrix = self.transformer.to_matrix(self._load(request, 'matrix'), self._option(request, 'ring'))
        result = self.whitehead.transvection_factorize(matrix)
        ring = result.diagonal.ring
        target = matrix.with_ring(ring)
        reassembled = self.whitehead.reassemble(result, matrix.rows) == target
        diagnostics = {
            'reassembled': reassembled,
            'determinant': ring.to_text(self.linalg.determinant(target)),
        }
        lines = [f"{len(result.factors)} transvections, résidu d = {ring.to_text(result.residue)}"]
        lines += [f"  e^{{{ring.to_text(f.a)}}}_{{{f.i + 1}{f.j + 1}}}" for f in result.factors]
        return result.to_dict(), diagnostics, '\n'.join(lines), None if reassembled else 'factorization_mismatch'

    def _steinberg(self, request: CommandRequest) -> Outcome:
        ring = RingTag.parse(str(self._option(request, 'ring', 'Z')))
        report = self.whitehead.steinberg_check(
            int(self._option(request, 'n', 4)),
            int(self._option(request, 'trials', 500)),
            ring,
            seed=request.seed,
        )
        summary = f"{report.checked} relations vérifiées, {len(report.violations)} violations"
        return report.to_dict(), {}, summary, None if report.passed else 'steinberg_violated'

    def _k1(self, request: CommandRequest) -> Outcome:
        q = int(self._require(request, 'q'))
        modulus = self._option(request, 'modulus')
        if isinstance(modulus, str):
            try:
                modulus = [int(c) for c in modulus.split(',')]
            except ValueError as e:
                raise InvalidParameterError(f"Module illisible: {modulus}", parameter='modulus') from e
        result = self.whitehead.k1_finite_field(q, modulus)
        payload = result.to_dict()
        return payload, {}, f"K_1(F_{q}) = {result.group}, générateur {payload['generator']}", None

    # ------------------------------------------------------------------
    # Auto-test
    # ------------------------------------------------------------------

    def _selftest(self, request: CommandRequest) -> Outcome:
        tag = str(self._option(request, 'suite', 'all'))
        checks = run_suites(tag, request.seed, self.numerics_config)
        failed = [c for c in checks if not c.passed]
        payload = {
            'suite': tag,
            'seed': request.seed,
            'checks': [c.to_dict() for c in checks],
            'passed': not failed,
        }
        lines = [f"ÉCHEC {c.suite}.{c.name}: {c.detail}" for c in failed]
        lines.append(summary_frame(checks).to_string(index=False))
        return payload, {'failed': len(failed)}, '\n'.join(lines), 'property_violation' if failed else None
