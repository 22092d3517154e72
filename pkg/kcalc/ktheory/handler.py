"""
Point d'entrée de la ligne de commande kcalc
"""
import argparse
import dataclasses
import json
import sys
from typing import List, Optional

from kcalc.exceptions import ConfigurationError
from kcalc.ktheory.config.numerics_config import NumericsConfig
from kcalc.ktheory.config.runtime_config import OUTPUT_FORMATS, RuntimeConfig
from kcalc.ktheory.models.run_report import EXIT_DOMAIN_ERROR, EXIT_USAGE_ERROR, CommandRequest, RunReport
from kcalc.ktheory.orchestrator import FAMILY_ALIASES, KCalcOrchestrator
from kcalc.ktheory.selftest import SUITES
from kcalc.ktheory.transformer import KCalcTransformer
from kcalc.utils.logger import setup_logger

# Options numériques globales -> champ de NumericsConfig
NUMERIC_FLAGS = {
    'truncation': 'truncation_degree',
    'gate': 'modulus_gate',
    'quad_tol': 'quadrature_tolerance',
    'max_log2_samples': 'max_log2_samples',
    'root_tol': 'root_circle_tolerance',
    'window_padding': 'window_padding',
}


class _ArgumentParser(argparse.ArgumentParser):
    """argparse sans sys.exit: les erreurs d'usage remontent en ValueError"""

    def error(self, message):
        raise ValueError(message)


def _common_parser(runtime: RuntimeConfig) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=OUTPUT_FORMATS, default=runtime.output_format,
                        help="Format de sortie (human ou json)")
    common.add_argument('--seed', type=int, default=runtime.seed, help="Graine des tirages aléatoires")
    common.add_argument('--log-level', default=runtime.log_level, help="Niveau de log")
    common.add_argument('--truncation', type=int, help="Degré de troncature N")
    common.add_argument('--gate', type=float, help="Module minimal admis sur le cercle")
    common.add_argument('--quad-tol', type=float, help="Tolérance de la quadrature")
    common.add_argument('--max-log2-samples', type=int, help="log2 du nombre maximal d'échantillons")
    common.add_argument('--root-tol', type=float, help="Distance minimale des racines au cercle")
    common.add_argument('--window-padding', type=int, help="Marge de la fenêtre des opérateurs structurés")
    return common


def build_parser(runtime: RuntimeConfig) -> argparse.ArgumentParser:
    """Construit l'analyseur des seize sous-commandes"""
    common = _common_parser(runtime)
    parser = _ArgumentParser(prog='kcalc', description="Atelier de calcul en K-théorie")
    sub = parser.add_subparsers(dest='subcommand', parser_class=_ArgumentParser)

    def command(name: str, help_text: str, files: int = 0, optional_file: bool = False):
        p = sub.add_parser(name, help=help_text, parents=[common])
        if files:
            p.add_argument('input_files', nargs=files, metavar='FICHIER')
        elif optional_file:
            p.add_argument('input_files', nargs='?', metavar='FICHIER')
        return p

    command('grothendieck', "Groupe de Grothendieck d'une présentation", files=1)
    command('chern', "Classe de Chern totale", files=1)
    command('ch', "Caractère de Chern", files=1)
    command('adams', "Opération d'Adams ψ^k", files=1).add_argument('--k', type=int, required=True)
    command('lambda', "Puissance extérieure λ^k", files=1).add_argument('--k', type=int, required=True)
    command('winding', "Nombre d'enroulement d'un symbole", files=1)
    command('toeplitz-index', "Indice de T_f", files=1)

    structured = command('structured-index', "Indice d'un décalage perturbé")
    structured.add_argument('--m', type=int, required=True)
    structured.add_argument('--F', dest='input_files', metavar='FICHIER', help="Matrice de perturbation F")

    command('cocycle', "Vérification d'une condition de cocycle", files=1).add_argument('--tol', type=float)
    command('clutch', "Classification d'un fibré sur S^2", files=1)

    ktable = command('ktable', "Tables de K-groupes")
    ktable.add_argument('family', help=f"Famille ({', '.join(FAMILY_ALIASES)})")
    for name in ('n', 'q', 'i', 'm'):
        ktable.add_argument(f'--{name}', type=int)

    hopf = command('hopf', "Recherche des n tels que 2^n divise 3^n - 1")
    hopf.add_argument('--bound', type=int, default=100)
    for name in ('n', 'a', 'b'):
        hopf.add_argument(f'--{name}', type=int)

    command('factorize', "Factorisation en transvections", files=1).add_argument('--ring')

    steinberg = command('steinberg', "Relations de Steinberg sur des tirages aléatoires")
    steinberg.add_argument('--n', type=int, default=4)
    steinberg.add_argument('--trials', type=int, default=500)
    steinberg.add_argument('--ring', default='Z')

    k1 = command('k1', "K_1 d'un corps fini")
    k1.add_argument('--q', type=int, required=True)
    k1.add_argument('--modulus', help="Polynôme irréductible unitaire, coefficients par degré décroissant")

    command('selftest', "Batteries de propriétés").add_argument(
        'suite', nargs='?', default='all', help=f"Suite ({', '.join(['all', *SUITES])})"
    )
    return parser


def _numerics(options: dict) -> NumericsConfig:
    """NumericsConfig de l'environnement, surchargée par les options"""
    overrides = {field: options.pop(flag) for flag, field in NUMERIC_FLAGS.items() if options.get(flag) is not None}
    for flag in NUMERIC_FLAGS:
        options.pop(flag, None)
    config = NumericsConfig.from_env()
    return dataclasses.replace(config, **overrides) if overrides else config


def _usage_report(message: str) -> RunReport:
    return RunReport(
        command='usage',
        status='error',
        error_code='usage_error',
        error_message=message,
        exit_code=EXIT_USAGE_ERROR,
        summary=f"Erreur d'usage: {message}",
    )


def _emit(report: RunReport, output_format: str) -> None:
    if output_format == 'json':
        data = KCalcTransformer().to_payload(report.to_dict())
        print(json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True))
    elif report.summary:
        stream = sys.stdout if report.is_success else sys.stderr
        print(report.summary, file=stream)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Point d'entrée de `kcalc` et de `python -m kcalc`

    Returns:
        Code de sortie (0 succès, 1 erreur de domaine, 2 erreur d'usage)
    """
    try:
        runtime = RuntimeConfig.from_env()
    except ConfigurationError as e:
        print(f"Configuration invalide: {e.message}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    parser = build_parser(runtime)
    try:
        args = parser.parse_args(argv)
        if not args.subcommand:
            raise ValueError("sous-commande requise")
    except ValueError as e:
        _emit(_usage_report(str(e)), runtime.output_format)
        return EXIT_USAGE_ERROR

    logger = setup_logger('kcalc', args.log_level, runtime.logs_dir)
    logger.info("=" * 60)
    logger.info(f"kcalc {args.subcommand}")
    logger.info("=" * 60)

    options = vars(args).copy()
    for key in ('subcommand', 'format', 'seed', 'log_level'):
        options.pop(key)
    files = options.pop('input_files', None) or []
    if isinstance(files, str):
        files = [files]

    try:
        numerics = _numerics(options)
    except (ConfigurationError, TypeError) as e:
        _emit(_usage_report(str(e)), args.format)
        return EXIT_USAGE_ERROR

    request = CommandRequest(
        subcommand=args.subcommand,
        input_files=list(files),
        options=options,
        output_format=args.format,
        seed=args.seed,
    )

    try:
        report = KCalcOrchestrator(numerics).dispatch(request)
    except Exception as e:
        logger.error(f"Erreur critique lors de l'exécution de kcalc: {e}", exc_info=True)
        return EXIT_DOMAIN_ERROR

    _emit(report, args.format)
    logger.info(f"Terminé: {report.status} en {report.elapsed:.2f}s (code {report.exit_code})")
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
