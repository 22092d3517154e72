"""
Exceptions personnalisées pour kcalc
"""
from typing import Optional, Tuple


class KCalcException(Exception):
    """Exception de base pour toutes les exceptions de kcalc"""

    code = 'kcalc_error'

    def __init__(self, message: str, **kwargs):
        super().__init__(message)
        self.message = message
        self.extra = kwargs


class DimensionMismatchError(KCalcException):
    """Dimensions incompatibles entre deux objets"""

    code = 'dimension_mismatch'

    def __init__(self, message: str, expected: Optional[int] = None, actual: Optional[int] = None, **kwargs):
        super().__init__(message, expected=expected, actual=actual, **kwargs)
        self.expected = expected
        self.actual = actual


class SingularMatrixError(KCalcException):
    """Matrice non inversible là où une matrice inversible est exigée"""

    code = 'singular_matrix'


class NotSymmetricError(KCalcException):
    """Polynôme non symétrique sous une transposition de variables"""

    code = 'not_symmetric'

    def __init__(self, message: str, transposition: Optional[Tuple[int, int]] = None, **kwargs):
        super().__init__(message, transposition=transposition, **kwargs)
        self.transposition = transposition


class WindingError(KCalcException):
    """Erreur lors du calcul d'un nombre d'enroulement"""

    code = 'winding_error'


class NotInvertibleOnCircleError(WindingError):
    """Le symbole s'annule (numériquement) sur le cercle unité"""

    code = 'not_invertible_on_circle'

    def __init__(self, message: str, min_modulus: Optional[float] = None, **kwargs):
        super().__init__(message, min_modulus=min_modulus, **kwargs)
        self.min_modulus = min_modulus


class QuadratureNotConvergedError(WindingError):
    """La quadrature du principe de l'argument n'a pas convergé"""

    code = 'quadrature_not_converged'

    def __init__(self, message: str, residual: Optional[float] = None, **kwargs):
        super().__init__(message, residual=residual, **kwargs)
        self.residual = residual


class RootOnCircleError(WindingError):
    """Une racine du polynôme associé est trop proche du cercle unité"""

    code = 'root_on_circle'


class DegeneratePolynomialError(WindingError):
    """Polynôme identiquement nul"""

    code = 'degenerate_polynomial'


class WindingDisagreementError(WindingError):
    """Les deux algorithmes d'enroulement ne donnent pas le même entier"""

    code = 'winding_disagreement'

    def __init__(self, message: str, values: Optional[Tuple[int, int]] = None, **kwargs):
        super().__init__(message, values=values, **kwargs)
        self.values = values


class WindowNotStabilizedError(KCalcException):
    """Les dimensions noyau/conoyau dépendent encore de la fenêtre de support"""

    code = 'window_not_stabilized'


class InconsistentSamplingError(KCalcException):
    """Un triple recouvrement ne partage aucun point d'échantillonnage"""

    code = 'inconsistent_sampling'

    def __init__(self, message: str, triple: Optional[Tuple[str, str, str]] = None, **kwargs):
        super().__init__(message, triple=triple, **kwargs)
        self.triple = triple


class InvalidParameterError(KCalcException):
    """Paramètre hors de son domaine de validité"""

    code = 'invalid_parameter'

    def __init__(self, message: str, parameter: Optional[str] = None, **kwargs):
        super().__init__(message, parameter=parameter, **kwargs)
        self.parameter = parameter


class SuiteNotFoundError(KCalcException):
    """Suite d'auto-test inconnue"""

    code = 'suite_not_found'


class InputFileError(KCalcException):
    """Erreur lors de la lecture d'un fichier d'entrée"""

    code = 'input_file_error'

    def __init__(self, message: str, file_path: Optional[str] = None, **kwargs):
        super().__init__(message, file_path=file_path, **kwargs)
        self.file_path = file_path


class DocumentSchemaError(KCalcException):
    """Document JSON ne respectant pas le schéma attendu"""

    code = 'schema_error'

    def __init__(self, message: str, kind: Optional[str] = None, **kwargs):
        super().__init__(message, kind=kind, **kwargs)
        self.kind = kind


class ConfigurationError(KCalcException):
    """Erreur de configuration"""

    code = 'configuration_error'

    def __init__(self, message: str, config_key: Optional[str] = None, **kwargs):
        super().__init__(message, config_key=config_key, **kwargs)
        self.config_key = config_key
