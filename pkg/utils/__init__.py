"""
Utilidades compartidas del simulador Clifford+T
"""

from .scalar_ring import Scalar

from .config import (
    SimulationConfig,
    MODOS_CCZ,
    POLITICAS_OBJETIVO,
    TIMEOUT_DEFECTO,
    PROFUNDIDAD_DEFECTO
)

from .errores import (
    ZXError,
    ConstructionError,
    RuleNotApplicable,
    OracleCapExceeded,
    QasmSyntaxError,
    DecompositionTimeout,
    InconsistencyError
)

from .formatters import (
    formatear_probabilidad,
    formatear_escalar,
    formatear_factor,
    formatear_entero_grande,
    formatear_duracion
)

from .registro import configurar_logging

__all__ = [
    'Scalar',
    'SimulationConfig',
    'MODOS_CCZ',
    'POLITICAS_OBJETIVO',
    'TIMEOUT_DEFECTO',
    'PROFUNDIDAD_DEFECTO',
    'ZXError',
    'ConstructionError',
    'RuleNotApplicable',
    'OracleCapExceeded',
    'QasmSyntaxError',
    'DecompositionTimeout',
    'InconsistencyError',
    'formatear_probabilidad',
    'formatear_escalar',
    'formatear_factor',
    'formatear_entero_grande',
    'formatear_duracion',
    'configurar_logging'
]
