#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Excepciones del simulador.

Todas heredan de ZXError para que la línea de comandos pueda traducirlas a
códigos de salida sin capturar errores ajenos.
"""

from typing import Any, Optional


class ZXError(Exception):
    """Raíz de los errores del simulador"""


class ConstructionError(ZXError, ValueError):
    """Identificador inexistente o frontera inválida al construir un diagrama"""


class RuleNotApplicable(ZXError):
    """La precondición de una regla de reescritura no se cumple"""

    def __init__(self, regla: str, motivo: str):
        super().__init__(f"{regla}: {motivo}")
        self.regla = regla
        self.motivo = motivo


class OracleCapExceeded(ZXError):
    """El oráculo tensorial se niega a evaluar diagramas grandes"""


class QasmSyntaxError(ZXError, ValueError):
    """Error de sintaxis posicionado en un archivo QASM"""

    def __init__(self, mensaje: str, line: int, col: int,
                 token: Optional[str] = None, archivo: Optional[str] = None):
        self.mensaje = mensaje
        self.line = line
        self.col = col
        self.token = token
        self.archivo = archivo
        super().__init__(self._formatear())

    def _formatear(self) -> str:
        origen = self.archivo or "<qasm>"
        return f"{origen}:{self.line}:{self.col}: {self.mensaje}"

    def con_archivo(self, archivo: str) -> "QasmSyntaxError":
        return QasmSyntaxError(self.mensaje, self.line, self.col, self.token, archivo)


class DecompositionTimeout(ZXError):
    """Se agotó el tiempo; el reporte parcial queda adjunto"""

    def __init__(self, mensaje: str, reporte: Any = None):
        super().__init__(mensaje)
        self.reporte = reporte


class InconsistencyError(ZXError, RuntimeError):
    """Probabilidades degeneradas o auditorías fallidas: indica un bug de reescritura"""
