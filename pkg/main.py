#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Simulador fuerte Clifford+T

Punto de entrada de la línea de comandos con acceso a todas las herramientas
"""

import argparse
import importlib
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Configurar el path para importar módulos
sys.path.insert(0, str(Path(__file__).parent))

from utils.errores import (ConstructionError, InconsistencyError,  # noqa: E402
                           QasmSyntaxError)
from utils.registro import configurar_logging  # noqa: E402

# Información de los comandos disponibles
COMANDOS = {
    "gen": {
        "nombre": "Generador de instancias",
        "descripcion": "Genera un circuito (pauli, hidden-shift, random) con su JSON acompañante",
        "archivo": "apps.cli",
        "función": "cmd_gen",
        "argumentos": "argumentos_gen",
    },
    "sample": {
        "nombre": "Muestreo",
        "descripcion": "Muestrea una cadena de bits con su probabilidad exacta",
        "archivo": "apps.cli",
        "función": "cmd_sample",
        "argumentos": "argumentos_sample",
    },
    "amplitude": {
        "nombre": "Amplitud",
        "descripcion": "Calcula la amplitud exacta ⟨salida|U|entrada⟩",
        "archivo": "apps.cli",
        "función": "cmd_amplitude",
        "argumentos": "argumentos_amplitude",
    },
    "marginal": {
        "nombre": "Probabilidad marginal",
        "descripcion": "Calcula la probabilidad exacta de un conjunto de cúbits fijados",
        "archivo": "apps.cli",
        "función": "cmd_marginal",
        "argumentos": "argumentos_marginal",
    },
    "bench": {
        "nombre": "Benchmark",
        "descripcion": "Genera y muestrea instancias, una fila CSV por instancia",
        "archivo": "apps.cli",
        "función": "cmd_bench",
        "argumentos": "argumentos_bench",
    },
    "report": {
        "nombre": "Reporte PDF",
        "descripcion": "Resume un CSV de benchmark en un PDF",
        "archivo": "apps.cli",
        "función": "cmd_report",
        "argumentos": "argumentos_report",
    },
}

ERROR_USO = 2
INCONSISTENCIA = 4


def construir_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zxsim",
        description="Simulación fuerte de circuitos Clifford+T por reescritura ZX y descomposición BSS",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log INFO en stderr")
    parser.add_argument("--log-file", default=None, help="Copia del log en un archivo")
    subparsers = parser.add_subparsers(dest="comando", required=True)
    for clave, info in COMANDOS.items():
        sub = subparsers.add_parser(clave, help=info["descripcion"], description=info["nombre"])
        modulo = importlib.import_module(info["archivo"])
        getattr(modulo, info["argumentos"])(sub)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = construir_parser()
    args = parser.parse_args(argv)

    if getattr(args, "debug", False):
        nivel = logging.DEBUG
    elif args.verbose:
        nivel = logging.INFO
    else:
        nivel = logging.WARNING
    configurar_logging(nivel, args.log_file)

    info = COMANDOS[args.comando]
    modulo = importlib.import_module(info["archivo"])
    funcion = getattr(modulo, info["función"])
    try:
        return funcion(args)
    except InconsistencyError as e:
        sys.stderr.write(f"Inconsistencia interna: {e}\n")
        return INCONSISTENCIA
    except (QasmSyntaxError, ConstructionError, FileNotFoundError, ValueError) as e:
        sys.stderr.write(f"{args.comando}: {e}\n")
        return ERROR_USO


if __name__ == "__main__":
    sys.exit(main())
