#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Configuración de logging.

La salida estándar queda reservada para JSON y CSV; los mensajes van a stderr.
"""

import logging
import sys
from typing import Optional

FORMATO = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configurar_logging(nivel: int = logging.WARNING,
                       archivo: Optional[str] = None) -> None:
    """
    Instala el handler raíz.

    Args:
        nivel: nivel mínimo (logging.INFO con -v, logging.DEBUG con --debug)
        archivo: si se indica, también se escribe el log en ese archivo
    """
    handlers = [logging.StreamHandler(sys.stderr)]
    if archivo:
        handlers.append(logging.FileHandler(archivo, encoding="utf-8"))
    logging.basicConfig(level=nivel, format=FORMATO, handlers=handlers, force=True)
