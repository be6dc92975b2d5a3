#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
MÓDULO DE FORMATEO Y UTILIDADES COMPARTIDAS
Presentación de escalares exactos, factores de reducción y tiempos

Funciones disponibles:
- formatear_probabilidad: valor real exacto como "(x + y*sqrt2)/2^k"
- formatear_escalar: forma legible de cualquier elemento de Z[1/2, ω]
- formatear_factor: factor de reducción (Decimal) con 4 cifras significativas
- formatear_duracion: segundos a texto ("850 ms", "12.3 s", "4 min 07 s")
- formatear_entero_grande: enteros enormes en notación científica
"""

from decimal import Decimal, ROUND_HALF_UP
from typing import Optional, Tuple

from utils.scalar_ring import Scalar


def _real_entero(x: Scalar) -> Optional[Tuple[int, int, int]]:
    """(k, x, y) con k >= 0 y valor (x + y√2)/2^k, o None si no es real"""
    lectura = x.canonical().as_real()
    if lectura is None:
        return None
    k, a, b = lectura
    if k < 0:
        return (0, a << -k, b << -k)
    return (k, a, b)


def formatear_probabilidad(p: Scalar) -> str:
    """
    Escribe un real exacto de la forma (x + y√2)/2^k.

    Args:
        p: escalar real (típicamente una probabilidad)

    Returns:
        "0", "1", "x/2^k", "y*sqrt2/2^k" o "(x + y*sqrt2)/2^k"

    Raises:
        ValueError: si el escalar no es real

    Ejemplos:
        >>> formatear_probabilidad(Scalar.uno())
        '1'
        >>> formatear_probabilidad(Scalar(1, 1, 0, 0, 0))
        '1/2^1'
        >>> formatear_probabilidad(Scalar(2, 2, 1, 0, 1))
        '(2 + 1*sqrt2)/2^2'
    """
    lectura = _real_entero(p)
    if lectura is None:
        raise ValueError(f"El escalar {p} no es real")
    k, x, y = lectura
    if x == 0 and y == 0:
        return "0"
    if y == 0:
        return str(x) if k == 0 else f"{x}/2^{k}"
    if x == 0:
        numerador = f"{y}*sqrt2"
    else:
        signo = "+" if y > 0 else "-"
        numerador = f"({x} {signo} {abs(y)}*sqrt2)"
    return numerador if k == 0 else f"{numerador}/2^{k}"


def formatear_escalar(z: Scalar) -> str:
    """
    Forma legible de un escalar; los reales usan formatear_probabilidad.

    Ejemplos:
        >>> formatear_escalar(Scalar.from_phase(2))
        '(1*i)/2^0'
    """
    if _real_entero(z) is not None:
        return formatear_probabilidad(z)
    c = z.canonical()
    partes = []
    for coef, simbolo in ((c.a, ""), (c.b, "*w"), (c.c, "*i"), (c.d, "*w^7")):
        if coef:
            partes.append(f"{coef}{simbolo}" if simbolo else str(coef))
    cuerpo = " + ".join(partes).replace("+ -", "- ")
    return f"({cuerpo})/2^{c.k}"


def formatear_factor(factor: Decimal) -> str:
    """
    Factor de reducción con 4 cifras significativas.

    Ejemplos:
        >>> formatear_factor(Decimal("1234567"))
        '1.235e+6'
        >>> formatear_factor(Decimal("3.5"))
        '3.500'
    """
    if factor == 0:
        return "0"
    if Decimal("0.001") <= abs(factor) < Decimal("10000"):
        exponente = factor.adjusted()
        cuantum = Decimal(1).scaleb(exponente - 3)
        return str(factor.quantize(cuantum, rounding=ROUND_HALF_UP))
    return f"{factor:.3e}".replace("e+0", "e+").replace("e-0", "e-")


def formatear_entero_grande(n: int) -> str:
    """
    Enteros de hasta 12 dígitos tal cual; el resto en notación científica.

    Ejemplos:
        >>> formatear_entero_grande(10 ** 15)
        '1.000e+15'
    """
    if abs(n) < 10 ** 12:
        return str(n)
    return formatear_factor(Decimal(n))


def formatear_duracion(segundos: float) -> str:
    """
    Ejemplos:
        >>> formatear_duracion(0.85)
        '850 ms'
        >>> formatear_duracion(247)
        '4 min 07 s'
    """
    if segundos < 1.0:
        return f"{segundos * 1000:.0f} ms"
    if segundos < 60.0:
        return f"{segundos:.1f} s"
    minutos, resto = divmod(int(round(segundos)), 60)
    return f"{minutos} min {resto:02d} s"
