#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
ARITMÉTICA EXACTA DE ESCALARES
Anillo Z[1/2, ω] con ω = e^{iπ/4}

Todo diagrama ZX lleva un factor global exacto. Este módulo lo representa con
cinco enteros (k, a, b, c, d) cuyo valor es

    (1/2^k) · (a + b·ω + c·i + d·ω⁻¹)

Los coeficientes son enteros de Python (precisión arbitraria): las sumas de
hojas de una descomposición pueden acumular millones de términos.

Funciones disponibles:
- mul / add: producto y suma exactos (forma canónica)
- from_phase: ω^m para m entero módulo 8
- one_over_sqrt2_power: (1/√2)^p exacto
- as_real: lectura (k, x, y) de un valor real (x + y√2)/2^k
- to_float: conversión a complex para comparaciones y sorteos
"""

import math
import re
from dataclasses import dataclass
from typing import Optional, Tuple, Union

RAIZ2_MEDIOS = math.sqrt(2.0) / 2.0

# Formato textual usado en reportes JSON: "(k; a, b, c, d)"
_PATRON_TEXTO = re.compile(
    r"^\(\s*(-?\d+)\s*;\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$"
)

Operando = Union["Scalar", int]


@dataclass(frozen=True, eq=False)
class Scalar:
    """
    Elemento exacto de Z[1/2, ω].

    El constructor guarda los campos tal cual; todas las operaciones devuelven
    la forma canónica (cero como (0,0,0,0,0) y coeficientes reducidos mientras
    sean todos pares).
    """
    k: int = 0
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    # ------------------------------------------------------------------
    # Construcción
    # ------------------------------------------------------------------

    @classmethod
    def cero(cls) -> "Scalar":
        return cls(0, 0, 0, 0, 0)

    @classmethod
    def uno(cls) -> "Scalar":
        return cls(0, 1, 0, 0, 0)

    @classmethod
    def from_int(cls, n: int) -> "Scalar":
        return cls(0, n, 0, 0, 0).canonical()

    @classmethod
    def from_phase(cls, m: int) -> "Scalar":
        """
        Representación exacta de ω^m.

        Ejemplos:
            >>> str(Scalar.from_phase(2))
            '(0; 0, 0, 1, 0)'
            >>> str(Scalar.from_phase(7))
            '(0; 0, 0, 0, 1)'
        """
        m %= 8
        signo = -1 if m >= 4 else 1
        m %= 4
        if m == 0:
            return cls(0, signo, 0, 0, 0)
        if m == 1:
            return cls(0, 0, signo, 0, 0)
        if m == 2:
            return cls(0, 0, 0, signo, 0)
        # ω³ = -ω⁻¹
        return cls(0, 0, 0, 0, -signo)

    @classmethod
    def one_over_sqrt2_power(cls, p: int) -> "Scalar":
        """
        (1/√2)^p exacto. Para p impar usa √2 = ω + ω⁻¹.

        Ejemplos:
            >>> str(Scalar.one_over_sqrt2_power(1))
            '(1; 0, 1, 0, 1)'
            >>> str(Scalar.one_over_sqrt2_power(-1))
            '(0; 0, 1, 0, 1)'
        """
        if p % 2 == 0:
            return cls(p // 2, 1, 0, 0, 0).canonical()
        # (1/√2)^p = 2^{-(p-1)/2} · (ω + ω⁻¹)/2
        return cls((p - 1) // 2 + 1, 0, 1, 0, 1).canonical()

    @classmethod
    def sqrt2_power(cls, p: int) -> "Scalar":
        """√2^p exacto."""
        return cls.one_over_sqrt2_power(-p)

    @classmethod
    def parse(cls, texto: str) -> "Scalar":
        """
        Lee el formato "(k; a, b, c, d)".

        Raises:
            ValueError: si el texto no respeta el formato
        """
        coincidencia = _PATRON_TEXTO.match(texto.strip())
        if coincidencia is None:
            raise ValueError(
                f"Escalar '{texto}' no reconocido. Formato esperado: (k; a, b, c, d)"
            )
        return cls(*(int(g) for g in coincidencia.groups()))

    # ------------------------------------------------------------------
    # Forma canónica
    # ------------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def canonical(self) -> "Scalar":
        if self.is_zero():
            if self.k == 0:
                return self
            return Scalar(0, 0, 0, 0, 0)
        mezcla = self.a | self.b | self.c | self.d
        ceros = (mezcla & -mezcla).bit_length() - 1
        if ceros == 0:
            return self
        return Scalar(
            self.k - ceros,
            self.a >> ceros,
            self.b >> ceros,
            self.c >> ceros,
            self.d >> ceros,
        )

    def _clave(self) -> Tuple[int, int, int, int, int]:
        x = self.canonical()
        return (x.k, x.a, x.b, x.c, x.d)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Scalar(0, other, 0, 0, 0)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._clave() == other._clave()

    def __hash__(self) -> int:
        return hash(self._clave())

    # ------------------------------------------------------------------
    # Aritmética
    # ------------------------------------------------------------------

    def _en_base_omega(self) -> Tuple[int, int, int, int]:
        # a + bω + cω² + dω⁷ = a + bω + cω² - dω³
        return (self.a, self.b, self.c, -self.d)

    @staticmethod
    def _coaccionar(valor: Operando) -> "Scalar":
        if isinstance(valor, Scalar):
            return valor
        if isinstance(valor, int):
            return Scalar(0, valor, 0, 0, 0)
        raise TypeError(f"No se puede operar un Scalar con {type(valor).__name__}")

    def mul(self, other: Operando) -> "Scalar":
        y = self._coaccionar(other)
        p = self._en_base_omega()
        q = y._en_base_omega()
        r = [0, 0, 0, 0]
        for i in range(4):
            if p[i] == 0:
                continue
            for j in range(4):
                if i + j < 4:
                    r[i + j] += p[i] * q[j]
                else:
                    # ω⁴ = -1
                    r[i + j - 4] -= p[i] * q[j]
        return Scalar(self.k + y.k, r[0], r[1], r[2], -r[3]).canonical()

    def add(self, other: Operando) -> "Scalar":
        y = self._coaccionar(other)
        if y.is_zero():
            return self.canonical()
        if self.is_zero():
            return y.canonical()
        x = self
        # alinear exponentes: el de mayor k fija el denominador común
        if x.k < y.k:
            x, y = y, x
        escala = x.k - y.k
        return Scalar(
            x.k,
            x.a + (y.a << escala),
            x.b + (y.b << escala),
            x.c + (y.c << escala),
            x.d + (y.d << escala),
        ).canonical()

    def neg(self) -> "Scalar":
        return Scalar(self.k, -self.a, -self.b, -self.c, -self.d).canonical()

    def conj(self) -> "Scalar":
        """Conjugado complejo: ω ↦ ω⁻¹, i ↦ -i."""
        return Scalar(self.k, self.a, self.d, -self.c, self.b).canonical()

    def abs2(self) -> "Scalar":
        """|x|² exacto, siempre real."""
        return self.mul(self.conj())

    __mul__ = mul
    __add__ = add
    __neg__ = neg

    def __rmul__(self, other: Operando) -> "Scalar":
        return self.mul(other)

    def __radd__(self, other: Operando) -> "Scalar":
        return self.add(other)

    def __sub__(self, other: Operando) -> "Scalar":
        return self.add(self._coaccionar(other).neg())

    def __rsub__(self, other: Operando) -> "Scalar":
        return self._coaccionar(other).add(self.neg())

    # ------------------------------------------------------------------
    # Lectura
    # ------------------------------------------------------------------

    def as_real(self) -> Optional[Tuple[int, int, int]]:
        """
        Si el valor es real devuelve (k, x, y) con valor = (x + y√2)/2^k.

        Se leen los campos tal como están guardados (sin canonizar).

        Ejemplos:
            >>> Scalar(1, 1, 1, 0, 1).as_real()
            (1, 1, 1)
            >>> Scalar(0, 0, 0, 1, 0).as_real() is None
            True
        """
        if self.c != 0 or self.b != self.d:
            return None
        return (self.k, self.a, self.b)

    def to_float(self) -> complex:
        real = self.a + (self.b + self.d) * RAIZ2_MEDIOS
        imag = self.c + (self.b - self.d) * RAIZ2_MEDIOS
        return complex(math.ldexp(real, -self.k), math.ldexp(imag, -self.k))

    def __complex__(self) -> complex:
        return self.to_float()

    def __str__(self) -> str:
        return f"({self.k}; {self.a}, {self.b}, {self.c}, {self.d})"


# ----------------------------------------------------------------------
# Interfaz funcional
# ----------------------------------------------------------------------

def mul(x: Scalar, y: Scalar) -> Scalar:
    return x.mul(y)


def add(x: Scalar, y: Scalar) -> Scalar:
    return x.add(y)


def from_phase(m: int) -> Scalar:
    return Scalar.from_phase(m)


def one_over_sqrt2_power(p: int) -> Scalar:
    return Scalar.one_over_sqrt2_power(p)


def as_real(x: Scalar) -> Optional[Tuple[int, int, int]]:
    return x.as_real()


def to_float(x: Scalar) -> complex:
    return x.to_float()


def conj(x: Scalar) -> Scalar:
    return x.conj()


def neg(x: Scalar) -> Scalar:
    return x.neg()


def is_zero(x: Scalar) -> bool:
    return x.is_zero()


if __name__ == "__main__":
    print("Pruebas del anillo exacto:")
    print(f"  ω·ω = {from_phase(1) * from_phase(1)}")
    print(f"  √2·√2 = {Scalar(0, 0, 1, 0, 1) * Scalar(0, 0, 1, 0, 1)}")
    print(f"  1/√2 = {one_over_sqrt2_power(1)} ≈ {to_float(one_over_sqrt2_power(1))}")
    print(f"  as_real((1+√2)/2) = {as_real(Scalar(1, 1, 1, 0, 1))}")
