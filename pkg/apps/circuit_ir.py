#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
CIRCUITOS CLIFFORD+T
Representación, lectura/escritura en el subconjunto QASM y traducción a ZX

Compuertas soportadas: CNOT, CZ, CCZ, H, X, Z, S, Sdg, T, Tdg, ZPhase(m),
XPhase(m), con fases m·π/4. La CCZ es una compuerta de primera clase: su
codificación ZX (7 o 4 spiders no Clifford) se elige al traducir.

La gramática aceptada está documentada en docs/qasm_subset.md.
"""

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import pyparsing as pp

from apps.zx_graph import EdgeKind, VertexKind, ZXDiagram
from utils.config import MODOS_CCZ
from utils.errores import ConstructionError, QasmSyntaxError
from utils.scalar_ring import Scalar

logger = logging.getLogger(__name__)


class GateKind(str, Enum):
    CNOT = "CNOT"
    CZ = "CZ"
    CCZ = "CCZ"
    H = "H"
    X = "X"
    Z = "Z"
    S = "S"
    SDG = "Sdg"
    T = "T"
    TDG = "Tdg"
    ZPHASE = "ZPhase"
    XPHASE = "XPhase"


ARIDAD = {
    GateKind.CNOT: 2,
    GateKind.CZ: 2,
    GateKind.CCZ: 3,
}

# Compuertas diagonales de un cúbit: fase fija en múltiplos de π/4
FASE_Z = {
    GateKind.T: 1,
    GateKind.S: 2,
    GateKind.Z: 4,
    GateKind.SDG: 6,
    GateKind.TDG: 7,
}

NOMBRES_QASM = {
    "cx": GateKind.CNOT,
    "cz": GateKind.CZ,
    "ccz": GateKind.CCZ,
    "h": GateKind.H,
    "x": GateKind.X,
    "z": GateKind.Z,
    "s": GateKind.S,
    "sdg": GateKind.SDG,
    "t": GateKind.T,
    "tdg": GateKind.TDG,
    "rz": GateKind.ZPHASE,
}
QASM_POR_TIPO = {tipo: nombre for nombre, tipo in NOMBRES_QASM.items()}

# Costo en spiders impares de la CCZ según la codificación
T_POR_CCZ = {"SevenT": 7, "FourT": 4}


@dataclass(frozen=True)
class Gate:
    """Compuerta sobre índices de cúbit; `phase` sólo aplica a ZPhase/XPhase"""
    kind: GateKind
    qubits: Tuple[int, ...]
    phase: int = 0

    def __post_init__(self):
        object.__setattr__(self, "kind", GateKind(self.kind))
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        object.__setattr__(self, "phase", self.phase % 8)
        esperada = ARIDAD.get(self.kind, 1)
        if len(self.qubits) != esperada:
            raise ConstructionError(
                f"{self.kind.value} requiere {esperada} cúbits, recibió {len(self.qubits)}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ConstructionError(f"{self.kind.value} con cúbits repetidos {self.qubits}")

    def z_phase(self) -> int:
        """Fase diagonal de la compuerta (sólo compuertas Z de un cúbit)"""
        if self.kind == GateKind.ZPHASE:
            return self.phase
        return FASE_Z[self.kind]

    def is_odd(self) -> bool:
        if self.kind in FASE_Z or self.kind == GateKind.ZPHASE:
            return self.z_phase() % 2 == 1
        if self.kind == GateKind.XPHASE:
            return self.phase % 2 == 1
        return False


@dataclass
class Circuit:
    """Secuencia ordenada de compuertas sobre n_qubits cúbits"""
    n_qubits: int
    gates: List[Gate] = field(default_factory=list)

    def __post_init__(self):
        if self.n_qubits < 0:
            raise ConstructionError("n_qubits no puede ser negativo")
        for compuerta in self.gates:
            self._validar(compuerta)

    def _validar(self, compuerta: Gate) -> None:
        for q in compuerta.qubits:
            if not 0 <= q < self.n_qubits:
                raise ConstructionError(
                    f"Cúbit {q} fuera de rango para un circuito de {self.n_qubits} cúbits")

    def add(self, kind: GateKind, *qubits: int, phase: int = 0) -> "Circuit":
        compuerta = Gate(kind, qubits, phase)
        self._validar(compuerta)
        self.gates.append(compuerta)
        return self

    def extend(self, otro: "Circuit") -> "Circuit":
        if otro.n_qubits != self.n_qubits:
            raise ConstructionError("Los circuitos tienen distinto número de cúbits")
        self.gates.extend(otro.gates)
        return self

    def gate_counts(self) -> Dict[str, int]:
        cuentas: Dict[str, int] = {}
        for compuerta in self.gates:
            cuentas[compuerta.kind.value] = cuentas.get(compuerta.kind.value, 0) + 1
        return cuentas

    def __len__(self) -> int:
        return len(self.gates)


# ======================================================================
# Lectura del subconjunto QASM
# ======================================================================

class _Tokens:
    """Tokens básicos de la gramática"""
    entero = pp.pyparsing_common.integer
    nombre = pp.Word(pp.alphas + "_", pp.alphanums + "_")
    lbra, rbra = map(pp.Suppress, "[]")
    lpar, rpar = map(pp.Suppress, "()")
    pcoma = pp.Suppress(";")
    coma = pp.Suppress(",")


def _gramatica() -> pp.ParserElement:
    t = _Tokens
    cabecera = pp.Group(pp.Keyword("OPENQASM") + pp.Regex(r"\d+(\.\d+)?") + t.pcoma)
    inclusion = pp.Group(pp.Keyword("include") + pp.QuotedString('"') + t.pcoma)
    registro = pp.Group(
        pp.Keyword("qreg") + t.nombre("registro") + t.lbra + t.entero("tamano") + t.rbra + t.pcoma
    )
    referencia = pp.Group(t.nombre + t.lbra + t.entero + t.rbra)
    angulo = t.lpar + pp.CharsNotIn(")")("angulo") + t.rpar
    instruccion = pp.Group(
        pp.Located(
            t.nombre("compuerta")
            + pp.Optional(angulo)
            + pp.Group(pp.DelimitedList(referencia))("operandos")
            + t.pcoma
        )
    )
    programa = (
        pp.Optional(cabecera)("cabecera")
        + pp.ZeroOrMore(inclusion)
        + pp.Group(pp.OneOrMore(registro))("registros")
        + pp.Group(pp.ZeroOrMore(instruccion))("instrucciones")
        + pp.StringEnd()
    )
    programa.ignore(pp.cpp_style_comment)
    return programa


_GRAMATICA = _gramatica()

_PATRON_ANGULO = re.compile(
    r"^\s*(?P<signo>-)?\s*(?:(?P<num>\d+)\s*\*\s*)?pi\s*(?:/\s*(?P<den>\d+))?\s*$"
)


def parse_angle(texto: str) -> int:
    """
    Convierte un ángulo simbólico en m (múltiplo de π/4).

    Ejemplos:
        >>> parse_angle("pi/4")
        1
        >>> parse_angle("-3*pi/4")
        5
        >>> parse_angle("0")
        0

    Raises:
        ValueError: si el ángulo no es un múltiplo exacto de π/4
    """
    if texto.strip() == "0":
        return 0
    coincidencia = _PATRON_ANGULO.match(texto)
    if coincidencia is None:
        raise ValueError(f"Ángulo '{texto.strip()}' no es un múltiplo simbólico de pi/4")
    numerador = int(coincidencia.group("num") or 1)
    denominador = int(coincidencia.group("den") or 1)
    if denominador == 0 or (4 * numerador) % denominador != 0:
        raise ValueError(f"Ángulo '{texto.strip()}' no es un múltiplo de pi/4")
    m = 4 * numerador // denominador
    if coincidencia.group("signo"):
        m = -m
    return m % 8


def format_angle(m: int) -> str:
    """Ángulo simbólico reducido para emitir rz"""
    m %= 8
    if m == 0:
        return "0"
    divisor = 4
    while m % 2 == 0 and divisor > 1:
        m //= 2
        divisor //= 2
    numerador = "pi" if m == 1 else f"{m}*pi"
    return numerador if divisor == 1 else f"{numerador}/{divisor}"


def parse(texto: str) -> Circuit:
    """
    Lee un programa en el subconjunto QASM.

    Args:
        texto: fuente QASM (cabecera e include opcionales, uno o más qreg)

    Returns:
        Circuit con las compuertas en orden de aparición

    Raises:
        QasmSyntaxError: compuerta desconocida, cabecera mal formada o
            ángulo que no es múltiplo de π/4, con línea y columna
    """
    try:
        resultado = _GRAMATICA.parse_string(texto, parse_all=True)
    except pp.ParseBaseException as error:
        raise QasmSyntaxError(
            f"Error de sintaxis: {error.msg}", error.lineno, error.col,
            token=(error.line[error.col - 1:].split() or [None])[0],
        ) from None

    desplazamientos: Dict[str, Tuple[int, int]] = {}
    total = 0
    for registro in resultado["registros"]:
        nombre, tamano = registro["registro"], int(registro["tamano"])
        desplazamientos[nombre] = (total, tamano)
        total += tamano

    circuito = Circuit(total)
    for instruccion in resultado["instrucciones"]:
        inicio, cuerpo, _ = instruccion
        linea, columna = pp.lineno(inicio, texto), pp.col(inicio, texto)
        nombre = cuerpo["compuerta"]
        if nombre not in NOMBRES_QASM:
            raise QasmSyntaxError(
                f"Compuerta '{nombre}' desconocida. Opciones válidas: {sorted(NOMBRES_QASM)}",
                linea, columna, token=nombre)
        tipo = NOMBRES_QASM[nombre]
        fase = 0
        tiene_angulo = "angulo" in cuerpo
        if tipo == GateKind.ZPHASE:
            if not tiene_angulo:
                raise QasmSyntaxError("rz requiere un ángulo", linea, columna, token=nombre)
            try:
                fase = parse_angle(cuerpo["angulo"])
            except ValueError as error:
                raise QasmSyntaxError(str(error), linea, columna,
                                      token=cuerpo["angulo"].strip()) from None
        elif tiene_angulo:
            raise QasmSyntaxError(f"'{nombre}' no admite ángulo", linea, columna, token=nombre)

        qubits = []
        for registro, indice in cuerpo["operandos"]:
            if registro not in desplazamientos:
                raise QasmSyntaxError(f"Registro '{registro}' no declarado",
                                      linea, columna, token=registro)
            base, tamano = desplazamientos[registro]
            if not 0 <= indice < tamano:
                raise QasmSyntaxError(f"Índice {registro}[{indice}] fuera de rango",
                                      linea, columna, token=registro)
            qubits.append(base + indice)
        try:
            circuito.add(tipo, *qubits, phase=fase)
        except ConstructionError as error:
            raise QasmSyntaxError(str(error), linea, columna, token=nombre) from None
    return circuito


def emit(c: Circuit, registro: str = "q") -> str:
    """
    Escribe el circuito en el subconjunto QASM.

    XPhase(m) se escribe como h; rz(m); h (el subconjunto no tiene rx).
    """
    lineas = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg {registro}[{c.n_qubits}];"]
    for compuerta in c.gates:
        operandos = ",".join(f"{registro}[{q}]" for q in compuerta.qubits)
        if compuerta.kind == GateKind.XPHASE:
            lineas.append(f"h {operandos};")
            lineas.append(f"rz({format_angle(compuerta.phase)}) {operandos};")
            lineas.append(f"h {operandos};")
        elif compuerta.kind == GateKind.ZPHASE:
            lineas.append(f"rz({format_angle(compuerta.phase)}) {operandos};")
        else:
            lineas.append(f"{QASM_POR_TIPO[compuerta.kind]} {operandos};")
    return "\n".join(lineas) + "\n"


# ======================================================================
# Traducción a ZX
# ======================================================================

def t_count(c: Circuit, ccz_mode: str = "SevenT") -> int:
    """Spiders de fase impar que emite la traducción antes de simplificar"""
    if ccz_mode not in MODOS_CCZ:
        raise ValueError(f"Modo CCZ '{ccz_mode}' no reconocido. Opciones válidas: {list(MODOS_CCZ)}")
    total = 0
    for compuerta in c.gates:
        if compuerta.kind == GateKind.CCZ:
            total += T_POR_CCZ[ccz_mode]
        elif compuerta.is_odd():
            total += 1
    return total


class _Constructor:
    """Arma el diagrama cúbit a cúbit manteniendo el último vértice de cada hilo"""

    def __init__(self, n_qubits: int):
        self.d = ZXDiagram()
        self.ultimo = [self.d.add_boundary(es_entrada=True) for _ in range(n_qubits)]

    def en_hilo(self, q: int, kind: VertexKind, phase: int = 0) -> int:
        v = self.d.add_vertex(kind, phase)
        self.d.add_edge(self.ultimo[q], v, EdgeKind.SIMPLE)
        self.ultimo[q] = v
        return v

    def gadget(self, objetivos: Sequence[int], fase: int) -> None:
        base = self.d.add_vertex(VertexKind.Z_SPIDER, 0)
        for v in objetivos:
            self.d.add_edge(base, v, EdgeKind.HADAMARD)
        tope = self.d.add_vertex(VertexKind.Z_SPIDER, fase)
        self.d.add_edge(base, tope, EdgeKind.HADAMARD)

    def cerrar(self) -> ZXDiagram:
        for v in self.ultimo:
            salida = self.d.add_boundary(es_entrada=False)
            self.d.add_edge(v, salida, EdgeKind.SIMPLE)
        return self.d


def _ccz_siete_t(k: _Constructor, a: int, b: int, c: int) -> None:
    # fase polinómica: 4abc = a + b + c - a⊕b - a⊕c - b⊕c + a⊕b⊕c
    va = k.en_hilo(a, VertexKind.Z_SPIDER, 1)
    vb = k.en_hilo(b, VertexKind.Z_SPIDER, 1)
    vc = k.en_hilo(c, VertexKind.Z_SPIDER, 1)
    for par in ((va, vb), (va, vc), (vb, vc)):
        k.gadget(par, 7)
    k.gadget((va, vb, vc), 1)
    k.d.mult_sqrt2_power(5)


def _ccz_cuatro_t(k: _Constructor, a: int, b: int, c: int) -> None:
    d = k.d
    va = k.en_hilo(a, VertexKind.Z_SPIDER, 0)
    vb = k.en_hilo(b, VertexKind.Z_SPIDER, 0)
    vc = k.en_hilo(c, VertexKind.Z_SPIDER, 0)
    # ancilla del AND en |T⟩ y su descomputación con un efecto ⟨+| sobre el destino
    z = d.add_vertex(VertexKind.Z_SPIDER, 1)
    k.gadget((z, va), 7)
    k.gadget((z, vb), 7)
    base = d.add_vertex(VertexKind.Z_SPIDER, 0)
    for v in (z, va, vb):
        d.add_edge(base, v, EdgeKind.HADAMARD)
    tope = d.add_vertex(VertexKind.Z_SPIDER, 1)
    d.add_edge(base, tope, EdgeKind.HADAMARD)
    r = d.add_vertex(VertexKind.Z_SPIDER, 2)
    d.add_edge(tope, r, EdgeKind.HADAMARD)
    d.add_edge(r, vc, EdgeKind.HADAMARD)
    d.mult_scalar(Scalar.from_int(4))


def to_zx(c: Circuit, ccz_mode: str = "SevenT") -> ZXDiagram:
    """
    Traduce el circuito a un diagrama cuyo tensor es exactamente la unitaria.

    Args:
        c: circuito
        ccz_mode: "SevenT" (por defecto) o "FourT"

    Returns:
        ZXDiagram con una entrada y una salida por cúbit (en orden)
    """
    if ccz_mode not in MODOS_CCZ:
        raise ValueError(f"Modo CCZ '{ccz_mode}' no reconocido. Opciones válidas: {list(MODOS_CCZ)}")
    k = _Constructor(c.n_qubits)
    raiz2 = Scalar.sqrt2_power(1)
    for compuerta in c.gates:
        tipo = compuerta.kind
        qs = compuerta.qubits
        if tipo in FASE_Z or tipo == GateKind.ZPHASE:
            k.en_hilo(qs[0], VertexKind.Z_SPIDER, compuerta.z_phase())
        elif tipo == GateKind.X:
            k.en_hilo(qs[0], VertexKind.X_SPIDER, 4)
        elif tipo == GateKind.XPHASE:
            k.en_hilo(qs[0], VertexKind.X_SPIDER, compuerta.phase)
        elif tipo == GateKind.H:
            k.en_hilo(qs[0], VertexKind.H_BOX)
        elif tipo == GateKind.CNOT:
            control = k.en_hilo(qs[0], VertexKind.Z_SPIDER)
            objetivo = k.en_hilo(qs[1], VertexKind.X_SPIDER)
            k.d.add_edge(control, objetivo, EdgeKind.SIMPLE)
            k.d.mult_scalar(raiz2)
        elif tipo == GateKind.CZ:
            u = k.en_hilo(qs[0], VertexKind.Z_SPIDER)
            v = k.en_hilo(qs[1], VertexKind.Z_SPIDER)
            k.d.add_edge(u, v, EdgeKind.HADAMARD)
            k.d.mult_scalar(raiz2)
        elif tipo == GateKind.CCZ:
            if ccz_mode == "SevenT":
                _ccz_siete_t(k, *qs)
            else:
                _ccz_cuatro_t(k, *qs)
    d = k.cerrar()
    logger.debug("Circuito de %d compuertas traducido: %r", len(c), d)
    return d
