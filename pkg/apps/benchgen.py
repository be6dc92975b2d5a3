#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
GENERADORES DE INSTANCIAS DE PRUEBA
Circuitos de exponenciales de Pauli, circuitos de hidden shift y conteos de referencia

El generador pseudoaleatorio es numpy.random.Generator(PCG64(seed)), de modo
que una misma semilla produce el mismo circuito en cualquier plataforma.

Convención de cambio de base para Y: S† y luego H antes de la escalera de
CNOT, H y luego S después (Y = S X S†).
"""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from apps.circuit_ir import Circuit, GateKind, t_count

logger = logging.getLogger(__name__)

PRNG = "PCG64"
VERSION_SIDECAR = 1

PAULIS = ("X", "Y", "Z")
FASES_IMPARES = (1, 3, 5, 7)


def _generador(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def naive_terms(t: int, doubled: bool = False) -> int:
    """
    Términos de la descomposición BSS sin simplificar: 7^⌈t/6⌉.

    Ejemplos:
        >>> naive_terms(6)
        7
        >>> naive_terms(80, doubled=True) == 7 ** 27
        True
    """
    if t < 0:
        raise ValueError("t no puede ser negativo")
    if doubled:
        t *= 2
    return 7 ** (-(-t // 6))


def upper_bound_terms(n_qubits: int, t: int) -> int:
    """Muestreo cúbit a cúbit con BSS sobre el diagrama duplicado: n·7^⌈2t/6⌉"""
    return n_qubits * naive_terms(t, doubled=True)


# ======================================================================
# Exponenciales de Pauli
# ======================================================================

@dataclass
class PauliExpSpec:
    n_qubits: int
    count: int
    w_min: int = 2
    w_max: int = 4
    seed: int = 0

    def __post_init__(self):
        if not 2 <= self.w_min <= self.w_max <= self.n_qubits:
            raise ValueError(
                f"Pesos inválidos: se requiere 2 <= w_min ({self.w_min}) <= "
                f"w_max ({self.w_max}) <= n_qubits ({self.n_qubits})")
        if self.count < 0:
            raise ValueError("count no puede ser negativo")


def pauli_exponential(c: Circuit, qubits: Sequence[int], paulis: Sequence[str], m: int) -> Circuit:
    """
    Agrega exp(-i(α/2)P) (salvo fase global) con α = m·π/4.

    Usa exactamente una compuerta de fase y 2(k-1) CNOT sobre el último cúbit.
    """
    if len(qubits) != len(paulis):
        raise ValueError("Cada cúbit necesita su Pauli")
    for q, p in zip(qubits, paulis):
        if p == "X":
            c.add(GateKind.H, q)
        elif p == "Y":
            c.add(GateKind.SDG, q)
            c.add(GateKind.H, q)
        elif p != "Z":
            raise ValueError(f"Pauli '{p}' no reconocido. Opciones válidas: {list(PAULIS)}")
    destino = qubits[-1]
    for q in qubits[:-1]:
        c.add(GateKind.CNOT, q, destino)
    c.add(GateKind.ZPHASE, destino, phase=m)
    for q in reversed(qubits[:-1]):
        c.add(GateKind.CNOT, q, destino)
    for q, p in zip(qubits, paulis):
        if p == "X":
            c.add(GateKind.H, q)
        elif p == "Y":
            c.add(GateKind.H, q)
            c.add(GateKind.S, q)
    return c


def gen_pauli_exp(spec: PauliExpSpec) -> Circuit:
    """
    Concatenación de `count` exponenciales de Pauli aleatorias.

    Cada una elige peso k en [w_min, w_max], k cúbits distintos, Paulis no
    identidad y α ∈ {1, 3, 5, 7}·π/4; el T-count resultante es `count`.
    """
    rng = _generador(spec.seed)
    c = Circuit(spec.n_qubits)
    for _ in range(spec.count):
        k = int(rng.integers(spec.w_min, spec.w_max + 1))
        qubits = [int(q) for q in rng.choice(spec.n_qubits, size=k, replace=False)]
        paulis = [PAULIS[int(i)] for i in rng.integers(0, 3, size=k)]
        m = int(FASES_IMPARES[int(rng.integers(0, 4))])
        pauli_exponential(c, qubits, paulis, m)
    logger.info("Circuito Pauli: %d cúbits, %d exponenciales, %d compuertas",
                spec.n_qubits, spec.count, len(c))
    return c


# ======================================================================
# Hidden shift
# ======================================================================

@dataclass
class HiddenShiftSpec:
    """
    n_ccz cuenta las CCZ de todo el circuito (mitad en cada oráculo).
    n_cz y n_z son las compuertas Clifford aleatorias de g por oráculo;
    None toma m (= n_qubits/2) cuando alcanzan los cúbits.
    """
    n_qubits: int
    n_ccz: int
    n_cz: Optional[int] = None
    n_z: Optional[int] = None
    seed: int = 0

    def __post_init__(self):
        if self.n_qubits <= 0 or self.n_qubits % 2:
            raise ValueError(f"n_qubits debe ser par y positivo (recibió {self.n_qubits})")
        m = self.n_qubits // 2
        if self.n_ccz < 0 or self.n_ccz % 2:
            raise ValueError(f"n_ccz debe ser par y no negativo (recibió {self.n_ccz})")
        if self.n_ccz and m < 3:
            raise ValueError("Las CCZ requieren al menos 6 cúbits")
        if self.n_cz is None:
            self.n_cz = m if m >= 2 else 0
        if self.n_z is None:
            self.n_z = m
        if self.n_cz < 0 or self.n_z < 0:
            raise ValueError("n_cz y n_z no pueden ser negativos")
        if self.n_cz and m < 2:
            raise ValueError("Las CZ de g requieren al menos 4 cúbits")


# g(y) como lista de monomios sobre índices locales 0..m-1
Monomios = List[Tuple[int, ...]]


def _funcion_g(spec: HiddenShiftSpec, rng: np.random.Generator) -> Monomios:
    m = spec.n_qubits // 2
    monomios: Monomios = []
    for _ in range(spec.n_ccz // 2):
        monomios.append(tuple(sorted(int(q) for q in rng.choice(m, size=3, replace=False))))
    for _ in range(spec.n_cz):
        monomios.append(tuple(sorted(int(q) for q in rng.choice(m, size=2, replace=False))))
    for _ in range(spec.n_z):
        monomios.append((int(rng.integers(0, m)),))
    return monomios


def _oraculo(c: Circuit, m: int, monomios: Monomios, registro_g: int) -> None:
    """(-1)^{x·y ⊕ g(r)} con r el registro x (0) o y (m)"""
    for i in range(m):
        c.add(GateKind.CZ, i, m + i)
    for monomio in monomios:
        qs = [registro_g + q for q in monomio]
        tipo = {3: GateKind.CCZ, 2: GateKind.CZ, 1: GateKind.Z}[len(qs)]
        c.add(tipo, *qs)


def _capa_h(c: Circuit) -> None:
    for q in range(c.n_qubits):
        c.add(GateKind.H, q)


def _desplazamiento(c: Circuit, shift: Sequence[int]) -> None:
    # X = H Z H, para quedarse en {H, Z, CZ, CCZ}
    for q, bit in enumerate(shift):
        if bit:
            c.add(GateKind.H, q)
            c.add(GateKind.Z, q)
            c.add(GateKind.H, q)


def gen_hidden_shift(spec: HiddenShiftSpec) -> Tuple[Circuit, str]:
    """
    Circuito de hidden shift con f(x, y) = x·y ⊕ g(y) (Maiorana-McFarland).

    Estructura: H^n, X^s, O_f, X^s, H^n, O_f̃, H^n con f̃(x, y) = x·y ⊕ g(x).
    Sobre |0…0⟩ la salida es exactamente |s⟩.

    Returns:
        (circuito, s como cadena de bits con el cúbit 0 a la izquierda)
    """
    rng = _generador(spec.seed)
    n, m = spec.n_qubits, spec.n_qubits // 2
    shift = [int(b) for b in rng.integers(0, 2, size=n)]
    monomios = _funcion_g(spec, rng)
    c = Circuit(n)
    _capa_h(c)
    _desplazamiento(c, shift)
    _oraculo(c, m, monomios, registro_g=m)
    _desplazamiento(c, shift)
    _capa_h(c)
    _oraculo(c, m, monomios, registro_g=0)
    _capa_h(c)
    bits = "".join(str(b) for b in shift)
    logger.info("Hidden shift: %d cúbits, %d CCZ, s=%s", n, spec.n_ccz, bits)
    return c, bits


# ======================================================================
# Circuitos aleatorios
# ======================================================================

@dataclass
class RandomCircuitSpec:
    n_qubits: int
    n_gates: int
    t_max: int = 0
    ccz: bool = False
    seed: int = 0


CLIFFORD_1Q = (GateKind.H, GateKind.S, GateKind.SDG, GateKind.Z, GateKind.X)


def gen_random_circuit(n_qubits: int, n_gates: int, t_max: int = 0,
                       ccz: bool = False, seed: int = 0) -> Circuit:
    """
    Circuito aleatorio de compuertas Clifford con a lo sumo t_max compuertas T/Tdg.

    Con ccz=True también sortea CCZ (si hay al menos 3 cúbits); cada CCZ
    consume 7 del presupuesto t_max.
    """
    if n_qubits < 1:
        raise ValueError("Se necesita al menos un cúbit")
    rng = _generador(seed)
    c = Circuit(n_qubits)
    restantes = t_max
    for _ in range(n_gates):
        sorteo = float(rng.random())
        if sorteo < 0.3 and n_qubits >= 2:
            a, b = (int(q) for q in rng.choice(n_qubits, size=2, replace=False))
            c.add(GateKind.CNOT if sorteo < 0.2 else GateKind.CZ, a, b)
        elif sorteo < 0.45 and restantes > 0:
            if ccz and n_qubits >= 3 and restantes >= 7 and sorteo < 0.35:
                c.add(GateKind.CCZ, *(int(q) for q in rng.choice(n_qubits, size=3, replace=False)))
                restantes -= 7
            else:
                tipo = GateKind.T if rng.random() < 0.5 else GateKind.TDG
                c.add(tipo, int(rng.integers(0, n_qubits)))
                restantes -= 1
        else:
            tipo = CLIFFORD_1Q[int(rng.integers(0, len(CLIFFORD_1Q)))]
            c.add(tipo, int(rng.integers(0, n_qubits)))
    return c


# ======================================================================
# Metadatos
# ======================================================================

def sidecar(familia: str, spec: Any, circuito: Circuit, shift: Optional[str] = None,
            ccz_mode: str = "SevenT") -> Dict[str, Any]:
    """Metadatos que acompañan al archivo QASM"""
    datos = {
        "version": VERSION_SIDECAR,
        "family": familia,
        "prng": PRNG,
        "seed": spec.seed,
        "spec": asdict(spec),
        "ccz_mode": ccz_mode,
        "t_count": t_count(circuito, ccz_mode),
        "gates": len(circuito),
    }
    if shift is not None:
        datos["shift"] = shift
    return datos
