#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
SIMULACIÓN FUERTE
Amplitudes exactas, marginales por duplicación y muestreo cúbit a cúbit

- amplitude: ⟨out|U|in⟩ vía to_zx → plug → decompose
- marginal: P(fijados) vía double → decompose, siempre de la forma (x + y√2)/2^k
- sample: encadena marginales sobre los cúbits 0..n-1; el flotante sólo se
  usa para el sorteo, la probabilidad devuelta es exacta
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from apps.circuit_ir import Circuit, to_zx
from apps.decomposer import DecompositionReport, decompose, limite_de
from apps.zx_graph import ZXDiagram, double, plug_inputs, plug_outputs
from utils.config import SimulationConfig
from utils.errores import ConstructionError, InconsistencyError
from utils.formatters import formatear_probabilidad
from utils.scalar_ring import Scalar

logger = logging.getLogger(__name__)

EPSILON = 1e-9


@dataclass
class SampleResult:
    """Cadena muestreada con su probabilidad exacta"""
    bits: str
    probability: Scalar
    conditionals: List[float] = field(default_factory=list)
    report: DecompositionReport = field(default_factory=DecompositionReport.vacio)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bits": self.bits,
            "probability": formatear_probabilidad(self.probability),
            "probability_exact": str(self.probability),
            "probability_float": self.probability.to_float().real,
            "conditionals": [round(p, 12) for p in self.conditionals],
            "report": self.report.to_dict(),
        }


def _bits(texto: Sequence, n: int, nombre: str) -> List[int]:
    valores = [int(b) for b in texto]
    if len(valores) != n:
        raise ConstructionError(f"{nombre}: se esperaban {n} bits, llegaron {len(valores)}")
    if any(b not in (0, 1) for b in valores):
        raise ConstructionError(f"{nombre}: sólo se admiten bits 0/1")
    return valores


def _circuito_preparado(c: Circuit, cfg: SimulationConfig) -> ZXDiagram:
    """Diagrama del circuito con las entradas en |0…0⟩"""
    return plug_inputs(to_zx(c, cfg.ccz_mode), [0] * c.n_qubits)


def _limite(cfg: SimulationConfig, limite: Optional[float]) -> Optional[float]:
    """El límite recibido o uno nuevo a partir de cfg.timeout_secs"""
    return limite if limite is not None else limite_de(cfg)


def amplitude(c: Circuit, in_bits: Sequence, out_bits: Sequence,
              cfg: Optional[SimulationConfig] = None,
              limite: Optional[float] = None) -> Tuple[Scalar, DecompositionReport]:
    """
    Amplitud exacta ⟨out|U|in⟩.

    Raises:
        ConstructionError: si las longitudes no coinciden con el ancho del circuito
    """
    cfg = cfg or SimulationConfig()
    limite = _limite(cfg, limite)
    entrada = _bits(in_bits, c.n_qubits, "in_bits")
    salida = _bits(out_bits, c.n_qubits, "out_bits")
    d = plug_outputs(plug_inputs(to_zx(c, cfg.ccz_mode), entrada), salida)
    return decompose(d, cfg, limite=limite)


def marginal_diagram(c: Circuit, fixed: Dict[int, int],
                     cfg: Optional[SimulationConfig] = None) -> ZXDiagram:
    cfg = cfg or SimulationConfig()
    for q in fixed:
        if not 0 <= q < c.n_qubits:
            raise ConstructionError(f"Cúbit {q} fuera de rango")
    return double(_circuito_preparado(c, cfg), dict(fixed))


def marginal(c: Circuit, fixed: Dict[int, int],
             cfg: Optional[SimulationConfig] = None,
             limite: Optional[float] = None) -> Tuple[Scalar, DecompositionReport]:
    """
    Probabilidad exacta de observar `fixed` (cúbit -> bit) a la salida de U|0…0⟩.

    Args:
        limite: instante absoluto compartido con el resto de la operación
            (muestreo); sin él vale cfg.timeout_secs desde ahora

    Raises:
        InconsistencyError: si el resultado no es real
        DecompositionTimeout: al vencer el límite
    """
    cfg = cfg or SimulationConfig()
    limite = _limite(cfg, limite)
    valor, reporte = decompose(marginal_diagram(c, fixed, cfg), cfg, limite=limite)
    logger.info("Diagrama duplicado: T-count %d → %d tras simplificar",
                reporte.t_before_simp, reporte.initial_t)
    if valor.as_real() is None:
        raise InconsistencyError(f"Marginal no real: {valor}")
    return valor, reporte


def single_qubit_marginals(c: Circuit, cfg: Optional[SimulationConfig] = None,
                           limite: Optional[float] = None
                           ) -> Tuple[List[Scalar], DecompositionReport]:
    """P(q_i = 0) para cada cúbit, todas dentro del mismo límite de tiempo"""
    cfg = cfg or SimulationConfig()
    limite = _limite(cfg, limite)
    reporte = DecompositionReport.vacio()
    probabilidades = []
    for q in range(c.n_qubits):
        p, parcial = marginal(c, {q: 0}, cfg, limite)
        reporte.combinar(parcial)
        probabilidades.append(p)
    return probabilidades, reporte


def _condicional(conjunta: Scalar, previa: Scalar) -> float:
    anterior = previa.to_float().real
    if anterior <= 0.0:
        raise InconsistencyError(f"Probabilidad previa no positiva: {previa}")
    p = conjunta.to_float().real / anterior
    if p < -EPSILON or p > 1.0 + EPSILON:
        raise InconsistencyError(f"Condicional fuera de [0, 1]: {p}")
    return min(max(p, 0.0), 1.0)


def _muestreo_independiente(c: Circuit, rng: np.random.Generator, limite: Optional[float],
                            cfg: SimulationConfig) -> SampleResult:
    """Para circuitos declarados deterministas: producto de marginales de un cúbit"""
    marginales, reporte = single_qubit_marginals(c, cfg, limite)
    bits = []
    condicionales = []
    probabilidad = Scalar.uno()
    for p0 in marginales:
        p = _condicional(p0, Scalar.uno())
        b = 0 if rng.random() < p else 1
        bits.append(b)
        condicionales.append(p if b == 0 else 1.0 - p)
        probabilidad = probabilidad * (p0 if b == 0 else Scalar.uno() - p0)
    return SampleResult("".join(map(str, bits)), probabilidad, condicionales, reporte)


def sample(c: Circuit, seed: int = 0, cfg: Optional[SimulationConfig] = None,
           limite: Optional[float] = None) -> SampleResult:
    """
    Muestra una cadena de bits encadenando marginales exactas.

    En el paso i se calcula P(prefijo, q_i = 0) exacta; el condicional sólo
    se evalúa en flotante para el sorteo.

    Raises:
        InconsistencyError: condicional fuera de [-1e-9, 1 + 1e-9] o falla de
            completitud en modo depuración
        DecompositionTimeout: si el conjunto de marginales supera cfg.timeout_secs
    """
    cfg = cfg or SimulationConfig()
    rng = np.random.Generator(np.random.PCG64(seed))
    if cfg.independent_marginals:
        return _muestreo_independiente(c, rng, limite, cfg)

    reporte = DecompositionReport.vacio()
    fijados: Dict[int, int] = {}
    previa = Scalar.uno()
    condicionales = []
    for q in range(c.n_qubits):
        fijados[q] = 0
        p0, parcial = marginal(c, fijados, cfg, limite)
        reporte.combinar(parcial)
        p1 = previa - p0
        if cfg.debug:
            fijados[q] = 1
            p1_directa, parcial = marginal(c, fijados, cfg, limite)
            reporte.combinar(parcial)
            if p0 + p1_directa != previa:
                raise InconsistencyError(
                    f"Completitud fallida en el cúbit {q}: {p0} + {p1_directa} != {previa}")
        condicional = _condicional(p0, previa)
        bit = 0 if rng.random() < condicional else 1
        fijados[q] = bit
        previa = p0 if bit == 0 else p1
        condicionales.append(condicional if bit == 0 else 1.0 - condicional)
        logger.info("Cúbit %d: P(0 | prefijo) = %.6f → %d", q, condicional, bit)
    bits = "".join(str(fijados[q]) for q in range(c.n_qubits))
    return SampleResult(bits, previa, condicionales, reporte)
