#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
LÍNEA DE COMANDOS Y ARNÉS DE BENCHMARK

Subcomandos:
- gen: genera una instancia (QASM + JSON acompañante)
- sample / amplitude / marginal: imprimen un RunRecord JSON en stdout
- bench: una fila CSV por instancia generada
- report: resume un CSV de bench en un PDF

Códigos de salida: 0 éxito, 2 uso, 3 tiempo agotado, 4 inconsistencia interna.
"""

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from apps.benchgen import (HiddenShiftSpec, PauliExpSpec, RandomCircuitSpec,
                           gen_hidden_shift, gen_pauli_exp, gen_random_circuit,
                           sidecar)
from apps.circuit_ir import Circuit, t_count, to_zx
from apps.decomposer import DecompositionReport, decompose, limite_de
from apps.simplifier import Traza
from apps.simulator import marginal_diagram, sample
from apps.zx_graph import plug_inputs, plug_outputs
from utils.config import (MODOS_CCZ, POLITICAS_OBJETIVO, PROFUNDIDAD_DEFECTO,
                          TIMEOUT_DEFECTO, SimulationConfig)
from utils.data_loader import DataLoader
from utils.errores import DecompositionTimeout, InconsistencyError
from utils.formatters import formatear_probabilidad

logger = logging.getLogger(__name__)

EXITO = 0
ERROR_USO = 2
TIEMPO_AGOTADO = 3
INCONSISTENCIA = 4

VERSION_ESQUEMA = 1
FAMILIAS_GEN = ("pauli", "hidden-shift", "random")
FAMILIAS_BENCH = ("pauli", "hidden-shift")


# ======================================================================
# Registro de una corrida
# ======================================================================

@dataclass
class RunRecord:
    """Resultado de una corrida, tal como se imprime en JSON"""
    command: str
    circuit: Optional[str] = None
    spec: Dict[str, Any] = field(default_factory=dict)
    config: Dict[str, Any] = field(default_factory=dict)
    outcome: str = "success"
    bits: Optional[str] = None
    expected_bits: Optional[str] = None
    value: Optional[str] = None
    probability: Optional[str] = None
    probability_float: Optional[float] = None
    t_count: int = 0
    t_before_simp: int = 0
    initial_t: int = 0
    leaf_terms: int = 0
    naive_terms: str = "0"
    bss_after_simp: str = "0"
    reduction_factor: str = "0"
    reduction_factor_simp: str = "0"
    max_live_diagrams: int = 0
    pruned_branches: int = 0
    decompositions: int = 0
    wall_time_ms: float = 0.0
    schema_version: int = VERSION_ESQUEMA

    def con_reporte(self, reporte: Optional[DecompositionReport]) -> "RunRecord":
        """Copia los contadores de un reporte (completo o parcial)"""
        if reporte is None:
            return self
        self.t_before_simp = reporte.t_before_simp
        self.initial_t = reporte.initial_t
        self.leaf_terms = reporte.leaf_terms
        self.naive_terms = str(reporte.naive_terms)
        self.bss_after_simp = str(reporte.bss_after_simp)
        self.reduction_factor = str(reporte.reduction_factor())
        self.reduction_factor_simp = str(reporte.reduction_factor_simp())
        self.max_live_diagrams = reporte.max_live_diagrams
        self.pruned_branches = reporte.pruned_branches
        self.decompositions = reporte.decompositions
        return self

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


def _imprimir(registro: RunRecord) -> None:
    sys.stdout.write(registro.to_json() + "\n")
    sys.stdout.flush()


def _escribir_traza(traza: Optional[Traza], ruta: Optional[str]) -> None:
    if traza is None or not ruta:
        return
    Path(ruta).write_text(traza.a_lineas_json(), encoding="utf-8")
    logger.info("Traza de %d pasos escrita en %s", len(traza), ruta)


def _configuracion(args: argparse.Namespace) -> SimulationConfig:
    if getattr(args, "timeout_secs", None) is not None and args.timeout_secs <= 0:
        args.timeout_secs = None
    return SimulationConfig.from_args(args)


def _bits_texto(texto: str, nombre: str) -> List[int]:
    if any(ch not in "01" for ch in texto):
        raise ValueError(f"{nombre} sólo admite caracteres 0/1 (recibió '{texto}')")
    return [int(ch) for ch in texto]


def _fijados(pares: List[str], n_qubits: int) -> Dict[int, int]:
    """['0=1', '3=0'] -> {0: 1, 3: 0}"""
    fijados: Dict[int, int] = {}
    for par in pares:
        try:
            q, b = (int(x) for x in par.split("="))
        except ValueError:
            raise ValueError(f"--fix espera cúbit=bit (recibió '{par}')") from None
        if b not in (0, 1) or not 0 <= q < n_qubits:
            raise ValueError(f"--fix fuera de rango: '{par}'")
        fijados[q] = b
    return fijados


# ======================================================================
# Argumentos
# ======================================================================

def _argumentos_simulacion(p: argparse.ArgumentParser, con_circuito: bool = True) -> None:
    if con_circuito:
        p.add_argument("circuit", help="Archivo QASM")
    p.add_argument("--timeout-secs", type=float, default=None,
                   help=("Límite cooperativo para la operación completa; en bench, uno por "
                         f"instancia (defecto {TIMEOUT_DEFECTO:.0f}; 0 = sin límite)"))
    p.add_argument("--threads", type=int, default=1, help="Workers del descomponedor")
    p.add_argument("--depth", type=int, default=PROFUNDIDAD_DEFECTO,
                   help="Niveles expandidos a lo ancho antes de repartir ramas")
    p.add_argument("--ccz-mode", choices=MODOS_CCZ, default="SevenT")
    p.add_argument("--policy", choices=POLITICAS_OBJETIVO, default="lowest-id",
                   help="Política de elección de spiders T")
    p.add_argument("--debug", action="store_true",
                   help="Log DEBUG, trazas de reescritura y auditorías (completitud, aditividad)")


def _completar_timeout(args: argparse.Namespace) -> None:
    if args.timeout_secs is None:
        args.timeout_secs = TIMEOUT_DEFECTO


def argumentos_gen(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", choices=FAMILIAS_GEN)
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--tcount", type=int, help="pauli: cantidad de exponenciales; random: máximo de T")
    p.add_argument("--ccz", type=int, help="hidden-shift: CCZ en todo el circuito (par)")
    p.add_argument("--gates", type=int, default=100, help="random: cantidad de compuertas")
    p.add_argument("--w-min", type=int, default=2)
    p.add_argument("--w-max", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ccz-mode", choices=MODOS_CCZ, default="SevenT")
    p.add_argument("--out", required=True, help="Ruta base de la instancia (sin extensión)")


def argumentos_sample(p: argparse.ArgumentParser) -> None:
    _argumentos_simulacion(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--independent", action="store_true",
                   help="Producto de marginales de un cúbit (circuitos deterministas)")


def argumentos_amplitude(p: argparse.ArgumentParser) -> None:
    _argumentos_simulacion(p)
    p.add_argument("--input", dest="in_bits", default=None, help="Bits de entrada (defecto 0…0)")
    p.add_argument("--output", dest="out_bits", required=True, help="Bits de salida")
    p.add_argument("--trace", default=None, help="Escribe los pasos de reescritura (JSON por línea)")


def argumentos_marginal(p: argparse.ArgumentParser) -> None:
    _argumentos_simulacion(p)
    p.add_argument("--fix", action="append", required=True, metavar="Q=B",
                   help="Cúbit fijado a la salida (repetible)")
    p.add_argument("--trace", default=None, help="Escribe los pasos de reescritura (JSON por línea)")


def argumentos_bench(p: argparse.ArgumentParser) -> None:
    _argumentos_simulacion(p, con_circuito=False)
    p.add_argument("--preset", default=None, help="Preset de data/presets.json")
    p.add_argument("--family", choices=FAMILIAS_BENCH, default=None)
    p.add_argument("--qubits", type=int, default=None)
    p.add_argument("--sizes", type=int, nargs="+", default=None,
                   help="pauli: T-counts; hidden-shift: cantidades de CCZ")
    p.add_argument("--per-size", type=int, default=None)
    p.add_argument("--seed", type=int, default=None, help="Semilla de la primera instancia")
    p.add_argument("--out", default=None, help="CSV de salida (defecto stdout)")


def argumentos_report(p: argparse.ArgumentParser) -> None:
    p.add_argument("csv", help="CSV producido por bench")
    p.add_argument("--out", required=True, help="PDF de salida")
    p.add_argument("--title", default=None)


# ======================================================================
# gen
# ======================================================================

def generar_instancia(familia: str, n_qubits: int, tamano: int, seed: int,
                      ccz_mode: str = "SevenT", w_min: int = 2, w_max: int = 4,
                      n_gates: int = 100) -> Tuple[Circuit, Dict[str, Any]]:
    """
    Genera un circuito de la familia y su sidecar.

    `tamano` es el T-count (pauli, random) o la cantidad de CCZ (hidden-shift).
    """
    if familia == "pauli":
        spec = PauliExpSpec(n_qubits, tamano, w_min=w_min, w_max=min(w_max, n_qubits), seed=seed)
        circuito = gen_pauli_exp(spec)
        return circuito, sidecar(familia, spec, circuito, ccz_mode=ccz_mode)
    if familia == "hidden-shift":
        spec = HiddenShiftSpec(n_qubits, tamano, seed=seed)
        circuito, shift = gen_hidden_shift(spec)
        return circuito, sidecar(familia, spec, circuito, shift=shift, ccz_mode=ccz_mode)
    if familia == "random":
        spec = RandomCircuitSpec(n_qubits, n_gates, t_max=tamano, ccz=n_qubits >= 3, seed=seed)
        circuito = gen_random_circuit(**asdict(spec))
        return circuito, sidecar(familia, spec, circuito, ccz_mode=ccz_mode)
    raise ValueError(f"Familia '{familia}' no reconocida. Opciones válidas: {list(FAMILIAS_GEN)}")


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "hidden-shift":
        tamano = args.ccz
        falta = "--ccz"
    else:
        tamano = args.tcount if args.tcount is not None else (0 if args.family == "random" else None)
        falta = "--tcount"
    if tamano is None:
        sys.stderr.write(f"gen {args.family}: falta {falta}\n")
        return ERROR_USO
    circuito, datos = generar_instancia(args.family, args.qubits, tamano, args.seed,
                                        ccz_mode=args.ccz_mode, w_min=args.w_min,
                                        w_max=args.w_max, n_gates=args.gates)
    ruta_qasm, ruta_json = DataLoader.escribir_instancia(circuito, datos, args.out)
    sys.stdout.write(json.dumps({"qasm": str(ruta_qasm), "sidecar": str(ruta_json),
                                 "t_count": datos["t_count"]}, ensure_ascii=False) + "\n")
    return EXITO


# ======================================================================
# sample / amplitude / marginal
# ======================================================================

def _registro_base(comando: str, args: argparse.Namespace, circuito: Circuit,
                   cfg: SimulationConfig) -> RunRecord:
    datos = DataLoader.cargar_sidecar(args.circuit) or {}
    return RunRecord(
        command=comando,
        circuit=str(args.circuit),
        spec=datos.get("spec", {"n_qubits": circuito.n_qubits, "gates": len(circuito)}),
        config=cfg.as_dict(),
        expected_bits=datos.get("shift"),
        t_count=t_count(circuito, cfg.ccz_mode),
    )


def _tiempo_agotado(registro: RunRecord, error: DecompositionTimeout, inicio: float) -> int:
    registro.outcome = "timeout"
    registro.con_reporte(error.reporte)
    registro.wall_time_ms = round((time.perf_counter() - inicio) * 1000.0, 3)
    _imprimir(registro)
    logger.warning("%s", error)
    return TIEMPO_AGOTADO


def cmd_sample(args: argparse.Namespace) -> int:
    _completar_timeout(args)
    cfg = _configuracion(args)
    circuito = DataLoader.cargar_circuito(args.circuit)
    registro = _registro_base("sample", args, circuito, cfg)
    registro.spec = dict(registro.spec, sample_seed=args.seed)
    inicio = time.perf_counter()
    try:
        resultado = sample(circuito, seed=args.seed, cfg=cfg)
    except DecompositionTimeout as e:
        return _tiempo_agotado(registro, e, inicio)
    registro.bits = resultado.bits
    registro.value = str(resultado.probability)
    registro.probability = formatear_probabilidad(resultado.probability)
    registro.probability_float = resultado.probability.to_float().real
    registro.con_reporte(resultado.report)
    registro.wall_time_ms = round((time.perf_counter() - inicio) * 1000.0, 3)
    _imprimir(registro)
    return EXITO


def cmd_amplitude(args: argparse.Namespace) -> int:
    _completar_timeout(args)
    cfg = _configuracion(args)
    circuito = DataLoader.cargar_circuito(args.circuit)
    entrada = _bits_texto(args.in_bits or "0" * circuito.n_qubits, "--input")
    salida = _bits_texto(args.out_bits, "--output")
    registro = _registro_base("amplitude", args, circuito, cfg)
    registro.bits = args.out_bits
    traza = Traza() if (cfg.debug or args.trace) else None
    inicio = time.perf_counter()
    limite = limite_de(cfg)
    try:
        d = plug_outputs(plug_inputs(to_zx(circuito, cfg.ccz_mode), entrada), salida)
        valor, reporte = decompose(d, cfg, traza, limite)
    except DecompositionTimeout as e:
        return _tiempo_agotado(registro, e, inicio)
    registro.value = str(valor)
    registro.probability = formatear_probabilidad(valor.abs2())
    registro.probability_float = valor.abs2().to_float().real
    registro.con_reporte(reporte)
    registro.wall_time_ms = round((time.perf_counter() - inicio) * 1000.0, 3)
    _escribir_traza(traza, args.trace)
    _imprimir(registro)
    return EXITO


def cmd_marginal(args: argparse.Namespace) -> int:
    _completar_timeout(args)
    cfg = _configuracion(args)
    circuito = DataLoader.cargar_circuito(args.circuit)
    fijados = _fijados(args.fix, circuito.n_qubits)
    registro = _registro_base("marginal", args, circuito, cfg)
    registro.bits = ",".join(f"{q}={b}" for q, b in sorted(fijados.items()))
    traza = Traza() if (cfg.debug or args.trace) else None
    inicio = time.perf_counter()
    limite = limite_de(cfg)
    try:
        valor, reporte = decompose(marginal_diagram(circuito, fijados, cfg), cfg, traza, limite)
    except DecompositionTimeout as e:
        return _tiempo_agotado(registro, e, inicio)
    if valor.as_real() is None:
        raise InconsistencyError(f"Marginal no real: {valor}")
    registro.value = str(valor)
    registro.probability = formatear_probabilidad(valor)
    registro.probability_float = valor.to_float().real
    registro.con_reporte(reporte)
    registro.wall_time_ms = round((time.perf_counter() - inicio) * 1000.0, 3)
    _escribir_traza(traza, args.trace)
    _imprimir(registro)
    return EXITO


# ======================================================================
# bench
# ======================================================================

DEFECTOS_BENCH = {
    "family": "pauli",
    "qubits": 50,
    "sizes": [10, 15, 20, 25, 30],
    "per_size": 5,
    "seed": 0,
}


def _aplicar_preset(args: argparse.Namespace, cargador: DataLoader) -> None:
    """Completa los flags no indicados con el preset y luego con los defectos"""
    preset = cargador.cargar_preset(args.preset) if args.preset else {}
    for clave in ("family", "qubits", "sizes", "per_size", "seed", "timeout_secs", "ccz_mode", "depth"):
        if getattr(args, clave, None) is None and clave in preset:
            setattr(args, clave, preset[clave])
    for clave, valor in DEFECTOS_BENCH.items():
        if getattr(args, clave) is None:
            setattr(args, clave, valor)
    _completar_timeout(args)


def fila_bench(familia: str, n_qubits: int, tamano: int, seed: int,
               cfg: SimulationConfig) -> Dict[str, Any]:
    """Genera una instancia, la muestrea y devuelve su fila CSV"""
    circuito, datos = generar_instancia(familia, n_qubits, tamano, seed, ccz_mode=cfg.ccz_mode)
    fila: Dict[str, Any] = {
        "schema_version": VERSION_ESQUEMA,
        "family": familia,
        "n_qubits": n_qubits,
        "size": tamano,
        "seed": seed,
        "t_count": datos["t_count"],
        "expected_bits": datos.get("shift", ""),
    }
    registro = RunRecord(command="bench")
    inicio = time.perf_counter()
    try:
        resultado = sample(circuito, seed=seed, cfg=cfg, limite=limite_de(cfg))
        registro.bits = resultado.bits
        registro.probability = formatear_probabilidad(resultado.probability)
        registro.con_reporte(resultado.report)
    except DecompositionTimeout as e:
        registro.outcome = "timeout"
        registro.con_reporte(e.reporte)
    registro.wall_time_ms = round((time.perf_counter() - inicio) * 1000.0, 3)
    fila.update({
        "outcome": registro.outcome,
        "bits": registro.bits or "",
        "matches_expected": bool(fila["expected_bits"]) and registro.bits == fila["expected_bits"],
        "probability": registro.probability or "",
        "t_before_simp": registro.t_before_simp,
        "initial_t": registro.initial_t,
        "leaf_terms": registro.leaf_terms,
        "naive_terms": registro.naive_terms,
        "bss_after_simp": registro.bss_after_simp,
        "reduction_factor": registro.reduction_factor,
        "reduction_factor_simp": registro.reduction_factor_simp,
        "wall_time_ms": registro.wall_time_ms,
    })
    logger.info("bench %s n=%d tamaño=%d semilla=%d: %s en %.0f ms",
                familia, n_qubits, tamano, seed, registro.outcome, registro.wall_time_ms)
    return fila


def ejecutar_bench(familia: str, n_qubits: int, tamanos: List[int], por_tamano: int,
                   seed: int, cfg: SimulationConfig,
                   cargador: Optional[DataLoader] = None) -> pd.DataFrame:
    """
    Tabla con una fila por instancia; las semillas son seed, seed+1, …
    dentro de cada tamaño.
    """
    cargador = cargador or DataLoader()
    columnas = cargador.campos("bench_csv")
    filas = [fila_bench(familia, n_qubits, tamano, seed + i, cfg)
             for tamano in tamanos for i in range(por_tamano)]
    return pd.DataFrame(filas, columns=columnas)


def cmd_bench(args: argparse.Namespace) -> int:
    cargador = DataLoader()
    _aplicar_preset(args, cargador)
    if args.family not in FAMILIAS_BENCH:
        sys.stderr.write(f"bench: familia '{args.family}' no reconocida. "
                         f"Opciones válidas: {list(FAMILIAS_BENCH)}\n")
        return ERROR_USO
    cfg = _configuracion(args)
    tabla = ejecutar_bench(args.family, args.qubits, list(args.sizes), args.per_size,
                           args.seed, cfg, cargador)
    if args.out:
        tabla.to_csv(args.out, index=False)
        logger.info("CSV con %d filas escrito en %s", len(tabla), args.out)
    else:
        tabla.to_csv(sys.stdout, index=False)
    return EXITO


# ======================================================================
# report
# ======================================================================

def cmd_report(args: argparse.Namespace) -> int:
    from apps.reporte_pdf import cargar_bench, generar_pdf_bench

    tabla = cargar_bench(args.csv)
    buffer = generar_pdf_bench(tabla, titulo=args.title)
    Path(args.out).write_bytes(buffer.getvalue())
    sys.stdout.write(json.dumps({"pdf": str(args.out), "rows": len(tabla)}) + "\n")
    return EXITO
