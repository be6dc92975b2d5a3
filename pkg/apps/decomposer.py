#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DESCOMPOSICIÓN EN SUMA DE ESTABILIZADORES
Convierte un diagrama cerrado no Clifford en un escalar exacto

Procedimiento por nodo del árbol:
1. full_simp
2. con 6 o más spiders impares: aislar 6 hojas π/4 y aplicar los 7 términos BSS
3. con 2 a 5: descomposición por pares; con 1: descomposición simple
4. cada hijo se simplifica; los de escalar cero se podan

Los primeros niveles se expanden a lo ancho y el resto en profundidad por
rama, opcionalmente repartido en un pool de procesos. La suma es exacta, así
que el resultado no depende del orden de ejecución.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from decimal import Decimal, localcontext
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from apps.benchgen import naive_terms
from apps.simplifier import Traza, es_tope_gadget, simplificar
from apps.zx_graph import EdgeKind, VertexKind, ZXDiagram, es_impar, tensor
from utils.config import SimulationConfig
from utils.errores import (ConstructionError, DecompositionTimeout,
                           InconsistencyError, OracleCapExceeded, RuleNotApplicable)
from utils.scalar_ring import Scalar

logger = logging.getLogger(__name__)


@dataclass
class DecompositionReport:
    """Contadores de una descomposición (o de varias, acumuladas)"""
    leaf_terms: int = 0
    max_live_diagrams: int = 0
    t_before_simp: int = 0
    initial_t: int = 0
    naive_terms: int = 1
    bss_after_simp: int = 1
    wall_time: float = 0.0
    pruned_branches: int = 0
    # profundidad -> {T-count: cantidad de diagramas}
    depth_histogram: Dict[int, Dict[int, int]] = field(default_factory=dict)
    decompositions: int = 1

    def registrar_nodo(self, profundidad: int, t: int) -> None:
        nivel = self.depth_histogram.setdefault(profundidad, {})
        nivel[t] = nivel.get(t, 0) + 1

    def combinar(self, otro: "DecompositionReport") -> "DecompositionReport":
        """Acumula otro reporte (muestreo: una descomposición por marginal)"""
        self.leaf_terms += otro.leaf_terms
        self.max_live_diagrams = max(self.max_live_diagrams, otro.max_live_diagrams)
        self.t_before_simp = max(self.t_before_simp, otro.t_before_simp)
        self.initial_t = max(self.initial_t, otro.initial_t)
        self.naive_terms += otro.naive_terms
        self.bss_after_simp += otro.bss_after_simp
        self.wall_time += otro.wall_time
        self.pruned_branches += otro.pruned_branches
        self.decompositions += otro.decompositions
        for profundidad, cuentas in otro.depth_histogram.items():
            for t, n in cuentas.items():
                nivel = self.depth_histogram.setdefault(profundidad, {})
                nivel[t] = nivel.get(t, 0) + n
        return self

    @classmethod
    def vacio(cls) -> "DecompositionReport":
        return cls(naive_terms=0, bss_after_simp=0, decompositions=0)

    def reduction_factor(self) -> Decimal:
        """naive_terms / leaf_terms como decimal"""
        return _cociente_decimal(self.naive_terms, self.leaf_terms)

    def reduction_factor_simp(self) -> Decimal:
        return _cociente_decimal(self.bss_after_simp, self.leaf_terms)

    def to_dict(self) -> Dict[str, Any]:
        datos = asdict(self)
        datos["naive_terms"] = str(self.naive_terms)
        datos["bss_after_simp"] = str(self.bss_after_simp)
        datos["wall_time"] = round(self.wall_time, 6)
        datos["depth_histogram"] = {
            str(p): {str(t): n for t, n in sorted(cuentas.items())}
            for p, cuentas in sorted(self.depth_histogram.items())
        }
        return datos


def _cociente_decimal(numerador: int, denominador: int) -> Decimal:
    if denominador == 0:
        return Decimal(0)
    with localcontext() as contexto:
        contexto.prec = 12
        return Decimal(numerador) / Decimal(denominador)


# ======================================================================
# Aislamiento de hojas π/4
# ======================================================================

def _es_hoja(d: ZXDiagram, v: int) -> bool:
    return (d.has_vertex(v) and d.kind(v) == VertexKind.Z_SPIDER
            and d.degree(v) == 1 and d.phase(v) == 1)


def _desfusionar(d: ZXDiagram, v: int) -> int:
    if not d.has_vertex(v) or d.is_boundary(v) or not es_impar(d.phase(v)):
        raise RuleNotApplicable("unfuse_t", f"{v} no es un spider de fase impar")
    d.add_to_phase(v, -1)
    conector = d.add_vertex(VertexKind.Z_SPIDER, 0)
    hoja = d.add_vertex(VertexKind.Z_SPIDER, 1)
    d.add_edge(v, conector, EdgeKind.HADAMARD)
    d.add_edge(conector, hoja, EdgeKind.HADAMARD)
    return hoja


def unfuse_t(d: ZXDiagram, v: int) -> Tuple[ZXDiagram, int]:
    """
    Separa un factor π/4 de v en una hoja nueva.

    v queda con fase(v) - π/4 y se une a la hoja por un conector de fase 0
    (v -H- conector -H- hoja), con escalar exactamente 1.

    Returns:
        (diagrama nuevo, id de la hoja)

    Raises:
        RuleNotApplicable: si la fase de v es par
    """
    resultado = d.copy()
    hoja = _desfusionar(resultado, v)
    return resultado, hoja


def _aislar(d: ZXDiagram, v: int) -> int:
    """Hoja π/4 para v (el propio v si ya lo es)"""
    if _es_hoja(d, v):
        return v
    return _desfusionar(d, v)


def _verificar_hojas(d: ZXDiagram, vs: Sequence[int], cantidad: int, regla: str) -> None:
    if len(vs) != cantidad or len(set(vs)) != cantidad:
        raise RuleNotApplicable(regla, f"se requieren {cantidad} hojas distintas")
    for v in vs:
        if not _es_hoja(d, v):
            raise RuleNotApplicable(regla, f"{v} no es una hoja de fase π/4")


# ======================================================================
# Términos
# ======================================================================

def _nuevo_vecino(d: ZXDiagram, fase: int, hojas: Sequence[int],
                  tipo: EdgeKind = EdgeKind.HADAMARD) -> int:
    z = d.add_vertex(VertexKind.Z_SPIDER, fase)
    for v in hojas:
        d.add_edge(z, v, tipo)
    return z


def _fijar_fases(d: ZXDiagram, hojas: Sequence[int], fase: int) -> None:
    for v in hojas:
        d.set_phase(v, fase)


def _termino_producto(fase: int) -> Callable[[ZXDiagram, Sequence[int]], None]:
    def aplicar(d: ZXDiagram, hojas: Sequence[int]) -> None:
        _fijar_fases(d, hojas, fase)
    return aplicar


def _termino_paridad(fase_central: int) -> Callable[[ZXDiagram, Sequence[int]], None]:
    def aplicar(d: ZXDiagram, hojas: Sequence[int]) -> None:
        _fijar_fases(d, hojas, 2)
        _nuevo_vecino(d, fase_central, hojas)
    return aplicar


def _termino_ghz(d: ZXDiagram, hojas: Sequence[int]) -> None:
    _fijar_fases(d, hojas, 0)
    _nuevo_vecino(d, 6, hojas, EdgeKind.SIMPLE)


# Aristas del pentágono entre los spiders auxiliares del estado de grafo
PENTAGONO = ((0, 2), (0, 3), (1, 3), (1, 4), (2, 4))


def _termino_grafo(orden: Sequence[int]) -> Callable[[ZXDiagram, Sequence[int]], None]:
    def aplicar(d: ZXDiagram, hojas: Sequence[int]) -> None:
        vs = [hojas[i] for i in orden]
        _fijar_fases(d, vs[:5], 0)
        d.set_phase(vs[5], 4)
        auxiliares = []
        for v in vs[:5]:
            w = d.add_vertex(VertexKind.Z_SPIDER, 0)
            d.add_edge(v, w, EdgeKind.HADAMARD)
            d.add_edge(w, vs[5], EdgeKind.HADAMARD)
            auxiliares.append(w)
        for i, j in PENTAGONO:
            d.add_edge(auxiliares[i], auxiliares[j], EdgeKind.HADAMARD)
    return aplicar


# (coeficiente, transformación) de |T⟩^{⊗6} sin normalizar = Σ_x ω^{|x|}|x⟩
TERMINOS_BSS: Tuple[Tuple[Scalar, Callable], ...] = (
    (Scalar(2, -1, 0, 1, -1), _termino_producto(0)),
    (Scalar(2, -1, 0, 1, 1), _termino_producto(4)),
    (Scalar(0, 0, -2, 0, 0), _termino_paridad(4)),
    (Scalar(0, -2, 0, -2, 0), _termino_paridad(0)),
    (Scalar(0, 2, 0, 0, 0), _termino_ghz),
    (Scalar(0, 8, 0, 8, 0), _termino_grafo((0, 1, 2, 3, 4, 5))),
    (Scalar(0, 8, 0, 8, 0), _termino_grafo((0, 1, 3, 4, 5, 2))),
)


def _expandir_terminos(d: ZXDiagram, hojas: Sequence[int], terminos) -> List[ZXDiagram]:
    hijos = []
    for coeficiente, aplicar in terminos:
        hijo = d.copy()
        aplicar(hijo, hojas)
        hijo.mult_scalar(coeficiente)
        hijos.append(hijo)
    return hijos


def apply_bss(d: ZXDiagram, vs: Sequence[int]) -> List[ZXDiagram]:
    """
    Reemplaza seis hojas π/4 por los 7 términos estabilizadores.

    La suma de los valores de los 7 diagramas es exactamente el valor de d.

    Raises:
        RuleNotApplicable: si vs no son 6 hojas de fase π/4 y grado 1
    """
    _verificar_hojas(d, vs, 6, "BSS")
    return _expandir_terminos(d, vs, TERMINOS_BSS)


def _par_igual(d: ZXDiagram, hojas: Sequence[int]) -> None:
    # [x1 = x2]·i^{x1}
    d.set_phase(hojas[0], 2)
    d.set_phase(hojas[1], 0)
    _nuevo_vecino(d, 0, hojas)


def _par_distinto(d: ZXDiagram, hojas: Sequence[int]) -> None:
    # [x1 ≠ x2]
    _fijar_fases(d, hojas, 0)
    _nuevo_vecino(d, 4, hojas)


TERMINOS_PAR = (
    (Scalar.uno(), _par_igual),
    (Scalar.from_phase(1), _par_distinto),
)


def apply_pairwise(d: ZXDiagram, vs: Sequence[int]) -> List[ZXDiagram]:
    """|T⟩⊗|T⟩ = ½(|00⟩ + i|11⟩) + ½ω(|01⟩ + |10⟩), en dos diagramas"""
    _verificar_hojas(d, vs, 2, "Pairwise")
    return _expandir_terminos(d, vs, TERMINOS_PAR)


def _proyector(fase: int) -> Callable[[ZXDiagram, Sequence[int]], None]:
    def aplicar(d: ZXDiagram, hojas: Sequence[int]) -> None:
        _fijar_fases(d, hojas, 0)
        _nuevo_vecino(d, fase, hojas)
    return aplicar


TERMINOS_SIMPLE = (
    (Scalar.one_over_sqrt2_power(1), _proyector(0)),
    (Scalar.from_phase(1) * Scalar.one_over_sqrt2_power(1), _proyector(4)),
)


def apply_single(d: ZXDiagram, v: int) -> List[ZXDiagram]:
    """|T⟩ = (1/√2)|0⟩ + (ω/√2)|1⟩, en dos diagramas"""
    _verificar_hojas(d, [v], 1, "Single")
    return _expandir_terminos(d, [v], TERMINOS_SIMPLE)


# ======================================================================
# Selección de objetivos
# ======================================================================

def _por_id(d: ZXDiagram, impares: List[int]) -> List[int]:
    return sorted(impares, key=lambda v: (es_tope_gadget(d, v), v))


def _mas_conectados(d: ZXDiagram, impares: List[int]) -> List[int]:
    return sorted(impares, key=lambda v: (-d.degree(v), v))


POLITICAS: Dict[str, Callable[[ZXDiagram, List[int]], List[int]]] = {
    "lowest-id": _por_id,
    "most-connected": _mas_conectados,
}


def target_policies() -> List[str]:
    return list(POLITICAS)


def _ordenar_impares(d: ZXDiagram, politica: str) -> List[int]:
    if politica not in POLITICAS:
        raise ValueError(f"Política '{politica}' no reconocida. Opciones válidas: {list(POLITICAS)}")
    return POLITICAS[politica](d, d.odd_spiders())


def select_targets(d: ZXDiagram, policy: str = "lowest-id") -> List[int]:
    """
    Seis spiders impares a descomponer.

    Por defecto: los de menor id, primero los que no son topes de gadget.

    Raises:
        RuleNotApplicable: con menos de 6 spiders impares
    """
    orden = _ordenar_impares(d, policy)
    if len(orden) < 6:
        raise RuleNotApplicable("select_targets", f"sólo hay {len(orden)} spiders impares")
    return orden[:6]


# ======================================================================
# Conductor
# ======================================================================

def _expandir(d: ZXDiagram, politica: str) -> List[ZXDiagram]:
    """Hijos simplificados y no nulos de un nodo no Clifford"""
    orden = _ordenar_impares(d, politica)
    base = d.copy()
    if len(orden) >= 6:
        hojas = [_aislar(base, v) for v in orden[:6]]
        hijos = _expandir_terminos(base, hojas, TERMINOS_BSS)
    elif len(orden) >= 2:
        hojas = [_aislar(base, v) for v in orden[:2]]
        hijos = _expandir_terminos(base, hojas, TERMINOS_PAR)
    else:
        hojas = [_aislar(base, orden[0])]
        hijos = _expandir_terminos(base, hojas, TERMINOS_SIMPLE)
    for hijo in hijos:
        simplificar(hijo)
    return hijos


def auditar_ramas(d: ZXDiagram, hijos: Sequence[ZXDiagram], cap: int = 14,
                  boundary_cap: int = 10) -> None:
    """
    Compara con el oráculo tensorial el valor de un nodo con la suma de sus hijos.

    Raises:
        OracleCapExceeded: si el nodo o algún hijo supera los topes del oráculo
        InconsistencyError: si la suma de los hijos difiere del valor del nodo
    """
    padre = complex(tensor(d, cap, boundary_cap))
    suma = sum((complex(tensor(h, cap, boundary_cap)) for h in hijos), 0j)
    if abs(padre - suma) > 1e-9 * max(1.0, abs(padre)):
        raise InconsistencyError(
            f"Aditividad fallida: el nodo vale {padre:.12g} y sus {len(hijos)} hijos suman {suma:.12g}")


def _auditar(d: ZXDiagram, hijos: Sequence[ZXDiagram], topes: Optional[Tuple[int, int]]) -> None:
    if topes is None:
        return
    try:
        auditar_ramas(d, hijos, *topes)
    except OracleCapExceeded:
        logger.debug("Auditoría omitida: el nodo supera los topes del oráculo %s", topes)


def limite_de(cfg: SimulationConfig) -> Optional[float]:
    """Instante absoluto (reloj de time.time) en que vence cfg.timeout_secs"""
    if not cfg.timeout_secs:
        return None
    return time.time() + cfg.timeout_secs


def _es_hoja_clifford(d: ZXDiagram) -> bool:
    if d.odd_count():
        return False
    if d.num_vertices():
        raise InconsistencyError(
            f"Diagrama Clifford cerrado sin reducir ({d.num_vertices()} vértices)")
    return True


@dataclass
class _ResultadoRama:
    total: Scalar
    reporte: DecompositionReport
    expirado: bool = False


Trabajo = Tuple[ZXDiagram, int, str, Optional[float], Optional[Tuple[int, int]]]


def _resolver_rama(trabajo: Trabajo) -> _ResultadoRama:
    """Recorrido en profundidad de una rama; se ejecuta también en workers"""
    raiz, profundidad_raiz, politica, limite, topes = trabajo
    reporte = DecompositionReport.vacio()
    total = Scalar.cero()
    pila = [(raiz, profundidad_raiz)]
    while pila:
        if limite is not None and time.time() > limite:
            return _ResultadoRama(total, reporte, expirado=True)
        d, profundidad = pila.pop()
        reporte.registrar_nodo(profundidad, d.odd_count())
        if _es_hoja_clifford(d):
            total = total + d.scalar
            reporte.leaf_terms += 1
            continue
        hijos = _expandir(d, politica)
        _auditar(d, hijos, topes)
        vivos = [h for h in hijos if not h.scalar.is_zero()]
        reporte.pruned_branches += len(hijos) - len(vivos)
        pila.extend((h, profundidad + 1) for h in reversed(vivos))
        reporte.max_live_diagrams = max(reporte.max_live_diagrams, len(pila))
    return _ResultadoRama(total, reporte)


def decompose(d: ZXDiagram, cfg: Optional[SimulationConfig] = None,
              traza: Optional[Traza] = None,
              limite: Optional[float] = None) -> Tuple[Scalar, DecompositionReport]:
    """
    Valor exacto de un diagrama cerrado.

    Args:
        d: diagrama sin fronteras (no se modifica)
        cfg: configuración (profundidad paralela, workers, política, límite)
        traza: si se indica, recibe los pasos de la primera simplificación
        limite: instante absoluto (time.time) compartido por toda la operación
            que llama; sin él se calcula a partir de cfg.timeout_secs

    Returns:
        (escalar exacto, reporte)

    Raises:
        ConstructionError: si d tiene fronteras
        DecompositionTimeout: al vencer el límite (con reporte parcial)
        InconsistencyError: en modo depuración, si una rama no suma su padre
    """
    cfg = cfg or SimulationConfig()
    if not d.is_closed():
        raise ConstructionError("decompose requiere un diagrama cerrado")
    inicio = time.time()
    if limite is None:
        limite = limite_de(cfg)
    topes = (cfg.oracle_cap, cfg.oracle_boundary_cap) if cfg.debug else None

    reporte = DecompositionReport()
    reporte.t_before_simp = d.odd_count()
    reporte.naive_terms = naive_terms(reporte.t_before_simp)
    raiz = simplificar(d.copy(), traza)
    reporte.initial_t = raiz.odd_count()
    reporte.bss_after_simp = naive_terms(reporte.initial_t)
    logger.info("Descomposición: T-count %d → %d tras simplificar",
                reporte.t_before_simp, reporte.initial_t)

    total = Scalar.cero()
    frontera: List[Tuple[ZXDiagram, int]] = [] if raiz.scalar.is_zero() else [(raiz, 0)]
    if raiz.scalar.is_zero():
        reporte.pruned_branches += 1

    def expirar() -> None:
        reporte.wall_time = time.time() - inicio
        raise DecompositionTimeout(
            f"Tiempo agotado tras {reporte.wall_time:.1f} s ({reporte.leaf_terms} hojas)", reporte)

    if limite is not None and time.time() > limite:
        expirar()

    # niveles a lo ancho
    for _ in range(cfg.parallel_depth):
        siguiente: List[Tuple[ZXDiagram, int]] = []
        for diag, profundidad in frontera:
            if limite is not None and time.time() > limite:
                expirar()
            reporte.registrar_nodo(profundidad, diag.odd_count())
            if _es_hoja_clifford(diag):
                total = total + diag.scalar
                reporte.leaf_terms += 1
                continue
            hijos = _expandir(diag, cfg.target_policy)
            _auditar(diag, hijos, topes)
            for hijo in hijos:
                if hijo.scalar.is_zero():
                    reporte.pruned_branches += 1
                else:
                    siguiente.append((hijo, profundidad + 1))
        frontera = siguiente
        reporte.max_live_diagrams = max(reporte.max_live_diagrams, len(frontera))
        if not frontera:
            break

    # el resto en profundidad, rama por rama
    trabajos: List[Trabajo] = [(diag, profundidad, cfg.target_policy, limite, topes)
                               for diag, profundidad in frontera]
    logger.debug("Frontera de %d ramas, %d workers", len(trabajos), cfg.workers)
    if cfg.workers > 1 and len(trabajos) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            resultados = list(pool.map(_resolver_rama, trabajos))
    else:
        resultados = []
        for trabajo in trabajos:
            resultados.append(_resolver_rama(trabajo))
            if resultados[-1].expirado:
                break

    pila_maxima = 0
    for resultado in resultados:
        total = total + resultado.total
        parcial = resultado.reporte
        pila_maxima = max(pila_maxima, parcial.max_live_diagrams)
        parcial.max_live_diagrams = 0
        reporte.combinar(parcial)
    if frontera:
        reporte.max_live_diagrams = max(reporte.max_live_diagrams,
                                        len(frontera) - 1 + pila_maxima)
    if any(r.expirado for r in resultados):
        expirar()

    reporte.wall_time = time.time() - inicio
    logger.info("Descomposición terminada: %d hojas, %d podadas, %.3f s",
                reporte.leaf_terms, reporte.pruned_branches, reporte.wall_time)
    return total, reporte
