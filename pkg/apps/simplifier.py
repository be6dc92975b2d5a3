#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
SIMPLIFICADOR ZX
Reescritura con escalar exacto hasta el punto fijo

Reglas (todas sobre diagramas graph-like):
- LocalComp: elimina un spider interno de fase ±π/2 complementando sus vecinos
- Pivot: elimina un par conectado de spiders internos de fase 0/π
- PivotGadget: extrae la fase de un spider no Clifford a un gadget y pivotea
- GadgetFuse / IdGadgetFuse: fusión de gadgets de fase
- Identity / ScalarComponent: spiders identidad y componentes aisladas

Las aristas Hadamard llevan el factor 1/√2 de la matriz H normalizada, por
eso cada complementación de arista suma o resta una potencia de √2.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from apps.zx_graph import (EdgeKind, VertexKind, ZXDiagram, es_impar,
                           normalizar)
from utils.errores import RuleNotApplicable
from utils.scalar_ring import Scalar

logger = logging.getLogger(__name__)

FASES_LCOMP = (2, 6)
FASES_PAULI = (0, 4)


class RewriteRule(str, Enum):
    FUSE = "Fuse"
    LOCAL_COMP = "LocalComp"
    PIVOT = "Pivot"
    PIVOT_GADGET = "PivotGadget"
    GADGET_FUSE = "GadgetFuse"
    ID_GADGET_FUSE = "IdGadgetFuse"
    PARALLEL_EDGE = "ParallelEdge"
    SELF_LOOP = "SelfLoop"
    IDENTITY = "Identity"
    SCALAR_COMPONENT = "ScalarComponent"


@dataclass(frozen=True)
class RewriteStep:
    rule: RewriteRule
    vertices: Tuple[int, ...]
    factor: Scalar

    def to_dict(self) -> Dict[str, object]:
        return {"rule": self.rule.value, "vertices": list(self.vertices), "factor": str(self.factor)}


@dataclass
class Traza:
    """Registro de pasos de reescritura (sólo en modo depuración)"""
    pasos: List[RewriteStep] = field(default_factory=list)

    def registrar(self, regla, vertices: Sequence[int], factor: Scalar) -> None:
        self.pasos.append(RewriteStep(RewriteRule(regla), tuple(vertices), factor))

    def a_lineas_json(self) -> str:
        return "".join(json.dumps(p.to_dict(), ensure_ascii=False) + "\n" for p in self.pasos)

    def __len__(self) -> int:
        return len(self.pasos)


@dataclass(frozen=True)
class PhaseGadget:
    """Base de fase 0/π con una única hoja impar (top) y sus objetivos"""
    base: int
    top: int
    targets: FrozenSet[int]


# ======================================================================
# Utilidades
# ======================================================================

def _registrar(traza: Optional[Traza], regla: RewriteRule, vertices, factor: Scalar) -> None:
    if traza is not None:
        traza.registrar(regla, vertices, factor)


def _alternar(d: ZXDiagram, u: int, w: int) -> int:
    """Complementa la arista Hadamard u–w; devuelve la potencia de √2 a compensar"""
    if d.connected(u, w):
        d.remove_edge(u, w)
        return -1
    d.add_edge(u, w, EdgeKind.HADAMARD)
    return 1


def _es_spider_interno(d: ZXDiagram, v: int) -> bool:
    return d.has_vertex(v) and d.kind(v) == VertexKind.Z_SPIDER and d.is_internal(v)


def _toca_frontera(d: ZXDiagram, v: int) -> bool:
    return any(d.is_boundary(w) for w in d.neighbours(v))


def pivot_exponent(n: int, m: int, l: int) -> int:
    """
    Exponente E = (n-1)m + (l-1)m + (n-1)(l-1) del factor 2^{-E} del pivot.

    Ejemplos:
        >>> pivot_exponent(1, 0, 1)
        0
    """
    return (n - 1) * m + (l - 1) * m + (n - 1) * (l - 1)


def pivot_gadget_exponent(n: int, m: int, l: int) -> int:
    """E' = E + m + n - 1"""
    return pivot_exponent(n, m, l) + m + n - 1


# ======================================================================
# Gadgets de fase
# ======================================================================

def _gadget_de_tope(d: ZXDiagram, t: int) -> Optional[PhaseGadget]:
    if d.kind(t) != VertexKind.Z_SPIDER or not es_impar(d.phase(t)) or d.degree(t) != 1:
        return None
    b = d.neighbours(t)[0]
    if not _es_spider_interno(d, b) or d.phase(b) not in FASES_PAULI or d.degree(b) < 2:
        return None
    hojas_impares = [w for w in d.neighbours(b)
                     if d.degree(w) == 1 and es_impar(d.phase(w))]
    if hojas_impares != [t]:
        return None
    return PhaseGadget(b, t, frozenset(d.neighbour_set(b) - {t}))


def phase_gadgets(d: ZXDiagram) -> List[PhaseGadget]:
    """Gadgets del diagrama ordenados por id de base"""
    gadgets = []
    for v in d.spiders():
        g = _gadget_de_tope(d, v)
        if g is not None:
            gadgets.append(g)
    gadgets.sort(key=lambda g: g.base)
    return gadgets


def es_tope_gadget(d: ZXDiagram, v: int) -> bool:
    return _gadget_de_tope(d, v) is not None


def gadget_bases(d: ZXDiagram) -> set:
    return {g.base for g in phase_gadgets(d)}


def es_base_gadget(d: ZXDiagram, v: int) -> bool:
    """Prueba local equivalente a v in gadget_bases(d)"""
    if not _es_spider_interno(d, v) or d.phase(v) not in FASES_PAULI or d.degree(v) < 2:
        return False
    hojas = [w for w in d.neighbours(v) if d.degree(w) == 1 and es_impar(d.phase(w))]
    return len(hojas) == 1


def _gadget_vigente(d: ZXDiagram, g: PhaseGadget) -> bool:
    if not (d.has_vertex(g.base) and d.has_vertex(g.top)):
        return False
    actual = _gadget_de_tope(d, g.top)
    return actual == g


def _normalizar_base(d: ZXDiagram, g: PhaseGadget) -> Scalar:
    """Base π → base 0 con tope negado y factor ω^m"""
    if d.phase(g.base) == 0:
        return Scalar.uno()
    m = d.phase(g.top)
    d.set_phase(g.base, 0)
    d.set_phase(g.top, -m)
    factor = Scalar.from_phase(m)
    d.mult_scalar(factor)
    return factor


def _fusionar_gadgets(d: ZXDiagram, g1: PhaseGadget, g2: PhaseGadget,
                      traza: Optional[Traza]) -> None:
    factor = _normalizar_base(d, g1) * _normalizar_base(d, g2)
    d.add_to_phase(g1.top, d.phase(g2.top))
    d.remove_vertex(g2.top)
    d.remove_vertex(g2.base)
    n = len(g1.targets)
    extra = Scalar.sqrt2_power(1 - n)
    if d.phase(g1.top) == 0:
        # tope 0: el gadget entero vale √2^{1-n}
        d.remove_vertex(g1.top)
        d.remove_vertex(g1.base)
        extra = extra * Scalar.sqrt2_power(1 - n)
    d.mult_scalar(extra)
    _registrar(traza, RewriteRule.GADGET_FUSE, (g1.base, g1.top, g2.base, g2.top), factor * extra)


def _fusionar_gadget_identidad(d: ZXDiagram, g: PhaseGadget, traza: Optional[Traza]) -> None:
    factor = _normalizar_base(d, g)
    (w,) = tuple(g.targets)
    d.add_to_phase(w, d.phase(g.top))
    d.remove_vertex(g.top)
    d.remove_vertex(g.base)
    _registrar(traza, RewriteRule.ID_GADGET_FUSE, (g.base, g.top, w), factor)


def _pase_gadgets(d: ZXDiagram, traza: Optional[Traza]) -> bool:
    cambio = False
    grupos: Dict[FrozenSet[int], List[PhaseGadget]] = {}
    for g in phase_gadgets(d):
        grupos.setdefault(g.targets, []).append(g)
    for objetivos, gadgets in grupos.items():
        if len(objetivos) == 1:
            for g in gadgets:
                if _gadget_vigente(d, g):
                    _fusionar_gadget_identidad(d, g, traza)
                    cambio = True
            continue
        principal = None
        for g in gadgets:
            if not _gadget_vigente(d, g):
                continue
            if principal is None or not _gadget_vigente(d, principal):
                principal = g
                continue
            _fusionar_gadgets(d, principal, g, traza)
            cambio = True
    return cambio


# ======================================================================
# Reglas en el lugar
# ======================================================================

def _aplicar_lcomp(d: ZXDiagram, v: int, traza: Optional[Traza]) -> None:
    m = d.phase(v)
    vecinos = d.neighbours(v)
    d.remove_vertex(v)
    potencia = -len(vecinos)
    for a, b in combinations(vecinos, 2):
        potencia += _alternar(d, a, b)
    for w in vecinos:
        d.add_to_phase(w, -m)
    factor = (Scalar.uno() + Scalar.from_phase(m)) * Scalar.sqrt2_power(potencia)
    d.mult_scalar(factor)
    _registrar(traza, RewriteRule.LOCAL_COMP, (v,), factor)


def _aplicar_pivot(d: ZXDiagram, u: int, v: int, traza: Optional[Traza],
                   regla: RewriteRule = RewriteRule.PIVOT) -> None:
    vecinos_u = d.neighbour_set(u) - {v}
    vecinos_v = d.neighbour_set(v) - {u}
    compartidos = vecinos_u & vecinos_v
    solo_u = sorted(vecinos_u - compartidos)
    solo_v = sorted(vecinos_v - compartidos)
    compartidos = sorted(compartidos)
    a, b = d.phase(u) // 4, d.phase(v) // 4
    d.remove_vertex(u)
    d.remove_vertex(v)
    potencia = 2 - (1 + len(vecinos_u) + len(vecinos_v))
    for grupo_1, grupo_2 in ((solo_u, solo_v), (solo_u, compartidos), (solo_v, compartidos)):
        for x in grupo_1:
            for y in grupo_2:
                potencia += _alternar(d, x, y)
    for w in solo_v:
        d.add_to_phase(w, 4 * a)
    for w in solo_u:
        d.add_to_phase(w, 4 * b)
    for w in compartidos:
        d.add_to_phase(w, 4 * (a + b + 1))
    factor = Scalar.sqrt2_power(potencia)
    if a * b:
        factor = -factor
    d.mult_scalar(factor)
    _registrar(traza, regla, (u, v), factor)


def _aplicar_pivot_gadget(d: ZXDiagram, u: int, v: int, traza: Optional[Traza]) -> Tuple[int, int]:
    base = d.add_vertex(VertexKind.Z_SPIDER, 0)
    tope = d.add_vertex(VertexKind.Z_SPIDER, d.phase(v))
    d.add_edge(v, base, EdgeKind.HADAMARD)
    d.add_edge(base, tope, EdgeKind.HADAMARD)
    d.set_phase(v, 0)
    _aplicar_pivot(d, u, v, traza, RewriteRule.PIVOT_GADGET)
    return base, tope


def _fusionar_por_hadamard(d: ZXDiagram, a: int, c: int) -> int:
    """Fusiona c en a cuando quedaron unidos por un cable simple"""
    d.add_to_phase(a, d.phase(c))
    potencia = 0
    for w in d.neighbours(c):
        if w == a:
            # lazo Hadamard: fase π y 1/√2
            d.remove_edge(a, c)
            d.add_to_phase(a, 4)
            potencia -= 1
        elif d.is_boundary(w):
            d.add_edge(a, w, EdgeKind.SIMPLE)
        elif d.connected(a, w):
            d.remove_edge(a, w)
            potencia -= 2
        else:
            d.add_edge(a, w, EdgeKind.HADAMARD)
    d.remove_vertex(c)
    d.mult_sqrt2_power(potencia)
    return potencia


def _aplicar_identidad(d: ZXDiagram, v: int, traza: Optional[Traza]) -> None:
    a, c = d.neighbours(v)
    if _toca_frontera(d, c) and not _toca_frontera(d, a):
        a, c = c, a
    d.remove_vertex(v)
    potencia = _fusionar_por_hadamard(d, a, c)
    _registrar(traza, RewriteRule.IDENTITY, (v, a, c), Scalar.sqrt2_power(potencia))


def _es_identidad(d: ZXDiagram, v: int) -> bool:
    if not _es_spider_interno(d, v) or d.phase(v) != 0 or d.degree(v) != 2:
        return False
    a, c = d.neighbours(v)
    return not (_toca_frontera(d, a) and _toca_frontera(d, c))


def _componente_escalar(d: ZXDiagram, v: int, traza: Optional[Traza]) -> bool:
    grado = d.degree(v)
    if grado == 0:
        factor = Scalar.uno() + Scalar.from_phase(d.phase(v))
        d.remove_vertex(v)
        d.mult_scalar(factor)
        _registrar(traza, RewriteRule.SCALAR_COMPONENT, (v,), factor)
        return True
    if grado == 1:
        w = d.neighbours(v)[0]
        if d.is_boundary(w) or d.degree(w) != 1:
            return False
        a, b = d.phase(v), d.phase(w)
        factor = (Scalar.uno() + Scalar.from_phase(a) + Scalar.from_phase(b)
                  - Scalar.from_phase(a + b)) * Scalar.one_over_sqrt2_power(1)
        d.remove_vertex(v)
        d.remove_vertex(w)
        d.mult_scalar(factor)
        _registrar(traza, RewriteRule.SCALAR_COMPONENT, (v, w), factor)
        return True
    return False


# ======================================================================
# Pases
# ======================================================================

def _pase_normalizacion(d: ZXDiagram, traza: Optional[Traza]) -> bool:
    cambio_total = False
    cambio = True
    while cambio:
        cambio = False
        for v in d.vertices():
            if not d.has_vertex(v) or d.is_boundary(v):
                continue
            if _es_identidad(d, v):
                _aplicar_identidad(d, v, traza)
                cambio = True
            elif d.degree(v) <= 1 and _componente_escalar(d, v, traza):
                cambio = True
        if _pase_gadgets(d, traza):
            cambio = True
        cambio_total = cambio_total or cambio
    return cambio_total


def _pase_lcomp(d: ZXDiagram, traza: Optional[Traza]) -> bool:
    cambio = False
    for v in d.vertices():
        if _es_spider_interno(d, v) and d.phase(v) in FASES_LCOMP:
            _aplicar_lcomp(d, v, traza)
            cambio = True
    return cambio


def _candidato_pivot(d: ZXDiagram, v: int) -> bool:
    return (_es_spider_interno(d, v) and d.phase(v) in FASES_PAULI
            and not es_base_gadget(d, v))


def _pase_pivot(d: ZXDiagram, traza: Optional[Traza]) -> bool:
    cambio = False
    for u in d.vertices():
        if not _candidato_pivot(d, u):
            continue
        for v in d.neighbours(u):
            if _candidato_pivot(d, v):
                _aplicar_pivot(d, u, v, traza)
                cambio = True
                break
    return cambio


def _pase_pivot_gadget(d: ZXDiagram, traza: Optional[Traza]) -> bool:
    cambio = False
    for u in d.vertices():
        if not _candidato_pivot(d, u):
            continue
        for v in d.neighbours(u):
            if (_es_spider_interno(d, v) and es_impar(d.phase(v)) and d.degree(v) > 1):
                _aplicar_pivot_gadget(d, u, v, traza)
                cambio = True
                break
    return cambio


def _anular_si_cero(d: ZXDiagram) -> bool:
    if d.scalar.is_zero() and d.is_closed():
        for v in d.vertices():
            d.remove_vertex(v)
        return True
    return False


def simplificar(d: ZXDiagram, traza: Optional[Traza] = None) -> ZXDiagram:
    """Versión en el lugar de full_simp"""
    t_inicial = d.odd_count()
    n_inicial = d.num_vertices()
    normalizar(d, traza)
    while not _anular_si_cero(d):
        cambio = True
        while cambio and not _anular_si_cero(d):
            cambio = _pase_normalizacion(d, traza)
            cambio = _pase_lcomp(d, traza) or cambio
            cambio = _pase_pivot(d, traza) or cambio
        if _anular_si_cero(d):
            break
        if _pase_pivot_gadget(d, traza):
            continue
        if _pase_gadgets(d, traza):
            continue
        break
    logger.debug("full_simp: vértices %d → %d, T-count %d → %d",
                 n_inicial, d.num_vertices(), t_inicial, d.odd_count())
    return d


# ======================================================================
# Interfaz pública (devuelve copias)
# ======================================================================

def local_comp(d: ZXDiagram, v: int, traza: Optional[Traza] = None) -> ZXDiagram:
    """
    Complementación local sobre v.

    Raises:
        RuleNotApplicable: v no es interno o su fase no es ±π/2
    """
    if not _es_spider_interno(d, v):
        raise RuleNotApplicable("LocalComp", f"{v} no es un spider interno")
    if d.phase(v) not in FASES_LCOMP:
        raise RuleNotApplicable("LocalComp", f"fase {d.phase(v)}·π/4 no es ±π/2")
    resultado = d.copy()
    _aplicar_lcomp(resultado, v, traza)
    return resultado


def _verificar_par(d: ZXDiagram, u: int, v: int, regla: str) -> None:
    for w in (u, v):
        if not _es_spider_interno(d, w):
            raise RuleNotApplicable(regla, f"{w} no es un spider interno")
    if d.edge_kind(u, v) != EdgeKind.HADAMARD:
        raise RuleNotApplicable(regla, f"{u} y {v} no están unidos por una arista Hadamard")


def pivot(d: ZXDiagram, u: int, v: int, traza: Optional[Traza] = None) -> ZXDiagram:
    """
    Pivot sobre el par (u, v).

    Raises:
        RuleNotApplicable: fases fuera de {0, π}, no adyacentes o base de gadget
    """
    _verificar_par(d, u, v, "Pivot")
    for w in (u, v):
        if d.phase(w) not in FASES_PAULI:
            raise RuleNotApplicable("Pivot", f"fase de {w} no es 0 ni π")
    if es_base_gadget(d, u) or es_base_gadget(d, v):
        raise RuleNotApplicable("Pivot", "no se pivotea sobre la base de un gadget")
    resultado = d.copy()
    _aplicar_pivot(resultado, u, v, traza)
    return resultado


def pivot_gadget(d: ZXDiagram, u: int, v: int, traza: Optional[Traza] = None) -> ZXDiagram:
    """Convierte la fase de v en gadget y pivotea sobre (u, v)"""
    _verificar_par(d, u, v, "PivotGadget")
    if d.phase(u) not in FASES_PAULI:
        raise RuleNotApplicable("PivotGadget", f"fase de {u} no es 0 ni π")
    if es_base_gadget(d, u):
        raise RuleNotApplicable("PivotGadget", f"{u} es base de un gadget")
    if not es_impar(d.phase(v)) or d.degree(v) < 2:
        raise RuleNotApplicable("PivotGadget", f"{v} no es un spider no Clifford de grado > 1")
    resultado = d.copy()
    _aplicar_pivot_gadget(resultado, u, v, traza)
    return resultado


def gadget_fuse(d: ZXDiagram, g1: PhaseGadget, g2: PhaseGadget,
                traza: Optional[Traza] = None) -> ZXDiagram:
    """Fusiona dos gadgets con la misma vecindad"""
    for g in (g1, g2):
        if not _gadget_vigente(d, g):
            raise RuleNotApplicable("GadgetFuse", f"base {g.base} no es un gadget")
    if g1.base == g2.base or g1.targets != g2.targets:
        raise RuleNotApplicable("GadgetFuse", "los gadgets no comparten vecindad")
    resultado = d.copy()
    _fusionar_gadgets(resultado, g1, g2, traza)
    return resultado


def id_gadget_fuse(d: ZXDiagram, g: PhaseGadget, traza: Optional[Traza] = None) -> ZXDiagram:
    """Absorbe en su único vecino un gadget de un solo objetivo"""
    if not _gadget_vigente(d, g):
        raise RuleNotApplicable("IdGadgetFuse", f"base {g.base} no es un gadget")
    if len(g.targets) != 1:
        raise RuleNotApplicable("IdGadgetFuse", f"la base tiene {len(g.targets)} vecinos")
    resultado = d.copy()
    _fusionar_gadget_identidad(resultado, g, traza)
    return resultado


def full_simp(d: ZXDiagram, traza: Optional[Traza] = None) -> ZXDiagram:
    """
    Simplifica una copia hasta que ninguna regla aplique.

    Orden por vuelta: (1) normalización (identidades, componentes escalares,
    fusión de gadgets), (2) complementaciones locales, (3) pivots; al
    estabilizarse, (4) pivots con gadget y (5) fusión de gadgets, volviendo
    a empezar si alguno cambió algo. Dentro de cada pase los vértices se
    recorren por id ascendente.
    """
    return simplificar(d.copy(), traza)
