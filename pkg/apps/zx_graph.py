#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DIAGRAMAS ZX
Estructura de datos, normalización a forma "graph-like" y oráculo tensorial

Un diagrama es un multigrafo no dirigido de spiders con fase m·π/4, aristas
simples o Hadamard, listas ordenadas de fronteras y un escalar exacto global.

Convenciones de los tensores:
- spider Z de fase α: |0…0⟩⟨0…0| + e^{iα}|1…1⟩⟨1…1| (sin normalizar)
- spider X: igual que Z conjugado por Hadamard en cada pata
- arista Hadamard y caja H: la matriz H normalizada

Las aristas se guardan como mapa de adyacencia con multiplicidad por tipo
(simples, hadamard). Insertar nunca reescribe: las multiplicidades se
resuelven sólo en to_graph_like y en las reglas del simplificador.
"""

import json
import logging
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from utils.errores import ConstructionError, OracleCapExceeded
from utils.scalar_ring import Scalar

logger = logging.getLogger(__name__)

VERSION_JSON = 1

# Índices disponibles para numpy.einsum
MAX_ETIQUETAS = 52

H_MATRIZ = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / np.sqrt(2.0)
IDENTIDAD = np.eye(2, dtype=complex)


class VertexKind(str, Enum):
    BOUNDARY_IN = "BoundaryIn"
    BOUNDARY_OUT = "BoundaryOut"
    Z_SPIDER = "ZSpider"
    X_SPIDER = "XSpider"
    H_BOX = "HBox"


class EdgeKind(str, Enum):
    SIMPLE = "Simple"
    HADAMARD = "Hadamard"


FRONTERAS = (VertexKind.BOUNDARY_IN, VertexKind.BOUNDARY_OUT)

# Estados y efectos de plug: (tipo de spider, fase)
ESTADOS_PLUG = {
    "0": (VertexKind.X_SPIDER, 0),
    "1": (VertexKind.X_SPIDER, 4),
    "+": (VertexKind.Z_SPIDER, 0),
    "-": (VertexKind.Z_SPIDER, 4),
}

Asignacion = Union[int, str]


def es_impar(m: int) -> bool:
    """Fase no Clifford (múltiplo impar de π/4)"""
    return m % 2 == 1


class ZXDiagram:
    """
    Diagrama ZX mutable.

    Los identificadores son estables y nunca se reutilizan dentro de la vida
    del diagrama; por eso las trazas de reescritura son reproducibles.
    """

    def __init__(self):
        self._kinds: Dict[int, VertexKind] = {}
        self._phases: Dict[int, int] = {}
        # _adj[u][v] = (simples, hadamard); los lazos se guardan en _adj[v][v]
        self._adj: Dict[int, Dict[int, Tuple[int, int]]] = {}
        self.inputs: List[int] = []
        self.outputs: List[int] = []
        self.scalar: Scalar = Scalar.uno()
        self._siguiente = 0

    # ------------------------------------------------------------------
    # Vértices
    # ------------------------------------------------------------------

    def add_vertex(self, kind: VertexKind, phase: int = 0) -> int:
        v = self._siguiente
        self._siguiente += 1
        self._kinds[v] = VertexKind(kind)
        self._phases[v] = phase % 8
        self._adj[v] = {}
        return v

    def add_spider(self, kind: VertexKind, phase: int = 0,
                   neighbours: Iterable[Tuple[int, EdgeKind]] = ()) -> int:
        """
        Inserta un vértice y sus aristas tal cual (sin reescritura).

        Raises:
            ConstructionError: si algún vecino no existe
        """
        neighbours = list(neighbours)
        for w, _ in neighbours:
            if w not in self._kinds:
                raise ConstructionError(f"Vecino {w} inexistente")
        v = self.add_vertex(kind, phase)
        for w, tipo in neighbours:
            self.add_edge(v, w, tipo)
        return v

    def add_boundary(self, es_entrada: bool) -> int:
        v = self.add_vertex(VertexKind.BOUNDARY_IN if es_entrada else VertexKind.BOUNDARY_OUT)
        (self.inputs if es_entrada else self.outputs).append(v)
        return v

    def remove_vertex(self, v: int) -> None:
        for w in list(self._adj[v]):
            if w != v:
                del self._adj[w][v]
        del self._adj[v]
        del self._kinds[v]
        del self._phases[v]

    def vertices(self) -> List[int]:
        return sorted(self._kinds)

    def spiders(self) -> List[int]:
        return [v for v in self.vertices() if self._kinds[v] not in FRONTERAS]

    def num_vertices(self) -> int:
        return len(self._kinds)

    def has_vertex(self, v: int) -> bool:
        return v in self._kinds

    def kind(self, v: int) -> VertexKind:
        return self._kinds[v]

    def set_kind(self, v: int, kind: VertexKind) -> None:
        self._kinds[v] = VertexKind(kind)

    def phase(self, v: int) -> int:
        return self._phases[v]

    def set_phase(self, v: int, m: int) -> None:
        self._phases[v] = m % 8

    def add_to_phase(self, v: int, m: int) -> None:
        self._phases[v] = (self._phases[v] + m) % 8

    def is_boundary(self, v: int) -> bool:
        return self._kinds[v] in FRONTERAS

    def is_internal(self, v: int) -> bool:
        """Spider sin vecinos frontera"""
        if self.is_boundary(v):
            return False
        return not any(self._kinds[w] in FRONTERAS for w in self._adj[v] if w != v)

    def odd_count(self) -> int:
        return sum(1 for v in self.spiders() if es_impar(self._phases[v]))

    def odd_spiders(self) -> List[int]:
        return [v for v in self.spiders() if es_impar(self._phases[v])]

    def is_closed(self) -> bool:
        return not self.inputs and not self.outputs and not any(
            k in FRONTERAS for k in self._kinds.values())

    # ------------------------------------------------------------------
    # Aristas
    # ------------------------------------------------------------------

    def _set_counts(self, u: int, v: int, simples: int, hadamard: int) -> None:
        if simples == 0 and hadamard == 0:
            self._adj[u].pop(v, None)
            self._adj[v].pop(u, None)
            return
        self._adj[u][v] = (simples, hadamard)
        self._adj[v][u] = (simples, hadamard)

    def edge_counts(self, u: int, v: int) -> Tuple[int, int]:
        return self._adj[u].get(v, (0, 0))

    def add_edge(self, u: int, v: int, kind: EdgeKind = EdgeKind.HADAMARD,
                 count: int = 1) -> None:
        if u not in self._kinds or v not in self._kinds:
            raise ConstructionError(f"Arista ({u}, {v}) con vértice inexistente")
        s, h = self.edge_counts(u, v)
        if EdgeKind(kind) == EdgeKind.SIMPLE:
            s += count
        else:
            h += count
        self._set_counts(u, v, s, h)

    def remove_edge(self, u: int, v: int) -> None:
        self._set_counts(u, v, 0, 0)

    def set_edge(self, u: int, v: int, kind: EdgeKind) -> None:
        """Reemplaza lo que haya entre u y v por una única arista"""
        if EdgeKind(kind) == EdgeKind.SIMPLE:
            self._set_counts(u, v, 1, 0)
        else:
            self._set_counts(u, v, 0, 1)

    def connected(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_kind(self, u: int, v: int) -> Optional[EdgeKind]:
        """Tipo de la arista única entre u y v (None si no hay)"""
        s, h = self.edge_counts(u, v)
        if s + h == 0:
            return None
        if s + h > 1:
            raise ConstructionError(f"Aristas paralelas entre {u} y {v}")
        return EdgeKind.SIMPLE if s else EdgeKind.HADAMARD

    def neighbours(self, v: int) -> List[int]:
        return sorted(w for w in self._adj[v] if w != v)

    def neighbour_set(self, v: int) -> set:
        return {w for w in self._adj[v] if w != v}

    def degree(self, v: int) -> int:
        vecinos = self._adj[v]
        return len(vecinos) - (1 if v in vecinos else 0)

    def edges(self) -> List[Tuple[int, int, int, int]]:
        """Lista (u, v, simples, hadamard) con u <= v"""
        resultado = []
        for u in self.vertices():
            for v, (s, h) in self._adj[u].items():
                if u <= v:
                    resultado.append((u, v, s, h))
        resultado.sort()
        return resultado

    def boundary_neighbour(self, b: int) -> Tuple[int, EdgeKind]:
        """Único vecino de una frontera y el tipo de la arista"""
        vecinos = [w for w in self._adj[b] if w != b]
        if len(vecinos) != 1 or sum(self._adj[b][vecinos[0]]) != 1:
            raise ConstructionError(f"La frontera {b} debe tener grado 1")
        w = vecinos[0]
        return w, self.edge_kind(b, w)

    # ------------------------------------------------------------------
    # Escalar
    # ------------------------------------------------------------------

    def mult_scalar(self, factor: Scalar) -> None:
        self.scalar = self.scalar * factor

    def mult_sqrt2_power(self, p: int) -> None:
        if p:
            self.scalar = self.scalar * Scalar.sqrt2_power(p)

    # ------------------------------------------------------------------
    # Copia y composición
    # ------------------------------------------------------------------

    def copy(self) -> "ZXDiagram":
        nuevo = ZXDiagram.__new__(ZXDiagram)
        nuevo._kinds = dict(self._kinds)
        nuevo._phases = dict(self._phases)
        nuevo._adj = {v: dict(vecinos) for v, vecinos in self._adj.items()}
        nuevo.inputs = list(self.inputs)
        nuevo.outputs = list(self.outputs)
        nuevo.scalar = self.scalar
        nuevo._siguiente = self._siguiente
        return nuevo

    def absorb(self, otro: "ZXDiagram") -> Dict[int, int]:
        """
        Copia los vértices y aristas de otro diagrama con ids nuevos y
        multiplica los escalares. Las listas de fronteras no se tocan.

        Returns:
            mapa id_del_otro -> id_nuevo
        """
        mapa = {}
        for v in otro.vertices():
            mapa[v] = self.add_vertex(otro.kind(v), otro.phase(v))
        for u, v, s, h in otro.edges():
            self._set_counts(mapa[u], mapa[v], s, h)
        self.scalar = self.scalar * otro.scalar
        return mapa

    # ------------------------------------------------------------------
    # Serialización
    # ------------------------------------------------------------------

    def to_dict(self) -> Dict[str, Any]:
        aristas = []
        for u, v, s, h in self.edges():
            if s:
                aristas.append({"u": u, "v": v, "kind": EdgeKind.SIMPLE.value, "count": s})
            if h:
                aristas.append({"u": u, "v": v, "kind": EdgeKind.HADAMARD.value, "count": h})
        return {
            "version": VERSION_JSON,
            "vertices": [
                {"id": v, "kind": self._kinds[v].value, "phase": self._phases[v]}
                for v in self.vertices()
            ],
            "edges": aristas,
            "inputs": list(self.inputs),
            "outputs": list(self.outputs),
            "scalar": str(self.scalar),
            "next_id": self._siguiente,
        }

    @classmethod
    def from_dict(cls, datos: Dict[str, Any]) -> "ZXDiagram":
        if datos.get("version") != VERSION_JSON:
            raise ConstructionError(
                f"Versión de diagrama {datos.get('version')} no soportada "
                f"(se esperaba {VERSION_JSON})"
            )
        d = cls()
        for vert in datos["vertices"]:
            v = int(vert["id"])
            d._kinds[v] = VertexKind(vert["kind"])
            d._phases[v] = int(vert["phase"]) % 8
            d._adj[v] = {}
        for arista in datos["edges"]:
            d.add_edge(int(arista["u"]), int(arista["v"]), EdgeKind(arista["kind"]),
                       int(arista.get("count", 1)))
        d.inputs = [int(v) for v in datos["inputs"]]
        d.outputs = [int(v) for v in datos["outputs"]]
        d.scalar = Scalar.parse(datos["scalar"])
        maximo = max(d._kinds, default=-1) + 1
        d._siguiente = max(int(datos.get("next_id", maximo)), maximo)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, texto: str) -> "ZXDiagram":
        return cls.from_dict(json.loads(texto))

    def __repr__(self) -> str:
        return (f"ZXDiagram(vertices={self.num_vertices()}, impares={self.odd_count()}, "
                f"entradas={len(self.inputs)}, salidas={len(self.outputs)}, "
                f"escalar={self.scalar})")


# ======================================================================
# Operaciones
# ======================================================================

def add_spider(d: ZXDiagram, kind: VertexKind, phase: int,
               neighbours: Iterable[Tuple[int, EdgeKind]] = ()) -> int:
    return d.add_spider(kind, phase, neighbours)


def _registrar(traza, regla: str, vertices: Sequence[int], factor: Scalar) -> None:
    if traza is not None:
        traza.registrar(regla, vertices, factor)


def _cambiar_color(d: ZXDiagram) -> None:
    """Spiders X → Z invirtiendo el tipo de cada arista incidente"""
    for v in d.vertices():
        if d.kind(v) != VertexKind.X_SPIDER:
            continue
        d.set_kind(v, VertexKind.Z_SPIDER)
        for w in d.neighbours(v):
            s, h = d.edge_counts(v, w)
            d._set_counts(v, w, h, s)


def _quitar_cajas_h(d: ZXDiagram) -> None:
    """Cada caja H de aridad 2 se reemplaza por una arista del tipo resultante"""
    for v in d.vertices():
        if d.kind(v) != VertexKind.H_BOX:
            continue
        if v in d._adj[v]:
            # caja H cerrada sobre sí misma: un único cable con ambas patas
            s, h = d._adj[v][v]
            if s + h != 1 or len(d._adj[v]) != 1:
                raise ConstructionError(f"La caja H {v} debe tener exactamente 2 patas")
            # traza de H (0) o de H·H (2)
            d.remove_vertex(v)
            d.mult_scalar(Scalar.from_int(2) if h else Scalar.cero())
            continue
        patas = []
        for w, (s, h) in sorted(d._adj[v].items()):
            patas.extend([(w, EdgeKind.SIMPLE)] * s)
            patas.extend([(w, EdgeKind.HADAMARD)] * h)
        if len(patas) != 2:
            raise ConstructionError(f"La caja H {v} debe tener exactamente 2 patas")
        (p, tipo_p), (q, tipo_q) = patas
        hadamards = 1 + (tipo_p == EdgeKind.HADAMARD) + (tipo_q == EdgeKind.HADAMARD)
        d.remove_vertex(v)
        d.add_edge(p, q, EdgeKind.HADAMARD if hadamards % 2 else EdgeKind.SIMPLE)


def _fusionar(d: ZXDiagram, u: int, v: int) -> None:
    """Fusiona el spider Z v dentro de u (unidos por al menos una arista simple)"""
    d.add_to_phase(u, d.phase(v))
    lazo_s, lazo_h = 0, 0
    for w, (s, h) in list(d._adj[v].items()):
        if w == v:
            lazo_s += s
            lazo_h += h
        elif w == u:
            # una arista simple se consume en la fusión; el resto son lazos
            lazo_s += s - 1
            lazo_h += h
        else:
            s0, h0 = d.edge_counts(u, w)
            d._set_counts(u, w, s0 + s, h0 + h)
    d.remove_vertex(v)
    if lazo_s or lazo_h:
        s0, h0 = d.edge_counts(u, u)
        d._set_counts(u, u, s0 + lazo_s, h0 + lazo_h)


def _fusionar_todo(d: ZXDiagram, traza=None) -> None:
    cambio = True
    while cambio:
        cambio = False
        for u in d.vertices():
            if not d.has_vertex(u) or d.kind(u) != VertexKind.Z_SPIDER:
                continue
            for w in d.neighbours(u):
                if d.kind(w) == VertexKind.Z_SPIDER and d.edge_counts(u, w)[0] > 0:
                    _fusionar(d, u, w)
                    _registrar(traza, "Fuse", (u, w), Scalar.uno())
                    cambio = True


def _resolver_lazos(d: ZXDiagram, traza=None) -> None:
    for v in d.spiders():
        s, h = d.edge_counts(v, v)
        if s == 0 and h == 0:
            continue
        d._set_counts(v, v, 0, 0)
        # lazo simple: factor 1; lazo Hadamard: fase π y 1/√2
        if h:
            d.add_to_phase(v, 4 * h)
            factor = Scalar.one_over_sqrt2_power(h)
            d.mult_scalar(factor)
        else:
            factor = Scalar.uno()
        _registrar(traza, "SelfLoop", (v,), factor)


def _resolver_paralelas(d: ZXDiagram, traza=None) -> None:
    for u, v, s, h in d.edges():
        if u == v or s + h <= 1:
            continue
        if d.is_boundary(u) or d.is_boundary(v):
            raise ConstructionError(f"Aristas paralelas hacia la frontera ({u}, {v})")
        # sólo quedan aristas Hadamard entre spiders Z tras la fusión
        factor = Scalar.one_over_sqrt2_power(h - (h % 2))
        d._set_counts(u, v, 0, h % 2)
        d.mult_scalar(factor)
        _registrar(traza, "ParallelEdge", (u, v), factor)


def _identidad_hadamard(d: ZXDiagram, a: int, b: int, extremo_a: EdgeKind) -> None:
    """
    Reemplaza la arista simple a–b por a –s– z –H– z' –H– b (o a –s– z –H– b si la
    original era Hadamard) para separar fronteras.
    """
    d.remove_edge(a, b)
    z = d.add_vertex(VertexKind.Z_SPIDER, 0)
    d.add_edge(a, z, EdgeKind.SIMPLE)
    if extremo_a == EdgeKind.HADAMARD:
        d.add_edge(z, b, EdgeKind.HADAMARD)
        return
    z2 = d.add_vertex(VertexKind.Z_SPIDER, 0)
    d.add_edge(z, z2, EdgeKind.HADAMARD)
    d.add_edge(z2, b, EdgeKind.HADAMARD)


def _ordenar_fronteras(d: ZXDiagram) -> None:
    fronteras = [v for v in d.vertices() if d.is_boundary(v)]
    for b in fronteras:
        w, tipo = d.boundary_neighbour(b)
        if d.is_boundary(w):
            if b < w:
                _identidad_hadamard(d, b, w, tipo)
        elif tipo == EdgeKind.HADAMARD:
            d.remove_edge(b, w)
            z = d.add_vertex(VertexKind.Z_SPIDER, 0)
            d.add_edge(b, z, EdgeKind.SIMPLE)
            d.add_edge(z, w, EdgeKind.HADAMARD)
    # un spider con varias fronteras conserva sólo la de menor id
    for v in d.spiders():
        propias = [w for w in d.neighbours(v) if d.is_boundary(w)]
        for b in propias[1:]:
            d.remove_edge(b, v)
            z = d.add_vertex(VertexKind.Z_SPIDER, 0)
            z2 = d.add_vertex(VertexKind.Z_SPIDER, 0)
            d.add_edge(b, z, EdgeKind.SIMPLE)
            d.add_edge(z, z2, EdgeKind.HADAMARD)
            d.add_edge(z2, v, EdgeKind.HADAMARD)


def normalizar(d: ZXDiagram, traza=None) -> ZXDiagram:
    """Versión en el lugar de to_graph_like (usada por el simplificador)"""
    _cambiar_color(d)
    _quitar_cajas_h(d)
    _fusionar_todo(d, traza)
    _resolver_lazos(d, traza)
    _resolver_paralelas(d, traza)
    _ordenar_fronteras(d)
    return d


def to_graph_like(d: ZXDiagram, traza=None) -> ZXDiagram:
    """
    Devuelve una copia en forma graph-like con el mismo valor exacto.

    Pasos: cambio de color X→Z, eliminación de cajas H, fusión de spiders
    unidos por aristas simples, lazos y aristas paralelas con su escalar, y
    separación de fronteras (aristas de frontera simples, a lo sumo una
    frontera por spider).
    """
    return normalizar(d.copy(), traza)


def is_graph_like(d: ZXDiagram) -> bool:
    for v in d.vertices():
        if d.is_boundary(v):
            if d.degree(v) != 1 or sum(d.edge_counts(v, d.neighbours(v)[0])) != 1:
                return False
            w = d.neighbours(v)[0]
            if d.is_boundary(w) or d.edge_kind(v, w) != EdgeKind.SIMPLE:
                return False
            continue
        if d.kind(v) != VertexKind.Z_SPIDER:
            return False
        if d.edge_counts(v, v) != (0, 0):
            return False
        fronteras = 0
        for w in d.neighbours(v):
            s, h = d.edge_counts(v, w)
            if s + h != 1:
                return False
            if d.is_boundary(w):
                fronteras += 1
            elif s:
                return False
        if fronteras > 1:
            return False
    return True


# ======================================================================
# Oráculo tensorial
# ======================================================================

def tensor(d: ZXDiagram, cap: int = 14, boundary_cap: int = 10) -> np.ndarray:
    """
    Evalúa el diagrama como tensor denso (sólo para pruebas).

    El orden de índices es entradas y luego salidas. Cada spider Z aporta una
    variable binaria con su vector de fase; un spider X es un spider Z con una
    H en cada pata; cada caja H aporta una matriz H entre sus dos patas.

    Raises:
        OracleCapExceeded: más de `cap` spiders o más de `boundary_cap` fronteras
    """
    spiders = d.spiders()
    if len(spiders) > cap:
        raise OracleCapExceeded(
            f"El oráculo admite hasta {cap} spiders (el diagrama tiene {len(spiders)})")
    fronteras = list(d.inputs) + list(d.outputs)
    if len(fronteras) > boundary_cap:
        raise OracleCapExceeded(
            f"El oráculo admite hasta {boundary_cap} fronteras (hay {len(fronteras)})")

    contador = [0]

    def nueva_etiqueta() -> int:
        contador[0] += 1
        if contador[0] > MAX_ETIQUETAS:
            raise OracleCapExceeded("Demasiados índices para el oráculo")
        return contador[0] - 1

    operandos: List[Any] = []
    variable: Dict[int, int] = {}
    patas_h: Dict[int, List[int]] = {}
    for v in d.vertices():
        tipo = d.kind(v)
        if tipo in (VertexKind.Z_SPIDER, VertexKind.X_SPIDER):
            variable[v] = nueva_etiqueta()
            fase = np.exp(1j * np.pi * d.phase(v) / 4.0)
            operandos += [np.array([1.0, fase], dtype=complex), [variable[v]]]
        elif tipo == VertexKind.H_BOX:
            patas_h[v] = []
        else:
            if d.degree(v) != 1 or sum(d.edge_counts(v, d.neighbours(v)[0])) != 1:
                raise ConstructionError(f"La frontera {v} debe tener grado 1")
            variable[v] = nueva_etiqueta()

    def extremo(v: int) -> int:
        tipo = d.kind(v)
        if tipo == VertexKind.H_BOX:
            etiqueta = nueva_etiqueta()
            patas_h[v].append(etiqueta)
            return etiqueta
        if tipo == VertexKind.X_SPIDER:
            etiqueta = nueva_etiqueta()
            operandos.extend([H_MATRIZ, [variable[v], etiqueta]])
            return etiqueta
        return variable[v]

    for u, v, s, h in d.edges():
        for matriz, cantidad in ((IDENTIDAD, s), (H_MATRIZ, h)):
            for _ in range(cantidad):
                operandos.extend([matriz, [extremo(u), extremo(v)]])

    for v, patas in patas_h.items():
        if len(patas) != 2:
            raise ConstructionError(f"La caja H {v} debe tener exactamente 2 patas")
        operandos.extend([H_MATRIZ, patas])

    escalar = d.scalar.to_float()
    salida = [variable[b] for b in fronteras]
    if not operandos:
        return np.array(escalar, dtype=complex)
    resultado = np.einsum(*operandos, salida, optimize="greedy")
    return np.asarray(resultado, dtype=complex) * escalar


# ======================================================================
# Estados, efectos, adjunto y duplicación
# ======================================================================

def _plug_en_sitio(d: ZXDiagram, b: int, valor: Asignacion) -> None:
    clave = str(valor)
    if clave not in ESTADOS_PLUG:
        raise ConstructionError(
            f"Valor '{valor}' no reconocido. Opciones válidas: {list(ESTADOS_PLUG)}")
    if not d.has_vertex(b) or not d.is_boundary(b):
        raise ConstructionError(f"{b} no es una frontera del diagrama")
    tipo, fase = ESTADOS_PLUG[clave]
    d.set_kind(b, tipo)
    d.set_phase(b, fase)
    if b in d.inputs:
        d.inputs.remove(b)
    if b in d.outputs:
        d.outputs.remove(b)
    # X(0) de una pata = √2|0⟩, Z(0) de una pata = √2|+⟩
    d.mult_scalar(Scalar.one_over_sqrt2_power(1))


def plug(d: ZXDiagram, assignments: Dict[int, Asignacion]) -> ZXDiagram:
    """
    Reemplaza fronteras por estados/efectos |0⟩, |1⟩, |+⟩ (o ⟨0|, ⟨1|, ⟨+|).

    Args:
        assignments: id de frontera -> 0, 1, "+" o "-"
    """
    resultado = d.copy()
    for b, valor in assignments.items():
        _plug_en_sitio(resultado, b, valor)
    return resultado


def plug_inputs(d: ZXDiagram, bits: Sequence[Asignacion]) -> ZXDiagram:
    if len(bits) != len(d.inputs):
        raise ConstructionError(
            f"Se esperaban {len(d.inputs)} valores de entrada, llegaron {len(bits)}")
    return plug(d, dict(zip(d.inputs, bits)))


def plug_outputs(d: ZXDiagram, bits: Sequence[Asignacion]) -> ZXDiagram:
    if len(bits) != len(d.outputs):
        raise ConstructionError(
            f"Se esperaban {len(d.outputs)} valores de salida, llegaron {len(bits)}")
    return plug(d, dict(zip(d.outputs, bits)))


def adjoint(d: ZXDiagram) -> ZXDiagram:
    """Espejo del diagrama: entradas ↔ salidas, fases negadas, escalar conjugado"""
    resultado = d.copy()
    for v in resultado.vertices():
        tipo = resultado.kind(v)
        if tipo == VertexKind.BOUNDARY_IN:
            resultado.set_kind(v, VertexKind.BOUNDARY_OUT)
        elif tipo == VertexKind.BOUNDARY_OUT:
            resultado.set_kind(v, VertexKind.BOUNDARY_IN)
        else:
            resultado.set_phase(v, -resultado.phase(v))
    resultado.inputs, resultado.outputs = list(d.outputs), list(d.inputs)
    resultado.scalar = d.scalar.conj()
    return resultado


def _unir_fronteras(d: ZXDiagram, b1: int, b2: int) -> None:
    """Conecta los vecinos de dos fronteras y elimina ambas"""
    w1, tipo1 = d.boundary_neighbour(b1)
    w2, tipo2 = d.boundary_neighbour(b2)
    d.remove_vertex(b1)
    d.remove_vertex(b2)
    hadamards = (tipo1 == EdgeKind.HADAMARD) + (tipo2 == EdgeKind.HADAMARD)
    d.add_edge(w1, w2, EdgeKind.HADAMARD if hadamards % 2 else EdgeKind.SIMPLE)


def double(d: ZXDiagram, fixed: Dict[int, int]) -> ZXDiagram:
    """
    Diagrama escalar de ⟨0…0|U†(P ⊗ I)U|0…0⟩.

    Args:
        d: diagrama de circuito con las entradas ya conectadas a estados
        fixed: posición de salida (cúbit) -> bit proyectado

    Returns:
        diagrama cerrado: copia de d compuesta con su adjunto; las salidas
        fijadas reciben el efecto ⟨b| en ambas copias y las libres se unen
    """
    if d.inputs:
        raise ConstructionError("double requiere las entradas ya conectadas")
    for q, bit in fixed.items():
        if not 0 <= q < len(d.outputs):
            raise ConstructionError(f"Salida {q} fuera de rango")
        if bit not in (0, 1):
            raise ConstructionError(f"Bit {bit} inválido para la salida {q}")
    resultado = d.copy()
    espejo = adjoint(d)
    mapa = resultado.absorb(espejo)
    entradas_espejo = [mapa[v] for v in espejo.inputs]
    salidas = list(resultado.outputs)
    resultado.outputs = []
    for q, (b_ida, b_vuelta) in enumerate(zip(salidas, entradas_espejo)):
        if q in fixed:
            _plug_en_sitio(resultado, b_ida, fixed[q])
            _plug_en_sitio(resultado, b_vuelta, fixed[q])
        else:
            _unir_fronteras(resultado, b_ida, b_vuelta)
    return resultado
