"""Tests del diagrama ZX, la normalización y el oráculo tensorial"""

import numpy as np
import pytest

from apps.zx_graph import (EdgeKind, VertexKind, ZXDiagram, add_spider, adjoint,
                           double, is_graph_like, plug, plug_inputs, plug_outputs,
                           tensor, to_graph_like)
from utils.errores import ConstructionError, OracleCapExceeded
from utils.scalar_ring import Scalar

RAIZ2 = np.sqrt(2.0)
OMEGA = np.exp(1j * np.pi / 4)


def _cable(*fases_z):
    """Un cúbit: entrada, spiders Z en serie y salida"""
    d = ZXDiagram()
    anterior = d.add_boundary(es_entrada=True)
    for m in fases_z:
        v = d.add_vertex(VertexKind.Z_SPIDER, m)
        d.add_edge(anterior, v, EdgeKind.SIMPLE)
        anterior = v
    salida = d.add_boundary(es_entrada=False)
    d.add_edge(anterior, salida, EdgeKind.SIMPLE)
    return d


def _cable_h():
    d = ZXDiagram()
    e = d.add_boundary(es_entrada=True)
    h = d.add_vertex(VertexKind.H_BOX)
    s = d.add_boundary(es_entrada=False)
    d.add_edge(e, h, EdgeKind.SIMPLE)
    d.add_edge(h, s, EdgeKind.SIMPLE)
    return d


def _diagrama_aleatorio(rng, n_spiders=6, fronteras=2):
    """Mezcla de spiders Z/X, cajas H, aristas de ambos tipos, paralelas y lazos"""
    d = ZXDiagram()
    vs = []
    for _ in range(n_spiders):
        tipo = VertexKind.Z_SPIDER if rng.random() < 0.6 else VertexKind.X_SPIDER
        vs.append(d.add_vertex(tipo, int(rng.integers(0, 8))))
    for _ in range(int(rng.integers(n_spiders, 2 * n_spiders + 1))):
        u, v = (int(x) for x in rng.integers(0, n_spiders, size=2))
        tipo = EdgeKind.SIMPLE if rng.random() < 0.5 else EdgeKind.HADAMARD
        if rng.random() < 0.15 and u != v:
            h = d.add_vertex(VertexKind.H_BOX)
            d.add_edge(vs[u], h, tipo)
            d.add_edge(h, vs[v], EdgeKind.SIMPLE)
        else:
            d.add_edge(vs[u], vs[v], tipo)
    for i in range(fronteras):
        b = d.add_boundary(es_entrada=(i % 2 == 0))
        tipo = EdgeKind.SIMPLE if rng.random() < 0.7 else EdgeKind.HADAMARD
        d.add_edge(b, vs[int(rng.integers(0, n_spiders))], tipo)
    return d


class TestConstruccion:
    def test_add_spider(self):
        d = ZXDiagram()
        z = add_spider(d, VertexKind.Z_SPIDER, 0)
        assert d.num_vertices() == 1
        x = add_spider(d, VertexKind.X_SPIDER, 0, [(z, EdgeKind.SIMPLE)])
        assert d.num_vertices() == 2
        assert d.edge_kind(z, x) == EdgeKind.SIMPLE

    def test_aristas_paralelas_se_registran(self):
        d = ZXDiagram()
        a = d.add_vertex(VertexKind.Z_SPIDER)
        add_spider(d, VertexKind.Z_SPIDER, 0, [(a, EdgeKind.HADAMARD), (a, EdgeKind.HADAMARD)])
        assert d.edge_counts(a, 1) == (0, 2)
        with pytest.raises(ConstructionError):
            d.edge_kind(a, 1)

    def test_vecino_inexistente(self):
        d = ZXDiagram()
        with pytest.raises(ConstructionError):
            add_spider(d, VertexKind.Z_SPIDER, 0, [(7, EdgeKind.SIMPLE)])

    def test_ids_no_se_reutilizan(self):
        d = ZXDiagram()
        a = d.add_vertex(VertexKind.Z_SPIDER)
        d.remove_vertex(a)
        assert d.add_vertex(VertexKind.Z_SPIDER) != a

    def test_json_conserva_el_diagrama(self, rng):
        d = _diagrama_aleatorio(rng)
        d.mult_scalar(Scalar.from_phase(3))
        otro = ZXDiagram.from_json(d.to_json())
        assert otro.to_dict() == d.to_dict()
        np.testing.assert_allclose(tensor(otro), tensor(d), atol=1e-12)

    def test_json_version_desconocida(self):
        datos = ZXDiagram().to_dict()
        datos["version"] = 99
        with pytest.raises(ConstructionError):
            ZXDiagram.from_dict(datos)


class TestOraculo:
    def test_z_de_una_pata(self):
        d = ZXDiagram()
        z = d.add_vertex(VertexKind.Z_SPIDER, 0)
        b = d.add_boundary(es_entrada=False)
        d.add_edge(z, b, EdgeKind.SIMPLE)
        np.testing.assert_allclose(tensor(d), [1.0, 1.0], atol=1e-12)

    def test_x_de_una_pata(self):
        d = ZXDiagram()
        x = d.add_vertex(VertexKind.X_SPIDER, 0)
        b = d.add_boundary(es_entrada=False)
        d.add_edge(x, b, EdgeKind.SIMPLE)
        np.testing.assert_allclose(tensor(d), [RAIZ2, 0.0], atol=1e-12)

    def test_escalar_nulo(self):
        d = ZXDiagram()
        d.add_vertex(VertexKind.Z_SPIDER, 4)
        assert abs(complex(tensor(d))) < 1e-12

    def test_caja_h(self):
        H = np.array([[1, 1], [1, -1]]) / RAIZ2
        np.testing.assert_allclose(tensor(_cable_h()), H, atol=1e-12)

    def test_limites(self):
        d = ZXDiagram()
        for _ in range(15):
            d.add_vertex(VertexKind.Z_SPIDER)
        with pytest.raises(OracleCapExceeded):
            tensor(d)
        e = ZXDiagram()
        for i in range(12):
            b = e.add_boundary(es_entrada=True)
            z = e.add_vertex(VertexKind.Z_SPIDER)
            e.add_edge(b, z, EdgeKind.SIMPLE)
        with pytest.raises(OracleCapExceeded):
            tensor(e)


class TestGraphLike:
    def test_cnot(self):
        d = ZXDiagram()
        e0, e1 = d.add_boundary(True), d.add_boundary(True)
        z = d.add_vertex(VertexKind.Z_SPIDER)
        x = d.add_vertex(VertexKind.X_SPIDER)
        s0, s1 = d.add_boundary(False), d.add_boundary(False)
        for a, b in ((e0, z), (z, s0), (e1, x), (x, s1), (z, x)):
            d.add_edge(a, b, EdgeKind.SIMPLE)
        d.mult_scalar(Scalar.sqrt2_power(1))
        g = to_graph_like(d)
        assert is_graph_like(g)
        # z y x sobreviven unidos por una arista Hadamard; el resto son identidades de frontera
        assert g.edge_kind(z, x) == EdgeKind.HADAMARD
        assert sum(1 for v in g.spiders() if g.phase(v) != 0) == 0
        np.testing.assert_allclose(tensor(g), tensor(d), atol=1e-12)
        cnot = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
        np.testing.assert_allclose(tensor(d).reshape(4, 4).T, cnot, atol=1e-12)

    def test_fusion_suma_fases(self):
        g = to_graph_like(_cable(1, 1))
        assert sorted(g.phase(v) for v in g.spiders()) == [0, 0, 2]
        assert g.odd_count() == 0

    def test_lazo_hadamard(self):
        d = _cable(0)
        z = d.spiders()[0]
        d.add_edge(z, z, EdgeKind.HADAMARD)
        g = to_graph_like(d)
        assert g.edge_counts(z, z) == (0, 0)
        assert g.phase(z) == 4
        np.testing.assert_allclose(tensor(g), tensor(d), atol=1e-12)

    @pytest.mark.parametrize("tipo, valor", [(EdgeKind.HADAMARD, 2), (EdgeKind.SIMPLE, 0)])
    def test_caja_h_cerrada_sobre_si_misma(self, tipo, valor):
        d = ZXDiagram()
        h = d.add_vertex(VertexKind.H_BOX)
        d.add_edge(h, h, tipo)
        assert complex(tensor(d)) == pytest.approx(valor)
        g = to_graph_like(d)
        assert g.num_vertices() == 0
        assert g.scalar == Scalar.from_int(valor)

    def test_aleatorios_conservan_el_tensor(self, rng):
        for _ in range(500):
            d = _diagrama_aleatorio(rng, n_spiders=int(rng.integers(1, 8)))
            impares = d.odd_count()
            g = to_graph_like(d)
            assert is_graph_like(g)
            assert g.odd_count() <= impares
            np.testing.assert_allclose(tensor(g, cap=20), tensor(d, cap=20), atol=1e-9)

    def test_no_modifica_el_original(self, rng):
        d = _diagrama_aleatorio(rng)
        antes = d.to_dict()
        to_graph_like(d)
        assert d.to_dict() == antes


class TestPlug:
    def test_cable_vacio(self):
        d = ZXDiagram()
        e = d.add_boundary(True)
        s = d.add_boundary(False)
        d.add_edge(e, s, EdgeKind.SIMPLE)
        assert complex(tensor(plug(d, {e: 0, s: 0}))) == pytest.approx(1.0)
        assert abs(complex(tensor(plug(d, {e: 0, s: 1})))) < 1e-12

    def test_t_entre_mas(self):
        d = _cable(1)
        valor = complex(tensor(plug(d, {d.inputs[0]: "+", d.outputs[0]: "+"})))
        assert valor == pytest.approx((1 + OMEGA) / 2)

    def test_frontera_desconocida(self):
        d = _cable(0)
        with pytest.raises(ConstructionError):
            plug(d, {d.spiders()[0]: 0})
        with pytest.raises(ConstructionError):
            plug(d, {d.inputs[0]: "2"})

    def test_plug_inputs_longitud(self):
        with pytest.raises(ConstructionError):
            plug_inputs(_cable(0), [0, 1])
        with pytest.raises(ConstructionError):
            plug_outputs(_cable(0), [])


class TestDoble:
    def test_identidad(self):
        d = plug_inputs(_cable(), [0])
        assert complex(tensor(double(d, {0: 0}))) == pytest.approx(1.0)
        assert abs(complex(tensor(double(d, {0: 1})))) < 1e-12

    def test_hadamard(self):
        d = plug_inputs(_cable_h(), [0])
        assert complex(tensor(double(d, {0: 0}))) == pytest.approx(0.5)

    def test_t_sobre_mas(self):
        d = _cable_h()
        s = d.outputs[0]
        w, _ = d.boundary_neighbour(s)
        d.remove_edge(w, s)
        t = d.add_vertex(VertexKind.Z_SPIDER, 1)
        d.add_edge(w, t, EdgeKind.SIMPLE)
        d.add_edge(t, s, EdgeKind.SIMPLE)
        doble = double(plug_inputs(d, [0]), {0: 0})
        assert doble.is_closed()
        assert complex(tensor(doble)) == pytest.approx(0.5)

    def test_sin_fijar_es_la_norma(self):
        d = plug_inputs(_cable_h(), [1])
        assert complex(tensor(double(d, {}))) == pytest.approx(1.0)

    def test_requiere_entradas_conectadas(self):
        with pytest.raises(ConstructionError):
            double(_cable(0), {0: 0})

    def test_adjunto(self, rng):
        for _ in range(20):
            d = _diagrama_aleatorio(rng, fronteras=2)
            original = tensor(d)
            espejo = tensor(adjoint(d))
            np.testing.assert_allclose(espejo, original.conj().T, atol=1e-9)
