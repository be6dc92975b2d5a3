"""Tests de amplitudes, marginales y muestreo"""

import math
import time
from collections import Counter
from types import SimpleNamespace

import numpy as np
import pytest

from apps import decomposer
from apps.benchgen import HiddenShiftSpec, gen_hidden_shift, gen_random_circuit
from apps.circuit_ir import Circuit, GateKind
from apps.simulator import amplitude, marginal, sample, single_qubit_marginals
from tests.densa import estado, marginal_densa
from utils.config import SimulationConfig
from utils.errores import ConstructionError, DecompositionTimeout
from utils.formatters import formatear_probabilidad
from utils.scalar_ring import Scalar


def _bell():
    return Circuit(2).add(GateKind.H, 0).add(GateKind.CNOT, 0, 1)


class TestAmplitud:
    def test_bell(self, cfg):
        valor, reporte = amplitude(_bell(), "00", "00", cfg)
        assert valor == Scalar(1, 0, 1, 0, 1)
        assert reporte.leaf_terms == 1
        cero, _ = amplitude(_bell(), "00", "01", cfg)
        assert cero == Scalar.cero()

    def test_entrada_distinta_de_cero(self, cfg):
        valor, _ = amplitude(Circuit(1).add(GateKind.X, 0), [1], [0], cfg)
        assert valor == Scalar.uno()

    def test_longitudes(self, cfg):
        with pytest.raises(ConstructionError):
            amplitude(_bell(), "0", "00", cfg)
        with pytest.raises(ConstructionError):
            amplitude(_bell(), "00", "02", cfg)


class TestMarginal:
    def test_hadamard(self, cfg):
        p, _ = marginal(Circuit(1).add(GateKind.H, 0), {0: 0}, cfg)
        assert p == Scalar(1, 1, 0, 0, 0)
        assert formatear_probabilidad(p) == "1/2^1"

    def test_sin_fijar_es_uno(self, cfg):
        c = gen_random_circuit(3, 15, t_max=2, seed=8)
        p, _ = marginal(c, {}, cfg)
        assert p == Scalar.uno()

    def test_completitud_exacta(self, cfg):
        for semilla in range(5):
            c = gen_random_circuit(3, 20, t_max=3, seed=semilla)
            p0, _ = marginal(c, {1: 0}, cfg)
            p1, _ = marginal(c, {1: 1}, cfg)
            assert p0 + p1 == Scalar.uno()

    def test_contra_simulacion_densa(self, cfg, rng):
        for semilla in range(8):
            c = gen_random_circuit(3, 20, t_max=3, seed=semilla)
            fijados = {int(q): int(rng.integers(0, 2)) for q in rng.choice(3, size=2, replace=False)}
            p, _ = marginal(c, fijados, cfg)
            assert p.as_real() is not None
            assert p.to_float().real == pytest.approx(marginal_densa(c, fijados), abs=1e-9)

    def test_t_entre_hadamards(self, cfg):
        c = Circuit(1).add(GateKind.H, 0).add(GateKind.T, 0).add(GateKind.H, 0)
        p, _ = marginal(c, {0: 0}, cfg)
        # |1 + ω|²/4 = (2 + √2)/4
        assert p == Scalar(2, 2, 1, 0, 1)
        assert formatear_probabilidad(p) == "(2 + 1*sqrt2)/2^2"

    def test_cubit_fuera_de_rango(self, cfg):
        with pytest.raises(ConstructionError):
            marginal(_bell(), {2: 0}, cfg)

    def test_marginales_de_un_cubit(self, cfg):
        probabilidades, reporte = single_qubit_marginals(_bell(), cfg)
        assert probabilidades == [Scalar(1, 1, 0, 0, 0)] * 2
        assert reporte.decompositions == 2


class TestMuestreo:
    def test_bell_correlacionado(self, cfg):
        for semilla in range(6):
            resultado = sample(_bell(), seed=semilla, cfg=cfg)
            assert resultado.bits in ("00", "11")
            assert resultado.probability == Scalar(1, 1, 0, 0, 0)

    def test_determinista(self, cfg):
        c = gen_random_circuit(3, 20, t_max=3, seed=4)
        uno = sample(c, seed=9, cfg=cfg)
        otro = sample(c, seed=9, cfg=cfg)
        assert uno.bits == otro.bits
        assert uno.probability == otro.probability

    def test_probabilidad_de_la_cadena(self, cfg):
        for semilla in range(5):
            c = gen_random_circuit(3, 20, t_max=4, seed=semilla)
            resultado = sample(c, seed=semilla, cfg=cfg)
            amplitud = estado(c)[int(resultado.bits, 2)]
            assert resultado.probability.to_float().real == pytest.approx(abs(amplitud) ** 2, abs=1e-9)
            assert len(resultado.conditionals) == 3

    def test_modo_depuracion_verifica_completitud(self):
        cfg = SimulationConfig(parallel_depth=1, timeout_secs=None, debug=True)
        resultado = sample(gen_random_circuit(3, 15, t_max=2, seed=6), seed=1, cfg=cfg)
        assert len(resultado.bits) == 3

    def test_hidden_shift(self, cfg):
        c, shift = gen_hidden_shift(HiddenShiftSpec(n_qubits=6, n_ccz=2, seed=3))
        resultado = sample(c, seed=0, cfg=cfg)
        assert resultado.bits == shift
        assert formatear_probabilidad(resultado.probability) == "1"
        assert all(p == pytest.approx(1.0) for p in resultado.conditionals)

    def test_hidden_shift_independiente(self):
        cfg = SimulationConfig(parallel_depth=1, timeout_secs=None, independent_marginals=True)
        c, shift = gen_hidden_shift(HiddenShiftSpec(n_qubits=6, n_ccz=2, seed=5))
        resultado = sample(c, seed=0, cfg=cfg)
        assert resultado.bits == shift
        assert resultado.probability == Scalar.uno()

    def test_to_dict(self, cfg):
        datos = sample(_bell(), seed=0, cfg=cfg).to_dict()
        assert datos["probability"] == "1/2^1"
        assert datos["probability_float"] == pytest.approx(0.5)
        assert "leaf_terms" in datos["report"]

    def test_distribucion_dentro_de_tres_sigmas(self, cfg):
        c = gen_random_circuit(3, 20, t_max=4, seed=21)
        esperadas = np.abs(estado(c)) ** 2
        n = 300
        conteo = Counter(sample(c, seed=semilla, cfg=cfg).bits for semilla in range(n))
        for x, p in enumerate(esperadas):
            observado = conteo[format(x, "03b")]
            sigma = math.sqrt(n * p * (1.0 - p))
            assert abs(observado - n * p) <= 3.0 * sigma + 1.0


class TestContraSimulacionDensa:
    def test_circuitos_con_ccz(self, cfg, rng):
        con_ccz = 0
        for semilla in range(200):
            n = 3 + semilla % 6
            c = gen_random_circuit(n, 12 + n, t_max=8, ccz=True, seed=semilla)
            con_ccz += any(g.kind == GateKind.CCZ for g in c.gates)
            psi = estado(c)
            salida = [int(b) for b in rng.integers(0, 2, size=n)]
            valor, _ = amplitude(c, [0] * n, salida, cfg)
            assert complex(valor) == pytest.approx(psi[int("".join(map(str, salida)), 2)], abs=1e-9)
            q, b = int(rng.integers(0, n)), int(rng.integers(0, 2))
            p, _ = marginal(c, {q: b}, cfg)
            assert p.to_float().real == pytest.approx(marginal_densa(c, {q: b}), abs=1e-9)
        assert con_ccz >= 20

    def test_clifford_de_50_cubits_una_hoja(self):
        cfg = SimulationConfig(parallel_depth=1, workers=1, timeout_secs=60.0)
        c = gen_random_circuit(50, 200, t_max=0, seed=1)
        _, reporte = amplitude(c, [0] * 50, [0] * 50, cfg)
        assert reporte.leaf_terms <= 1
        p0, r0 = marginal(c, {0: 0, 7: 1}, cfg)
        p1, r1 = marginal(c, {0: 1, 7: 1}, cfg)
        q, _ = marginal(c, {7: 1}, cfg)
        assert r0.leaf_terms <= 1 and r1.leaf_terms <= 1
        assert p0 + p1 == q


class _Reloj:
    """Reloj falso: cada consulta avanza un segundo"""

    def __init__(self):
        self.ahora = 1000.0

    def __call__(self):
        self.ahora += 1.0
        return self.ahora


@pytest.fixture
def reloj(monkeypatch):
    falso = _Reloj()
    monkeypatch.setattr(decomposer, "time", SimpleNamespace(time=falso))
    return falso


class TestLimiteDeTiempo:
    def test_muestreo_comparte_un_unico_limite(self, reloj):
        cfg = SimulationConfig(parallel_depth=1, workers=1, timeout_secs=5.0)
        c = gen_random_circuit(8, 40, t_max=6, seed=3)
        with pytest.raises(DecompositionTimeout) as info:
            sample(c, seed=0, cfg=cfg)
        assert info.value.reporte is not None
        # sin agotar el límite, la misma corrida termina
        holgado = SimulationConfig(parallel_depth=1, workers=1, timeout_secs=1e6)
        assert len(sample(c, seed=0, cfg=holgado).bits) == 8

    def test_marginales_de_un_cubit_comparten_el_limite(self, reloj):
        cfg = SimulationConfig(parallel_depth=1, workers=1, timeout_secs=5.0)
        with pytest.raises(DecompositionTimeout):
            single_qubit_marginals(gen_random_circuit(6, 20, t_max=0, seed=4), cfg)

    def test_limite_vencido_aun_en_clifford(self, cfg):
        vencido = time.time() - 1.0
        with pytest.raises(DecompositionTimeout):
            marginal(_bell(), {0: 0}, cfg, limite=vencido)
        with pytest.raises(DecompositionTimeout):
            amplitude(_bell(), "00", "00", cfg, limite=vencido)
