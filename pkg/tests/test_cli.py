"""Tests de la línea de comandos (main.main) de punta a punta"""

import json
from types import SimpleNamespace

import pandas as pd
import pytest

import main
from apps import decomposer
from apps.cli import INCONSISTENCIA, TIEMPO_AGOTADO, fila_bench, generar_instancia
from utils.config import SimulationConfig
from utils.data_loader import DataLoader
from utils.scalar_ring import Scalar

BELL = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n"


@pytest.fixture
def bell(tmp_path):
    ruta = tmp_path / "bell.qasm"
    ruta.write_text(BELL, encoding="utf-8")
    return ruta


def _json(capsys):
    return json.loads(capsys.readouterr().out)


class TestGen:
    def test_pauli(self, tmp_path, capsys):
        base = tmp_path / "inst" / "pauli_1"
        codigo = main.main(["gen", "pauli", "--qubits", "6", "--tcount", "4",
                            "--seed", "1", "--out", str(base)])
        assert codigo == 0
        salida = _json(capsys)
        assert salida["t_count"] == 4
        sidecar = json.loads((tmp_path / "inst" / "pauli_1.json").read_text(encoding="utf-8"))
        assert sidecar["family"] == "pauli"
        assert sidecar["seed"] == 1
        assert DataLoader.cargar_circuito(salida["qasm"]).n_qubits == 6

    def test_hidden_shift(self, tmp_path, capsys):
        base = tmp_path / "hs"
        assert main.main(["gen", "hidden-shift", "--qubits", "6", "--ccz", "2",
                          "--seed", "7", "--out", str(base)]) == 0
        sidecar = DataLoader.cargar_sidecar(_json(capsys)["qasm"])
        assert len(sidecar["shift"]) == 6
        assert sidecar["t_count"] == 14

    def test_falta_ccz(self, tmp_path, capsys):
        assert main.main(["gen", "hidden-shift", "--qubits", "6", "--out", str(tmp_path / "x")]) == 2
        assert "--ccz" in capsys.readouterr().err

    def test_falta_qubits(self, tmp_path):
        with pytest.raises(SystemExit) as info:
            main.main(["gen", "pauli", "--tcount", "3", "--out", str(tmp_path / "x")])
        assert info.value.code == 2

    def test_ccz_impar_es_error_de_uso(self, tmp_path):
        assert main.main(["gen", "hidden-shift", "--qubits", "6", "--ccz", "3",
                          "--out", str(tmp_path / "x")]) == 2

    def test_generar_instancia_familia_desconocida(self):
        with pytest.raises(ValueError):
            generar_instancia("qft", 4, 2, 0)


class TestSimulacion:
    def test_amplitud_bell(self, bell, capsys):
        assert main.main(["amplitude", str(bell), "--output", "00", "--depth", "1"]) == 0
        registro = _json(capsys)
        assert registro["command"] == "amplitude"
        assert registro["outcome"] == "success"
        assert registro["value"] == str(Scalar(1, 0, 1, 0, 1))
        assert registro["probability"] == "1/2^1"
        assert registro["leaf_terms"] == 1
        assert list(registro) == DataLoader().campos("run_record")

    def test_amplitud_con_traza(self, bell, tmp_path, capsys):
        traza = tmp_path / "pasos.jsonl"
        assert main.main(["amplitude", str(bell), "--input", "00", "--output", "11",
                          "--trace", str(traza)]) == 0
        assert _json(capsys)["probability"] == "1/2^1"
        lineas = traza.read_text(encoding="utf-8").splitlines()
        assert lineas and all("rule" in json.loads(linea) for linea in lineas)

    def test_bits_invalidos(self, bell):
        assert main.main(["amplitude", str(bell), "--output", "0a"]) == 2
        assert main.main(["amplitude", str(bell), "--output", "000"]) == 2

    def test_marginal(self, bell, capsys):
        assert main.main(["marginal", str(bell), "--fix", "0=1", "--fix", "1=1"]) == 0
        registro = _json(capsys)
        assert registro["probability"] == "1/2^1"
        assert registro["bits"] == "0=1,1=1"

    def test_marginal_fijado_invalido(self, bell):
        assert main.main(["marginal", str(bell), "--fix", "5=1"]) == 2
        assert main.main(["marginal", str(bell), "--fix", "uno"]) == 2

    def test_sample_hidden_shift(self, tmp_path, capsys):
        base = tmp_path / "hs"
        main.main(["gen", "hidden-shift", "--qubits", "6", "--ccz", "2", "--seed", "3",
                   "--out", str(base)])
        qasm = _json(capsys)["qasm"]
        assert main.main(["sample", qasm, "--seed", "0", "--depth", "1"]) == 0
        registro = _json(capsys)
        assert registro["bits"] == registro["expected_bits"]
        assert registro["probability"] == "1"
        assert registro["spec"]["n_ccz"] == 2

    def test_tiempo_agotado(self, tmp_path, capsys):
        ruta = tmp_path / "ht.qasm"
        ruta.write_text("qreg q[1];\nh q[0];\nt q[0];\nh q[0];\n", encoding="utf-8")
        codigo = main.main(["amplitude", str(ruta), "--output", "0", "--timeout-secs", "1e-9"])
        assert codigo == TIEMPO_AGOTADO
        assert _json(capsys)["outcome"] == "timeout"

    def test_qasm_invalido(self, tmp_path, capsys):
        ruta = tmp_path / "malo.qasm"
        ruta.write_text("qreg q[1];\nrx q[0];\n", encoding="utf-8")
        assert main.main(["sample", str(ruta)]) == 2
        assert f"{ruta}:2:1" in capsys.readouterr().err

    def test_archivo_inexistente(self, tmp_path):
        assert main.main(["sample", str(tmp_path / "no.qasm")]) == 2

    def test_codigo_de_inconsistencia(self):
        assert INCONSISTENCIA == 4


class TestBench:
    def test_sin_instancias_solo_cabecera(self, capsys):
        assert main.main(["bench", "--family", "pauli", "--qubits", "4",
                          "--sizes", "2", "--per-size", "0"]) == 0
        cabecera = capsys.readouterr().out.strip().split(",")
        assert cabecera == DataLoader().campos("bench_csv")

    def test_bench_y_reporte(self, tmp_path, capsys):
        csv = tmp_path / "bench.csv"
        pdf = tmp_path / "bench.pdf"
        assert main.main(["bench", "--family", "hidden-shift", "--qubits", "6", "--sizes", "0", "2",
                          "--per-size", "2", "--seed", "3", "--depth", "1", "--out", str(csv)]) == 0
        tabla = pd.read_csv(csv, dtype={"bits": str, "expected_bits": str})
        assert len(tabla) == 4
        assert list(tabla["seed"]) == [3, 4, 3, 4]
        assert (tabla["outcome"] == "success").all()
        assert tabla["matches_expected"].all()
        capsys.readouterr()

        assert main.main(["report", str(csv), "--out", str(pdf)]) == 0
        assert _json(capsys)["rows"] == 4
        assert pdf.read_bytes().startswith(b"%PDF")

    def test_preset_desconocido(self):
        assert main.main(["bench", "--preset", "no-existe"]) == 2

    def test_un_limite_por_instancia(self, monkeypatch):
        ahora = [0.0]

        def reloj():
            ahora[0] += 1.0
            return ahora[0]

        monkeypatch.setattr(decomposer, "time", SimpleNamespace(time=reloj))
        cfg = SimulationConfig(parallel_depth=1, workers=1, timeout_secs=5.0)
        assert fila_bench("hidden-shift", 6, 2, 3, cfg)["outcome"] == "timeout"
        holgado = SimulationConfig(parallel_depth=1, workers=1, timeout_secs=1e6)
        assert fila_bench("hidden-shift", 6, 2, 3, holgado)["outcome"] == "success"


class TestWorkers:
    def test_mismo_registro_con_uno_y_dos_workers(self, tmp_path, capsys):
        base = tmp_path / "pauli"
        main.main(["gen", "pauli", "--qubits", "6", "--tcount", "10", "--seed", "2",
                   "--out", str(base)])
        qasm = _json(capsys)["qasm"]
        registros = []
        for hilos in ("1", "2"):
            assert main.main(["sample", qasm, "--seed", "5", "--depth", "1",
                              "--threads", hilos]) == 0
            registro = _json(capsys)
            registro.pop("wall_time_ms")
            registro["config"].pop("workers")
            registros.append(registro)
        assert registros[0] == registros[1]


@pytest.mark.slow
class TestPresetsGrandes:
    def test_hidden_shift_50_cubits_10_ccz(self, tmp_path):
        csv = tmp_path / "hs.csv"
        assert main.main(["bench", "--preset", "hidden-shift-50q-ccz10", "--per-size", "1",
                          "--out", str(csv)]) == 0
        tabla = pd.read_csv(csv, dtype={"bits": str, "expected_bits": str})
        assert len(tabla) == 1
        assert (tabla["outcome"] == "success").all()
        assert tabla["matches_expected"].all()

    def test_pauli_50_cubits_t30(self, tmp_path):
        csv = tmp_path / "pauli.csv"
        assert main.main(["bench", "--preset", "pauli-50q-t30", "--per-size", "1",
                          "--out", str(csv)]) == 0
        tabla = pd.read_csv(csv)
        assert len(tabla) == 1
        assert (tabla["outcome"] == "success").all()
        assert (tabla["t_count"] == 30).all()
