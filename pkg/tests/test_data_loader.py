"""Tests del cargador de circuitos, presets y esquemas"""

import json

import pytest

from apps.circuit_ir import Circuit, GateKind
from utils.data_loader import DataLoader, cargar_circuito, cargar_preset
from utils.errores import QasmSyntaxError


@pytest.fixture
def cargador():
    return DataLoader()


class TestPresets:
    def test_presets_completos(self, cargador):
        nombres = cargador.nombres_presets()
        assert "hidden-shift-50q-ccz10" in nombres
        for nombre in nombres:
            preset = cargador.cargar_preset(nombre)
            assert preset["family"] in ("pauli", "hidden-shift")
            assert preset["per_size"] > 0 and preset["sizes"]
            if preset["family"] == "hidden-shift":
                assert all(s % 2 == 0 for s in preset["sizes"])

    def test_preset_desconocido(self, cargador):
        with pytest.raises(ValueError, match="Opciones válidas"):
            cargador.cargar_preset("no-existe")

    def test_funcion_de_conveniencia(self):
        assert cargar_preset("pauli-50q")["qubits"] == 50

    def test_carpeta_alternativa(self, tmp_path):
        (tmp_path / "presets.json").write_text(json.dumps({"x": {"family": "pauli"}}), encoding="utf-8")
        assert DataLoader(tmp_path).nombres_presets() == ["x"]
        with pytest.raises(FileNotFoundError):
            DataLoader(tmp_path).cargar_esquemas()


class TestEsquemas:
    def test_campos(self, cargador):
        campos = cargador.campos("bench_csv")
        assert campos[0] == "schema_version"
        assert "reduction_factor" in campos
        assert cargador.cargar_esquemas()["version"] == 1

    def test_esquema_desconocido(self, cargador):
        with pytest.raises(ValueError):
            cargador.campos("otro")


class TestCircuitos:
    def test_instancia_ida_y_vuelta(self, tmp_path):
        c = Circuit(3).add(GateKind.H, 0).add(GateKind.CCZ, 0, 1, 2).add(GateKind.TDG, 2)
        qasm, sidecar = DataLoader.escribir_instancia(c, {"family": "random"}, tmp_path / "a" / "b")
        assert qasm.suffix == ".qasm" and sidecar.suffix == ".json"
        assert cargar_circuito(qasm).gates == c.gates
        assert DataLoader.cargar_sidecar(qasm) == {"family": "random"}

    def test_sin_sidecar(self, tmp_path):
        assert DataLoader.cargar_sidecar(tmp_path / "suelto.qasm") is None

    def test_error_con_nombre_de_archivo(self, tmp_path):
        ruta = tmp_path / "malo.qasm"
        ruta.write_text("qreg q[1];\nrz(pi/8) q[0];\n", encoding="utf-8")
        with pytest.raises(QasmSyntaxError) as info:
            cargar_circuito(ruta)
        assert info.value.archivo == str(ruta)
        assert str(info.value).startswith(f"{ruta}:2:")

    def test_inexistente(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            cargar_circuito(tmp_path / "no.qasm")
