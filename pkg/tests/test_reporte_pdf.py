"""Tests del resumen y el PDF de benchmark"""

import pandas as pd
import pytest

from apps.reporte_pdf import cargar_bench, generar_pdf_bench, resumen_por_tamano


def _tabla():
    return pd.DataFrame({
        "family": ["pauli"] * 3 + ["hidden-shift"],
        "size": [10, 10, 20, 2],
        "outcome": ["success", "success", "timeout", "success"],
        "reduction_factor": ["4", "8", "0", "7"],
        "wall_time_ms": [1000.0, 3000.0, 300000.0, 50.0],
        "bits": ["0011", "0101", "", "000111"],
        "expected_bits": ["", "", "", "000111"],
        "probability": ["1/2^4", "1/2^4", "", "1"],
        "naive_terms": ["7", "7", "49", "7"],
        "bss_after_simp": ["7", "7", "49", "1"],
    })


class TestResumen:
    def test_por_tamano(self):
        resumen = resumen_por_tamano(_tabla())
        assert list(resumen["family"]) == ["hidden-shift", "pauli", "pauli"]
        fila = resumen[(resumen["family"] == "pauli") & (resumen["size"] == 10)].iloc[0]
        assert fila["instances"] == 2 and fila["successes"] == 2
        assert fila["success_rate"] == pytest.approx(1.0)
        assert fila["median_reduction"] == pytest.approx(6.0)
        assert fila["mean_wall_time_s"] == pytest.approx(2.0)
        timeout = resumen[resumen["size"] == 20].iloc[0]
        assert timeout["success_rate"] == 0
        assert pd.isna(timeout["median_reduction"])

    def test_tabla_vacia(self):
        assert resumen_por_tamano(pd.DataFrame()).empty


class TestPdf:
    def test_genera_pdf(self):
        buffer = generar_pdf_bench(_tabla(), titulo="Prueba")
        assert buffer.getvalue().startswith(b"%PDF")

    def test_csv_conserva_ceros(self, tmp_path):
        ruta = tmp_path / "b.csv"
        _tabla().to_csv(ruta, index=False)
        assert cargar_bench(ruta)["bits"].iloc[0] == "0011"
