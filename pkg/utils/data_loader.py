#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo: Data Loader - Carga centralizada de circuitos y metadatos

Lee archivos QASM (con la ruta en los errores de sintaxis), los JSON
acompañantes de cada instancia, los presets de benchmark y los esquemas
versionados de salida.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from apps.circuit_ir import Circuit, emit, parse
from utils.errores import QasmSyntaxError

logger = logging.getLogger(__name__)

Ruta = Union[str, Path]


class DataLoader:
    """Clase para cargar y escribir los archivos del simulador"""

    # Rutas base
    BASE_DIR = Path(__file__).parent.parent
    DATA_DIR = BASE_DIR / 'data'

    ARCHIVOS = {
        'presets': 'presets.json',
        'schemas': 'schemas.json',
    }

    def __init__(self, data_dir: Optional[Ruta] = None):
        """Inicializa el cargador; `data_dir` reemplaza la carpeta data/ en tests"""
        self.data_dir = Path(data_dir) if data_dir is not None else self.DATA_DIR
        self._cache: Dict[str, Any] = {}

    def _obtener_ruta(self, clave: str) -> Path:
        if clave not in self.ARCHIVOS:
            raise ValueError(
                f"Archivo '{clave}' no reconocido. "
                f"Opciones válidas: {list(self.ARCHIVOS.keys())}"
            )
        ruta = self.data_dir / self.ARCHIVOS[clave]
        if not ruta.exists():
            raise FileNotFoundError(f"No se encuentra {ruta}")
        return ruta

    def _cargar_json(self, clave: str) -> Dict[str, Any]:
        if clave not in self._cache:
            with open(self._obtener_ruta(clave), 'r', encoding='utf-8') as f:
                self._cache[clave] = json.load(f)
        return self._cache[clave]

    # ------------------------------------------------------------------
    # Circuitos
    # ------------------------------------------------------------------

    @staticmethod
    def cargar_circuito(ruta: Ruta) -> Circuit:
        """
        Lee un archivo QASM.

        Raises:
            FileNotFoundError: si el archivo no existe
            QasmSyntaxError: con el nombre del archivo en el mensaje
        """
        ruta = Path(ruta)
        if not ruta.exists():
            raise FileNotFoundError(f"No se encuentra el circuito {ruta}")
        texto = ruta.read_text(encoding='utf-8')
        try:
            circuito = parse(texto)
        except QasmSyntaxError as e:
            raise e.con_archivo(str(ruta)) from None
        logger.info("Circuito %s: %d cúbits, %d compuertas", ruta.name, circuito.n_qubits, len(circuito))
        return circuito

    @staticmethod
    def ruta_sidecar(ruta_qasm: Ruta) -> Path:
        """instancia.qasm → instancia.json"""
        return Path(ruta_qasm).with_suffix('.json')

    @classmethod
    def cargar_sidecar(cls, ruta_qasm: Ruta) -> Optional[Dict[str, Any]]:
        """Metadatos de una instancia generada, o None si no hay sidecar"""
        ruta = cls.ruta_sidecar(ruta_qasm)
        if not ruta.exists():
            return None
        with open(ruta, 'r', encoding='utf-8') as f:
            return json.load(f)

    @classmethod
    def escribir_instancia(cls, circuito: Circuit, sidecar: Dict[str, Any],
                           ruta_base: Ruta) -> Tuple[Path, Path]:
        """
        Escribe el QASM y su JSON acompañante.

        Args:
            ruta_base: ruta sin extensión (o con .qasm)

        Returns:
            (ruta_qasm, ruta_json)
        """
        ruta_qasm = Path(ruta_base).with_suffix('.qasm')
        ruta_qasm.parent.mkdir(parents=True, exist_ok=True)
        ruta_qasm.write_text(emit(circuito), encoding='utf-8')
        ruta_json = cls.ruta_sidecar(ruta_qasm)
        with open(ruta_json, 'w', encoding='utf-8') as f:
            json.dump(sidecar, f, indent=2, ensure_ascii=False)
        logger.info("Instancia escrita en %s", ruta_qasm)
        return ruta_qasm, ruta_json

    # ------------------------------------------------------------------
    # Presets y esquemas
    # ------------------------------------------------------------------

    def nombres_presets(self) -> List[str]:
        return sorted(self._cargar_json('presets').keys())

    def cargar_preset(self, nombre: str) -> Dict[str, Any]:
        """
        Devuelve un preset de benchmark por nombre.

        Raises:
            ValueError: si el preset no existe
        """
        presets = self._cargar_json('presets')
        if nombre not in presets:
            raise ValueError(
                f"Preset '{nombre}' no reconocido. "
                f"Opciones válidas: {sorted(presets.keys())}"
            )
        return dict(presets[nombre])

    def cargar_esquemas(self) -> Dict[str, Any]:
        return self._cargar_json('schemas')

    def campos(self, esquema: str) -> List[str]:
        """Lista ordenada de campos de un esquema ('run_record', 'bench_csv')"""
        esquemas = self.cargar_esquemas()
        if esquema not in esquemas:
            raise ValueError(
                f"Esquema '{esquema}' no reconocido. "
                f"Opciones válidas: {sorted(k for k in esquemas if k != 'version')}"
            )
        return list(esquemas[esquema]['fields'])


def cargar_circuito(ruta: Ruta) -> Circuit:
    """Función de conveniencia para leer un QASM"""
    return DataLoader.cargar_circuito(ruta)


def cargar_preset(nombre: str) -> Dict[str, Any]:
    """Función de conveniencia para leer un preset de data/presets.json"""
    return DataLoader().cargar_preset(nombre)
