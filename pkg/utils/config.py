#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
CONFIGURACIÓN DE SIMULACIÓN

Parámetros compartidos por el descomponedor, el simulador y la línea de
comandos. Los valores por defecto reproducen el experimento original
(profundidad paralela 3, codificación CCZ de 7 T, límite de 5 minutos).
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict

MODOS_CCZ = ("SevenT", "FourT")
POLITICAS_OBJETIVO = ("lowest-id", "most-connected")

TIMEOUT_DEFECTO = 300.0
PROFUNDIDAD_DEFECTO = 3


@dataclass
class SimulationConfig:
    """Parámetros de una simulación"""
    parallel_depth: int = PROFUNDIDAD_DEFECTO
    workers: int = 1
    ccz_mode: str = "SevenT"
    timeout_secs: float = TIMEOUT_DEFECTO
    debug: bool = False
    target_policy: str = "lowest-id"
    oracle_cap: int = 14
    oracle_boundary_cap: int = 10
    independent_marginals: bool = False

    def __post_init__(self):
        if self.ccz_mode not in MODOS_CCZ:
            raise ValueError(
                f"Modo CCZ '{self.ccz_mode}' no reconocido. "
                f"Opciones válidas: {list(MODOS_CCZ)}"
            )
        if self.target_policy not in POLITICAS_OBJETIVO:
            raise ValueError(
                f"Política '{self.target_policy}' no reconocida. "
                f"Opciones válidas: {list(POLITICAS_OBJETIVO)}"
            )
        if self.parallel_depth < 0:
            raise ValueError("parallel_depth no puede ser negativo")
        if self.workers < 1:
            raise ValueError("Se necesita al menos un worker")
        if self.timeout_secs is not None and self.timeout_secs <= 0:
            raise ValueError("timeout_secs debe ser positivo")
        # topes del oráculo tensorial de la auditoría en modo depuración
        if self.oracle_cap < 1 or self.oracle_boundary_cap < 0:
            raise ValueError("oracle_cap debe ser >= 1 y oracle_boundary_cap >= 0")

    @classmethod
    def from_args(cls, args: Any) -> "SimulationConfig":
        """Arma la configuración a partir de los flags de argparse."""
        return cls(
            parallel_depth=getattr(args, "depth", PROFUNDIDAD_DEFECTO),
            workers=getattr(args, "threads", 1),
            ccz_mode=getattr(args, "ccz_mode", "SevenT"),
            timeout_secs=getattr(args, "timeout_secs", TIMEOUT_DEFECTO),
            debug=getattr(args, "debug", False),
            target_policy=getattr(args, "policy", "lowest-id"),
            independent_marginals=getattr(args, "independent", False),
        )

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)
