"""Configuración común de pytest"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Configurar el path para importar módulos (igual que main.py)
sys.path.insert(0, str(Path(__file__).parent.parent))

from utils.config import SimulationConfig  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def cfg():
    """Configuración secuencial y sin límite de tiempo"""
    return SimulationConfig(parallel_depth=1, workers=1, timeout_secs=None)
