"""Tests de la aritmética exacta en Z[1/2, ω]"""

import cmath
import math

import numpy as np
import pytest

from utils.scalar_ring import Scalar, add, as_real, from_phase, mul, one_over_sqrt2_power, to_float

OMEGA = cmath.exp(1j * math.pi / 4)


def _aleatorio(rng) -> Scalar:
    k = int(rng.integers(-2, 4))
    a, b, c, d = (int(x) for x in rng.integers(-9, 10, size=4))
    return Scalar(k, a, b, c, d)


class TestEjemplos:
    def test_identidad_multiplicativa(self):
        s = Scalar(3, 1, -2, 5, 7)
        assert mul(Scalar(0, 1, 0, 0, 0), s) == s

    def test_omega_al_cuadrado_es_i(self):
        assert mul(Scalar(0, 0, 1, 0, 0), Scalar(0, 0, 1, 0, 0)) == Scalar(0, 0, 0, 1, 0)

    def test_raiz2_al_cuadrado_canonico(self):
        r = mul(Scalar(0, 0, 1, 0, 1), Scalar(0, 0, 1, 0, 1))
        assert (r.k, r.a, r.b, r.c, r.d) == (-1, 1, 0, 0, 0)
        assert r == Scalar.from_int(2)

    def test_suma(self):
        s = Scalar(1, 3, 0, 1, 0)
        assert add(s, Scalar.cero()) == s
        assert add(Scalar(1, 1, 1, 0, 0), Scalar(1, 1, -1, 0, 0)) == Scalar.uno()
        assert add(Scalar(0, 0, 1, 0, 0), Scalar(0, 0, 0, 0, 1)) == Scalar(0, 0, 1, 0, 1)

    @pytest.mark.parametrize("m, esperado", [
        (0, Scalar(0, 1, 0, 0, 0)),
        (2, Scalar(0, 0, 0, 1, 0)),
        (4, Scalar(0, -1, 0, 0, 0)),
        (7, Scalar(0, 0, 0, 0, 1)),
        (-1, Scalar(0, 0, 0, 0, 1)),
        (9, Scalar(0, 0, 1, 0, 0)),
    ])
    def test_from_phase(self, m, esperado):
        assert from_phase(m) == esperado

    @pytest.mark.parametrize("p, esperado", [
        (0, Scalar(0, 1, 0, 0, 0)),
        (1, Scalar(1, 0, 1, 0, 1)),
        (2, Scalar(1, 1, 0, 0, 0)),
        (-1, Scalar(0, 0, 1, 0, 1)),
    ])
    def test_potencias_de_raiz2(self, p, esperado):
        assert one_over_sqrt2_power(p) == esperado
        assert Scalar.sqrt2_power(-p) == esperado

    def test_as_real(self):
        assert as_real(Scalar(1, 1, 1, 0, 1)) == (1, 1, 1)
        assert as_real(Scalar(0, 0, 0, 1, 0)) is None
        assert as_real(Scalar(0, 2, 0, 0, 0)) == (0, 2, 0)

    def test_to_float(self):
        assert to_float(Scalar.uno()) == pytest.approx(1.0)
        assert to_float(Scalar(0, 0, 1, 0, 0)) == pytest.approx(OMEGA)
        assert to_float(Scalar(1, 1, 1, 0, 0)) == pytest.approx(0.8535533905932737 + 0.3535533905932738j)


class TestPropiedades:
    def test_omega_orden_8(self):
        assert from_phase(1) * from_phase(7) == Scalar.uno()
        producto = Scalar.uno()
        for _ in range(8):
            producto = producto * from_phase(1)
        assert producto == Scalar.uno()

    def test_canonico_unico(self):
        assert Scalar(2, 4, 0, 0, 0) == Scalar(0, 1, 0, 0, 0)
        assert hash(Scalar(2, 4, 0, 0, 0)) == hash(Scalar.uno())
        assert Scalar(5, 0, 0, 0, 0) == Scalar.cero()
        assert Scalar(3, 0, 0, 0, 0).canonical().k == 0

    def test_operaciones_coinciden_con_complejos(self, rng):
        for _ in range(300):
            x, y = _aleatorio(rng), _aleatorio(rng)
            assert complex(x * y) == pytest.approx(complex(x) * complex(y), abs=1e-9)
            assert complex(x + y) == pytest.approx(complex(x) + complex(y), abs=1e-9)
            assert complex(x - y) == pytest.approx(complex(x) - complex(y), abs=1e-9)
            assert complex(x.conj()) == pytest.approx(complex(x).conjugate(), abs=1e-9)

    def test_abs2_es_real(self, rng):
        for _ in range(100):
            x = _aleatorio(rng)
            lectura = x.abs2().as_real()
            assert lectura is not None
            assert x.abs2().to_float().real == pytest.approx(abs(complex(x)) ** 2, abs=1e-9)

    def test_distributiva(self, rng):
        for _ in range(100):
            x, y, z = (_aleatorio(rng) for _ in range(3))
            assert x * (y + z) == x * y + x * z

    def test_leyes_del_anillo(self, rng):
        for _ in range(10_000):
            x, y, z = (_aleatorio(rng) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x + y == y + x
            assert x * y == y * x
            m, n = (int(v) for v in rng.integers(-16, 16, size=2))
            assert from_phase(m + n) == from_phase(m) * from_phase(n)

    def test_enteros_grandes(self):
        grande = Scalar.from_int(7)
        for _ in range(40):
            grande = grande * Scalar.from_int(7)
        assert grande.a == 7 ** 41
        assert (grande - Scalar.from_int(7 ** 41)).is_zero()

    def test_texto_ida_y_vuelta(self, rng):
        for _ in range(20):
            x = _aleatorio(rng).canonical()
            assert Scalar.parse(str(x)) == x

    def test_parse_invalido(self):
        with pytest.raises(ValueError):
            Scalar.parse("(1, 2, 3)")

    def test_operandos_enteros(self):
        assert Scalar.uno() + 1 == Scalar.from_int(2)
        assert 3 * Scalar.uno() == Scalar.from_int(3)
        assert 1 - Scalar.uno() == Scalar.cero()
        with pytest.raises(TypeError):
            Scalar.uno() * 0.5

    def test_to_float_arreglo(self):
        valores = np.array([complex(from_phase(m)) for m in range(8)])
        np.testing.assert_allclose(valores, OMEGA ** np.arange(8), atol=1e-12)
