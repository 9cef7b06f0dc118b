import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mvgate.linalg import (as_state, inner, is_unitary, mat_exp_2x2, tensor,
                           unit_state)

S2 = 1.0 / np.sqrt(2.0)

finite_floats = st.floats(min_value=-10.0, max_value=10.0,
                          allow_nan=False, allow_infinity=False)
complex_amps = st.complex_numbers(max_magnitude=10.0,
                                  allow_nan=False, allow_infinity=False)


def taylor_exp(g, terms=30):
    g = np.asarray(g, dtype=np.complex128)
    out = np.eye(2, dtype=np.complex128)
    term = np.eye(2, dtype=np.complex128)
    for k in range(1, terms + 1):
        term = term @ g / k
        out = out + term
    return out


class TestStates:
    def test_rejects_nan(self):
        with pytest.raises(ValueError):
            as_state([np.nan, 0.0])

    def test_rejects_inf_imag(self):
        with pytest.raises(ValueError):
            as_state([0.0, complex(0.0, np.inf)])

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            as_state([1.0, 0.0, 0.0])

    def test_unit_norm_tolerance(self):
        unit_state([1.0 + 4e-10, 0.0])
        with pytest.raises(ValueError):
            unit_state([1.01, 0.0])


class TestTensor:
    def test_basis_products(self):
        np.testing.assert_array_equal(tensor([1, 0], [1, 0]), [1, 0, 0, 0])
        np.testing.assert_array_equal(tensor([0, 1], [0, 1]), [0, 0, 0, 1])

    def test_separable_expansion(self):
        out = tensor([S2, S2], [S2, -S2])
        np.testing.assert_allclose(out, [0.5, -0.5, 0.5, -0.5], atol=1e-15)

    def test_bilinear_random(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            u = rng.normal(size=2) + 1j * rng.normal(size=2)
            v = rng.normal(size=2) + 1j * rng.normal(size=2)
            c = complex(rng.normal(), rng.normal())
            np.testing.assert_allclose(tensor(c * u, v), c * tensor(u, v), atol=1e-12)
            np.testing.assert_allclose(tensor(u, c * v), c * tensor(u, v), atol=1e-12)


class TestInner:
    def test_orthogonal_and_normalized(self):
        assert inner([1, 0], [0, 1]) == 0
        assert inner([1, 0], [1, 0]) == 1

    def test_hand_arithmetic(self):
        got = inner(np.array([1, -1]) * S2, np.array([1, 1j]) * S2)
        assert got == pytest.approx((1 - 1j) / 2, abs=1e-15)

    @given(st.lists(complex_amps, min_size=2, max_size=2),
           st.lists(complex_amps, min_size=2, max_size=2))
    def test_conjugate_symmetry(self, u, v):
        assert inner(u, v) == pytest.approx(np.conj(inner(v, u)), abs=1e-14)


class TestMatExp:
    def test_zero(self):
        np.testing.assert_array_equal(mat_exp_2x2(np.zeros((2, 2))), np.eye(2))

    def test_diagonal_pauli_z(self):
        g = np.diag([-1j * np.pi / 2, 1j * np.pi / 2])
        np.testing.assert_allclose(mat_exp_2x2(g), np.diag([-1j, 1j]), atol=1e-15)

    def test_scalar_exponential(self):
        g = np.diag([0.0, -0.1 + 0.3j])
        expected = np.diag([1.0, np.exp(-0.1) * np.exp(0.3j)])
        np.testing.assert_allclose(mat_exp_2x2(g), expected, atol=1e-15)

    def test_matches_taylor_series(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            g = g / max(1.0, np.linalg.norm(g, 2))
            np.testing.assert_allclose(mat_exp_2x2(g), taylor_exp(g), atol=1e-12)

    def test_inverse_identity(self):
        rng = np.random.default_rng(13)
        for _ in range(100):
            g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            g = g / max(1.0, np.linalg.norm(g, 2))
            prod = mat_exp_2x2(g) @ mat_exp_2x2(-g)
            np.testing.assert_allclose(prod, np.eye(2), atol=1e-10)

    def test_small_generator_branch(self):
        g = np.array([[0.0, 1e-8], [1e-8, 0.0]], dtype=complex)
        np.testing.assert_allclose(mat_exp_2x2(g), taylor_exp(g), atol=1e-15)

    @given(finite_floats, finite_floats, finite_floats)
    @settings(max_examples=50)
    def test_anti_hermitian_gives_unitary(self, x, y, z):
        h = np.array([[z, x - 1j * y], [x + 1j * y, -z]], dtype=complex)
        h = h / max(1.0, np.linalg.norm(h, 2))
        assert is_unitary(mat_exp_2x2(-1j * h), tol=1e-10)
