"""Fixed-dimension complex linear algebra: C^2 / C^4 vectors and 2x2 / 4x4 operators.

Joint-state index convention: index = 2*(system bit) + (ancilla bit), i.e.
the system qubit is the major (control) index.
"""
from __future__ import annotations

import numpy as np

UNIT_NORM_TOL = 1e-9

# sinh(x)/x switches to its Taylor series below this magnitude
_SINHC_SERIES_CUTOFF = 1e-4


def as_state(amplitudes, dim: int | None = None) -> np.ndarray:
    """Coerce to a complex128 state vector of length 2 or 4.

    Rejects NaN/Inf amplitudes and wrong lengths.
    """
    v = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    if dim is not None and v.size != dim:
        raise ValueError(f"expected a length-{dim} state, got length {v.size}")
    if v.size not in (2, 4):
        raise ValueError(f"only C^2 and C^4 states are supported, got length {v.size}")
    if not np.all(np.isfinite(v)):
        raise ValueError("state has non-finite amplitudes")
    return v


def unit_state(amplitudes, dim: int | None = None, tol: float = UNIT_NORM_TOL) -> np.ndarray:
    """As `as_state`, additionally requiring sum |c_k|^2 = 1 within `tol`."""
    v = as_state(amplitudes, dim)
    n2 = float(np.sum(np.abs(v) ** 2))
    if abs(n2 - 1.0) > tol:
        raise ValueError(f"state is not unit-norm: |v|^2 = {n2!r}")
    return v


def as_operator(entries, dim: int) -> np.ndarray:
    """Coerce to a dim x dim complex128 matrix with finite entries."""
    m = np.asarray(entries, dtype=np.complex128)
    if m.shape != (dim, dim):
        m = m.reshape(dim, dim)
    if not np.all(np.isfinite(m)):
        raise ValueError("operator has non-finite entries")
    return m


def tensor(sys: np.ndarray, anc: np.ndarray) -> np.ndarray:
    """Joint state |sys> x |anc>; amplitude at index 2s + a is sys[s]*anc[a]."""
    return np.kron(as_state(sys, 2), as_state(anc, 2))


def inner(bra, ket) -> complex:
    """<bra|ket> with conjugation on the first argument."""
    return complex(np.vdot(np.asarray(bra, dtype=np.complex128),
                           np.asarray(ket, dtype=np.complex128)))


def fidelity(u, v) -> float:
    """|<u|v>| for unit vectors; global-phase-insensitive state equality."""
    return abs(inner(u, v))


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conjugate(m).T


def is_unitary(m: np.ndarray, tol: float = 1e-10) -> bool:
    m = np.asarray(m, dtype=np.complex128)
    eye = np.eye(m.shape[0], dtype=np.complex128)
    return bool(np.max(np.abs(dagger(m) @ m - eye)) <= tol)


def _sinhc(mu: complex) -> complex:
    """sinh(mu)/mu, stable at mu -> 0."""
    if abs(mu) < _SINHC_SERIES_CUTOFF:
        mu2 = mu * mu
        return 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0
    return np.sinh(mu) / mu


def mat_exp_2x2(g) -> np.ndarray:
    """exp(G) for an arbitrary complex 2x2 matrix G, in closed form.

    Splits G = t*I + B with B traceless; then B^2 = mu^2 * I and
    exp(G) = e^t [cosh(mu) I + sinh(mu)/mu B].
    """
    g = as_operator(g, 2)
    t = (g[0, 0] + g[1, 1]) / 2.0
    b = g - t * np.eye(2, dtype=np.complex128)
    mu = np.sqrt(b[0, 0] ** 2 + b[0, 1] * b[1, 0])  # principal branch; cosh/sinhc are even
    return np.exp(t) * (np.cosh(mu) * np.eye(2, dtype=np.complex128) + _sinhc(mu) * b)
