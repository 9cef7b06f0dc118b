"""Nonunitary phase-shift gate: exact operator, Kraus pair, and the
ancilla-less baseline (renormalized state, success probability, tilt)."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .gate import SystemPrep
from .linalg import dagger, unit_state


@dataclass(frozen=True)
class PhaseAbsorbParams:
    """Cross phase phi and relative absorption a >= 0."""

    phi: float
    a: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.phi) or not math.isfinite(self.a):
            raise ValueError("phi and a must be finite")
        if self.a < 0:
            raise ValueError(f"absorption must be >= 0, got {self.a}")


@dataclass(frozen=True)
class KrausPair:
    """Trace-preserving pair {k0, k1} for the lossy phase channel."""

    k0: np.ndarray
    k1: np.ndarray

    def completeness_defect(self) -> float:
        """max |k0'k0 + k1'k1 - I|; exactly 0 in closed form."""
        s = dagger(self.k0) @ self.k0 + dagger(self.k1) @ self.k1
        return float(np.max(np.abs(s - np.eye(2))))


@dataclass(frozen=True)
class BaselineResult:
    """Output of the gate applied directly to the system, no ancilla."""

    state: np.ndarray
    p_n: float
    delta_theta: float


def nonunitary_rz(params: PhaseAbsorbParams) -> np.ndarray:
    """Exact lossy phase gate diag(1, e^{-a} e^{i phi})."""
    return np.array(
        [[1.0, 0.0], [0.0, cmath.exp(complex(-params.a, params.phi))]],
        dtype=np.complex128,
    )


def nonunitary_rz_symmetric(params: PhaseAbsorbParams) -> np.ndarray:
    """Symmetric form diag(e^{-i phi/2}, e^{-a} e^{i phi/2}).

    Equals nonunitary_rz up to the global phase e^{-i phi/2}; modular
    values of the two forms differ by exactly that factor.
    """
    return cmath.exp(-1j * params.phi / 2) * nonunitary_rz(params)


def kraus_pair(params: PhaseAbsorbParams) -> KrausPair:
    """k0 = lossy phase gate, k1 = diag(0, sqrt(1 - e^{-2a}))."""
    k1 = np.array(
        [[0.0, 0.0], [0.0, math.sqrt(max(0.0, -math.expm1(-2.0 * params.a)))]],
        dtype=np.complex128,
    )
    return KrausPair(nonunitary_rz(params), k1)


def exact_channel_output(params: PhaseAbsorbParams, psi) -> np.ndarray:
    """Density matrix k0 P k0' + k1 P k1' of the full lossy channel."""
    psi = unit_state(psi, 2)
    proj = np.outer(psi, np.conjugate(psi))
    pair = kraus_pair(params)
    rho = pair.k0 @ proj @ dagger(pair.k0) + pair.k1 @ proj @ dagger(pair.k1)
    tr = float(np.real(np.trace(rho)))
    if abs(tr - 1.0) > 1e-14:
        rho = rho / tr
    return rho


def single_kraus_gap(params: PhaseAbsorbParams, psi) -> float:
    """Trace distance between the exact channel output and the k0-only state.

    Quantifies the error of approximating the channel by the nonunitary
    gate alone; vanishes linearly in the absorption.
    """
    psi = unit_state(psi, 2)
    rho = exact_channel_output(params, psi)
    k0_out = nonunitary_rz(params) @ psi
    norm = float(np.linalg.norm(k0_out))
    if norm == 0.0:
        raise ValueError("k0 annihilates the input state")
    k0_out = k0_out / norm
    diff = rho - np.outer(k0_out, np.conjugate(k0_out))
    return float(0.5 * np.sum(np.abs(np.linalg.eigvalsh(diff))))


def baseline_direct(params: PhaseAbsorbParams, prep: SystemPrep) -> BaselineResult:
    """Renormalized k0-only output, its success probability, and the exact
    azimuthal tilt delta_theta = 2 atan2(e^{-a} sin(theta/2), cos(theta/2)) - theta."""
    c, s = math.cos(prep.theta / 2), math.sin(prep.theta / 2)
    damp = math.exp(-params.a)
    p_n = c * c + damp * damp * s * s
    state = nonunitary_rz(params) @ prep.state() / math.sqrt(p_n)
    delta_theta = 2.0 * math.atan2(damp * s, c) - prep.theta
    return BaselineResult(state, p_n, delta_theta)
