"""Postselection-controlled two-qubit gate.

An operator N acts on the ancilla only when the system qubit is |1>. After
pre-/post-selecting the ancilla, the surviving system qubit is rotated by
angles (theta_m, omega_m) set entirely by the modular value
N_m = <f|N|i>/<f|i>.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import OrthogonalSelectionError, ZeroProbabilityError
from .linalg import as_operator, inner, mat_exp_2x2, tensor, unit_state

ORTHOGONAL_TOL = 1e-14
ZERO_PROBABILITY_TOL = 1e-28

ID2 = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclass(frozen=True)
class SystemPrep:
    """System qubit cos(theta/2)|0> + e^{i xi} sin(theta/2)|1>."""

    theta: float
    xi: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.theta <= math.pi):
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not (-math.pi < self.xi <= math.pi):
            raise ValueError(f"xi must lie in (-pi, pi], got {self.xi}")

    def state(self) -> np.ndarray:
        return np.array(
            [math.cos(self.theta / 2),
             cmath.exp(1j * self.xi) * math.sin(self.theta / 2)],
            dtype=np.complex128,
        )


@dataclass(frozen=True)
class SelectionPair:
    """Ancilla preselection |i> and postselection |f>."""

    pre: np.ndarray
    post: np.ndarray
    overlap: complex = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "pre", unit_state(self.pre, 2))
        object.__setattr__(self, "post", unit_state(self.post, 2))
        object.__setattr__(self, "overlap", inner(self.post, self.pre))

    @property
    def is_orthogonal(self) -> bool:
        return abs(self.overlap) <= ORTHOGONAL_TOL


@dataclass(frozen=True)
class ModularValue:
    """N_m = |N_m| e^{i omega_m}."""

    value: complex

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def omega_m(self) -> float:
        return cmath.phase(self.value)


@dataclass(frozen=True)
class GateOutcome:
    """Result of one gate-plus-postselection evaluation.

    `modular`, `theta_m` and `omega_m` are None when the selection is
    orthogonal (the unnormalized output of the gate is still valid).
    """

    unnormalized_final: np.ndarray
    success_probability: float
    final_state: np.ndarray
    modular: ModularValue | None
    theta_m: float | None
    omega_m: float | None


def controlled_gate(n) -> np.ndarray:
    """4x4 gate: identity on the ancilla when the system is |0>, N when |1>."""
    n = as_operator(n, 2)
    out = np.zeros((4, 4), dtype=np.complex128)
    out[:2, :2] = ID2
    out[2:, 2:] = n
    return out


def generator_gate(o, g: complex) -> np.ndarray:
    """exp(-i g O) for an ancilla generator O and (possibly complex) strength g."""
    return mat_exp_2x2(-1j * g * as_operator(o, 2))


def modular_value(n, sel: SelectionPair) -> ModularValue:
    """<f|N|i> / <f|i>; raises when the selection overlap vanishes."""
    if sel.is_orthogonal:
        raise OrthogonalSelectionError(
            f"|<f|i>| = {abs(sel.overlap):.3e} <= {ORTHOGONAL_TOL}; modular value undefined"
        )
    n = as_operator(n, 2)
    return ModularValue(inner(sel.post, n @ sel.pre) / sel.overlap)


def theta_m(magnitude: float, theta: float) -> float:
    """Azimuthal rotation angle induced by a modular value of given magnitude.

    atan2 form, finite at theta = pi, satisfying
    tan((theta - theta_m)/2) = |N_m| tan(theta/2) on (0, pi).
    """
    if magnitude < 0:
        raise ValueError("magnitude must be >= 0")
    if not (0.0 <= theta <= math.pi):
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return 2.0 * math.atan2((1.0 - magnitude) * s * c, c * c + magnitude * s * s)


def apply_and_postselect(prep: SystemPrep, sel: SelectionPair, n) -> GateOutcome:
    """Run the controlled gate and project the ancilla onto |f>.

    The unnormalized output keeps its <f|i> prefactor, so its squared norm
    is the success probability. Raises ZeroProbabilityError when that
    probability vanishes.
    """
    n = as_operator(n, 2)
    joint = controlled_gate(n) @ tensor(prep.state(), sel.pre)
    # contract the ancilla index with <f|
    unnormalized = np.array(
        [inner(sel.post, joint[:2]), inner(sel.post, joint[2:])],
        dtype=np.complex128,
    )
    p = float(np.sum(np.abs(unnormalized) ** 2))
    if p <= ZERO_PROBABILITY_TOL:
        raise ZeroProbabilityError(f"success probability {p:.3e} is zero")
    final = unnormalized / math.sqrt(p)

    if sel.is_orthogonal:
        return GateOutcome(unnormalized, p, final, None, None, None)
    mv = modular_value(n, sel)
    return GateOutcome(unnormalized, p, final, mv,
                       theta_m(mv.magnitude, prep.theta), mv.omega_m)


def rz(beta: float) -> np.ndarray:
    """Bloch z-rotation diag(e^{-i beta/2}, e^{i beta/2})."""
    return np.array([[cmath.exp(-1j * beta / 2), 0],
                     [0, cmath.exp(1j * beta / 2)]], dtype=np.complex128)


def ry(beta: float) -> np.ndarray:
    """Bloch y-rotation [[cos, -sin], [sin, cos]] of half angle."""
    c, s = math.cos(beta / 2), math.sin(beta / 2)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def equivalent_local_rotations(prep: SystemPrep, modular: ModularValue) -> np.ndarray:
    """Deterministic single-qubit sequence reproducing the postselected state.

    Rotates by -theta_m about the equatorial axis at azimuth xi, then by
    omega_m about z; for xi = 0 this is R_z(omega_m) R_y(-theta_m) |psi>.
    Matches apply_and_postselect(...).final_state up to a global phase.
    """
    tm = theta_m(modular.magnitude, prep.theta)
    tilted_ry = rz(prep.xi) @ ry(-tm) @ rz(-prep.xi)
    return rz(modular.omega_m) @ tilted_ry @ prep.state()
