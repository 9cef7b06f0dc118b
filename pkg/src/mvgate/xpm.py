"""Postselected cross-phase-modulation scenario.

A weak coherent state truncated to {|0>, |1>} acts as the control of a lossy
phase gate on a single-photon ancilla. The fixed preselection plus a small
postselection rotation (epsilon family: amplitude tilt; delta family:
equatorial phase tilt) produces a modular value R_m that amplifies the cross
phase or trades phase against absorption. The small-angle regime formulas are
implemented verbatim as claims and compared against the exact evaluation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .channel import PhaseAbsorbParams, nonunitary_rz
from .errors import HierarchyViolationError
from .gate import (ModularValue, SelectionPair, SystemPrep, apply_and_postselect,
                   controlled_gate, modular_value)

MAX_ALPHA = 0.3

EPSILON = "epsilon"
DELTA = "delta"

EPS_DOMINANT = "eps-dominant"
ABS_DOMINANT = "abs-dominant"
LOSSLESS = "lossless"
DELTA_DOMINANT = "delta-dominant"
DELTA_ABS_DOMINANT = "delta-abs-dominant"

REGIME_IDS = (EPS_DOMINANT, ABS_DOMINANT, LOSSLESS, DELTA_DOMINANT, DELTA_ABS_DOMINANT)

# operational reading of "<<": consecutive scales separated by >= this ratio
HIERARCHY_RATIO = 10.0
SMALLNESS_BOUND = 0.1


@dataclass(frozen=True)
class CoherentTruncation:
    """Weak coherent state |alpha| << 1 truncated to {|0>, |1>} and normalized."""

    alpha: complex

    def __post_init__(self):
        if abs(self.alpha) > MAX_ALPHA:
            raise ValueError(
                f"|alpha| = {abs(self.alpha):.4f} exceeds {MAX_ALPHA}; truncation invalid"
            )

    @property
    def prep(self) -> SystemPrep:
        xi = cmath.phase(self.alpha) if self.alpha != 0 else 0.0
        if xi <= -math.pi:
            xi = math.pi
        return SystemPrep(theta=2.0 * math.atan(abs(self.alpha)), xi=xi)


@dataclass(frozen=True)
class PostselectionFamily:
    """Postselection tilt: epsilon (amplitude) or delta (equatorial phase)."""

    kind: str
    angle: float

    def __post_init__(self):
        if self.kind not in (EPSILON, DELTA):
            raise ValueError(f"kind must be {EPSILON!r} or {DELTA!r}, got {self.kind!r}")
        if not abs(self.angle) < math.pi / 2:
            raise ValueError(f"|angle| must be < pi/2, got {self.angle}")


def xpm_preselection() -> np.ndarray:
    """Control-photon preselection (|-> - |+>)/sqrt(2), basis order (|->, |+>)."""
    return np.array([1.0, -1.0], dtype=np.complex128) / math.sqrt(2.0)


def postselection_state(fam: PostselectionFamily) -> np.ndarray:
    """Postselection ket; overlap with the preselection is -sin(eps)
    (epsilon family) or (1 - e^{i delta})/2 (delta family)."""
    if fam.kind == EPSILON:
        c, s = math.cos(fam.angle), math.sin(fam.angle)
        return np.array([c - s, c + s], dtype=np.complex128) / math.sqrt(2.0)
    return np.array([1.0, cmath.exp(-1j * fam.angle)], dtype=np.complex128) / math.sqrt(2.0)


def selection(fam: PostselectionFamily) -> SelectionPair:
    return SelectionPair(xpm_preselection(), postselection_state(fam))


def xpm_joint_gate(params: PhaseAbsorbParams) -> np.ndarray:
    """4x4 joint gate with the truncated coherent-state qubit as control."""
    return controlled_gate(nonunitary_rz(params))


def exact_rm(params: PhaseAbsorbParams, fam: PostselectionFamily) -> ModularValue:
    """Exact modular value of the lossy phase gate for this selection."""
    return modular_value(nonunitary_rz(params), selection(fam))


@dataclass(frozen=True)
class RegimeSpec:
    """One of the five small-angle regimes, with its scale hierarchy."""

    regime_id: str
    phi: float
    a: float
    angle: float

    def __post_init__(self):
        if self.regime_id not in REGIME_IDS:
            raise ValueError(f"unknown regime {self.regime_id!r}")
        self.validate()

    @property
    def family(self) -> PostselectionFamily:
        kind = DELTA if self.regime_id in (DELTA_DOMINANT, DELTA_ABS_DOMINANT) else EPSILON
        return PostselectionFamily(kind, self.angle)

    @property
    def params(self) -> PhaseAbsorbParams:
        return PhaseAbsorbParams(self.phi, self.a)

    def validate(self) -> None:
        r = HIERARCHY_RATIO
        phi, a, ang = abs(self.phi), self.a, abs(self.angle)
        if ang == 0.0:
            raise HierarchyViolationError("postselection angle must be nonzero")
        if self.regime_id == EPS_DOMINANT:
            ok = phi * r <= a and a * r <= ang and ang <= SMALLNESS_BOUND
        elif self.regime_id == ABS_DOMINANT:
            ok = phi * r <= ang and ang * r <= a and a <= SMALLNESS_BOUND
        elif self.regime_id == LOSSLESS:
            ok = a == 0.0 and phi * r <= ang and ang <= SMALLNESS_BOUND
        elif self.regime_id == DELTA_DOMINANT:
            ok = phi * r <= a and a * r <= ang and ang <= SMALLNESS_BOUND
        else:  # DELTA_ABS_DOMINANT
            ok = phi * r <= ang and ang * r <= a and a <= SMALLNESS_BOUND
        if not ok:
            raise HierarchyViolationError(
                f"{self.regime_id}: scales (phi={self.phi}, a={self.a}, "
                f"angle={self.angle}) violate the x{r:g} hierarchy"
            )


def regime_approx(spec: RegimeSpec) -> complex:
    """Small-angle formula for R_m in the given regime (a claim under test,
    not ground truth; prefactor conventions differ from the exact expansion)."""
    phi, a, ang = spec.phi, spec.a, spec.angle
    if spec.regime_id == EPS_DOMINANT:
        return (1.0 - a / (2.0 * ang)) * cmath.exp(1j * phi / ang)
    if spec.regime_id == ABS_DOMINANT:
        return -(1.0 - a / (2.0 * ang)) * cmath.exp(-2j * phi / a)
    if spec.regime_id == LOSSLESS:
        return cmath.exp(1j * phi / ang)
    if spec.regime_id == DELTA_DOMINANT:
        return (1.0 - a / 2.0) * (1.0 + phi / ang) * cmath.exp(1j * (phi + 2.0 * a / ang))
    return -(a / ang) * cmath.exp(-2j * ang / a)


def approx_success_probability(spec: RegimeSpec, alpha: complex = 0.0) -> float:
    """Small-angle success-probability claim for the regime."""
    a, ang, al2 = spec.a, spec.angle, abs(alpha) ** 2
    if spec.regime_id in (EPS_DOMINANT, LOSSLESS):
        return ang * ang
    if spec.regime_id == ABS_DOMINANT:
        return ang * ang + a * a * al2 / 4.0
    if spec.regime_id == DELTA_DOMINANT:
        return ang * ang / 4.0
    return (ang * ang / 4.0) * (1.0 + al2 * (a / ang) ** 2)


@dataclass(frozen=True)
class RegimeReport:
    """Exact vs small-angle comparison at one parameter point."""

    exact_rm: complex
    approx_rm: complex
    mag_rel_err: float
    phase_diff: float
    p_exact: float
    p_approx: float
    amplification: float | None
    effective_absorption: float


def success_probability(params: PhaseAbsorbParams, fam: PostselectionFamily,
                        alpha: complex = 0.0) -> float:
    """Exact postselection success probability for the truncated coherent prep."""
    prep = CoherentTruncation(alpha).prep
    return apply_and_postselect(prep, selection(fam), nonunitary_rz(params)).success_probability


def regime_report(spec: RegimeSpec, alpha: complex = 0.0) -> RegimeReport:
    exact = exact_rm(spec.params, spec.family).value
    approx = regime_approx(spec)
    p_exact = success_probability(spec.params, spec.family, alpha)
    p_approx = approx_success_probability(spec, alpha)
    mag_rel_err = abs(abs(exact) - abs(approx)) / abs(exact)
    phase_diff = _principal(cmath.phase(exact) - cmath.phase(approx))
    amplification = cmath.phase(exact) / spec.phi if spec.phi != 0.0 else None
    return RegimeReport(exact, approx, mag_rel_err, phase_diff, p_exact, p_approx,
                        amplification, 1.0 - abs(exact))


def classify_regime(kind: str, phi: float, a: float, angle: float) -> RegimeSpec | None:
    """Find the regime (if any) whose hierarchy these parameters satisfy."""
    if kind == EPSILON:
        candidates = (LOSSLESS, EPS_DOMINANT, ABS_DOMINANT)
    else:
        candidates = (DELTA_DOMINANT, DELTA_ABS_DOMINANT)
    for regime_id in candidates:
        try:
            return RegimeSpec(regime_id, phi, a, angle)
        except HierarchyViolationError:
            continue
    return None


def _principal(angle: float) -> float:
    """Wrap to (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    return math.pi if wrapped == -math.pi else wrapped
