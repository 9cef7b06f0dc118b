"""Seeded Monte Carlo: postselection click statistics and output-state tomography.

Uses numpy's PCG64 generator. Substreams are derived from
SeedSequence(seed, spawn_key=(point_index,)) so parameter-grid points sample
independently yet reproducibly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gate import GateOutcome

BASES = ("X", "Y", "Z")


@dataclass(frozen=True)
class SampleConfig:
    trials: int
    seed: int
    bases: tuple[str, ...] = BASES

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not (0 <= self.seed < 2 ** 64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        bad = [b for b in self.bases if b not in BASES]
        if bad or not self.bases:
            raise ValueError(f"bases must be a nonempty subset of {BASES}, got {self.bases}")


@dataclass(frozen=True)
class SampleEstimate:
    """Finite-count estimates; unmeasured Bloch components are NaN."""

    p_hat: float
    p_stderr: float
    bloch_hat: np.ndarray
    theta_f_hat: float
    phase_hat: float


def substream(seed: int, point_index: int = 0) -> np.random.Generator:
    """Deterministic per-point generator for (seed, grid-index)."""
    return np.random.default_rng(np.random.SeedSequence(entropy=seed,
                                                        spawn_key=(point_index,)))


def plus_probability(state, basis: str) -> float:
    """Born probability of the +1 outcome for a Pauli measurement."""
    c0, c1 = complex(state[0]), complex(state[1])
    if basis == "Z":
        amp2 = abs(c0) ** 2
    elif basis == "X":
        amp2 = abs(c0 + c1) ** 2 / 2.0
    elif basis == "Y":
        amp2 = abs(c0 - 1j * c1) ** 2 / 2.0
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return min(1.0, max(0.0, amp2))


def analytic_bloch(state) -> np.ndarray:
    """Exact Bloch vector (x, y, z) of a pure state."""
    return np.array([2.0 * plus_probability(state, b) - 1.0 for b in BASES])


def sample_outcome(outcome: GateOutcome, config: SampleConfig,
                   point_index: int = 0) -> SampleEstimate:
    """Draw postselection clicks and per-basis tomography counts.

    The success count is Binomial(trials, p_exact); each requested basis gets
    `trials` postselection-conditioned shots from the exact final state.
    Bit-for-bit reproducible for a given (seed, point_index): draws happen in
    the fixed order success-count, then bases in X, Y, Z order.
    """
    rng = substream(config.seed, point_index)
    n = config.trials
    p_hat = float(rng.binomial(n, outcome.success_probability)) / n
    p_stderr = math.sqrt(p_hat * (1.0 - p_hat) / n)

    bloch = np.full(3, math.nan)
    for idx, basis in enumerate(BASES):
        if basis in config.bases:
            k = int(rng.binomial(n, plus_probability(outcome.final_state, basis)))
            bloch[idx] = 2.0 * k / n - 1.0

    x, y, z = bloch
    theta_f = math.acos(min(1.0, max(-1.0, z))) if not math.isnan(z) else math.nan
    phase = math.atan2(y, x) if not (math.isnan(x) or math.isnan(y)) else math.nan
    return SampleEstimate(p_hat, p_stderr, bloch, theta_f, phase)
