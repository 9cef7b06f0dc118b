"""Deterministic parameter sweeps with CSV / JSON-lines output."""
from __future__ import annotations

import cmath
import itertools
import json
import math
from dataclasses import dataclass

from .channel import PhaseAbsorbParams, nonunitary_rz
from .errors import OrthogonalSelectionError, ZeroProbabilityError
from .gate import SelectionPair, apply_and_postselect, modular_value
from .xpm import (DELTA, EPSILON, CoherentTruncation, PostselectionFamily,
                  classify_regime, regime_approx, approx_success_probability, selection)

SCENARIOS = ("generic", "xpm-epsilon", "xpm-delta")
FORMATS = ("csv", "json-lines")

COLUMNS = (
    "scenario", "phi", "a", "angle_kind", "angle", "alpha_abs", "alpha_arg",
    "rm_re", "rm_im", "rm_abs", "rm_arg", "p_exact", "theta_m", "omega_m",
    "approx_rm_abs", "approx_rm_arg", "p_approx", "mag_rel_err", "phase_diff",
    "amplification", "effective_absorption",
)


def grid_values(spec) -> list[float]:
    """Expand a grid spec: a list of numbers, or {min, max, count, scale}."""
    if isinstance(spec, (list, tuple)):
        values = [float(v) for v in spec]
        if not values:
            raise ValueError("grid list must be nonempty")
        return values
    if isinstance(spec, dict):
        lo, hi = float(spec["min"]), float(spec["max"])
        count = int(spec["count"])
        scale = spec.get("scale", "linear")
        if count < 1:
            raise ValueError("grid count must be >= 1")
        if count == 1:
            return [lo]
        if scale == "linear":
            step = (hi - lo) / (count - 1)
            return [lo + i * step for i in range(count)]
        if scale == "log":
            if lo <= 0 or hi <= 0:
                raise ValueError("log grids require positive endpoints")
            ratio = (hi / lo) ** (1.0 / (count - 1))
            return [lo * ratio ** i for i in range(count)]
        raise ValueError(f"unknown grid scale {scale!r}")
    raise ValueError(f"bad grid spec: {spec!r}")


@dataclass(frozen=True)
class SweepConfig:
    scenario: str
    phi: tuple[float, ...] = (0.0,)
    a: tuple[float, ...] = (0.0,)
    angle: tuple[float, ...] = ()
    alpha_abs: tuple[float, ...] = (0.0,)
    alpha_arg: tuple[float, ...] = (0.0,)
    pre: tuple[complex, ...] | None = None
    post: tuple[complex, ...] | None = None
    output_path: str = "sweep.csv"
    format: str = "csv"

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise ValueError(f"scenario must be one of {SCENARIOS}, got {self.scenario!r}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")
        if self.scenario == "generic":
            if self.pre is None or self.post is None:
                raise ValueError("generic sweeps need 'pre' and 'post' selection amplitudes")
        elif not self.angle:
            raise ValueError(f"{self.scenario} sweeps need a nonempty 'angle' grid")
        for name in ("phi", "a", "alpha_abs", "alpha_arg"):
            if not getattr(self, name):
                raise ValueError(f"grid {name!r} must be nonempty")

    @classmethod
    def from_dict(cls, raw: dict) -> "SweepConfig":
        grids = raw.get("grids", {})
        kwargs = {}
        for name, key in (("phi", "phi"), ("a", "a"), ("angle", "angle"),
                          ("alpha_abs", "alpha_abs"), ("alpha_arg", "alpha_arg")):
            if key in grids:
                kwargs[name] = tuple(grid_values(grids[key]))
        for key in ("pre", "post"):
            if key in raw:
                kwargs[key] = tuple(complex(str(v).replace(" ", "")) for v in raw[key])
        return cls(
            scenario=raw["scenario"],
            output_path=raw.get("output_path", "sweep.csv"),
            format=raw.get("format", "csv"),
            **kwargs,
        )


def _empty_row() -> dict:
    return {name: None for name in COLUMNS}


def evaluate_point(config: SweepConfig, phi: float, a: float, angle: float | None,
                   alpha_abs: float, alpha_arg: float) -> dict:
    """One sweep row; non-applicable columns stay None."""
    row = _empty_row()
    row.update(scenario=config.scenario, phi=phi, a=a,
               alpha_abs=alpha_abs, alpha_arg=alpha_arg)
    params = PhaseAbsorbParams(phi, a)
    n = nonunitary_rz(params)
    alpha = alpha_abs * cmath.exp(1j * alpha_arg)
    prep = CoherentTruncation(alpha).prep

    if config.scenario == "generic":
        sel = SelectionPair(config.pre, config.post)
    else:
        kind = EPSILON if config.scenario == "xpm-epsilon" else DELTA
        fam = PostselectionFamily(kind, angle)
        sel = selection(fam)
        row.update(angle_kind=kind, angle=angle)

    try:
        outcome = apply_and_postselect(prep, sel, n)
        row["p_exact"] = outcome.success_probability
        row["theta_m"] = outcome.theta_m
        row["omega_m"] = outcome.omega_m
        mv = outcome.modular
    except ZeroProbabilityError:
        row["p_exact"] = 0.0
        try:
            mv = modular_value(n, sel)
            row["theta_m"] = None
            row["omega_m"] = mv.omega_m
        except OrthogonalSelectionError:
            mv = None

    if mv is not None:
        rm = mv.value
        row.update(rm_re=rm.real, rm_im=rm.imag, rm_abs=abs(rm), rm_arg=cmath.phase(rm),
                   effective_absorption=1.0 - abs(rm))
        if phi != 0.0:
            row["amplification"] = cmath.phase(rm) / phi

        if config.scenario != "generic":
            spec = classify_regime(row["angle_kind"], phi, a, angle)
            if spec is not None:
                approx = regime_approx(spec)
                row.update(
                    approx_rm_abs=abs(approx),
                    approx_rm_arg=cmath.phase(approx),
                    p_approx=approx_success_probability(spec, alpha),
                    mag_rel_err=abs(abs(rm) - abs(approx)) / abs(rm),
                    phase_diff=_principal(cmath.phase(rm) - cmath.phase(approx)),
                )
    return row


def _principal(angle: float) -> float:
    wrapped = math.remainder(angle, 2.0 * math.pi)
    return math.pi if wrapped == -math.pi else wrapped


def iter_rows(config: SweepConfig):
    """Rows in deterministic lexicographic grid order (phi, a, angle, |alpha|, arg)."""
    angles = config.angle if config.scenario != "generic" else (None,)
    for phi, a, angle, aa, ar in itertools.product(
            config.phi, config.a, angles, config.alpha_abs, config.alpha_arg):
        yield evaluate_point(config, phi, a, angle, aa, ar)


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    return format(float(value), ".17g")


def render_rows(config: SweepConfig) -> str:
    """Full output document (CSV with header, or JSON lines), LF endings."""
    rows = list(iter_rows(config))
    if config.format == "csv":
        lines = [",".join(COLUMNS)]
        lines += [",".join(format_cell(row[c]) for c in COLUMNS) for row in rows]
    else:
        lines = [json.dumps(row, sort_keys=False) for row in rows]
    return "\n".join(lines) + "\n"


def run_sweep(config: SweepConfig) -> int:
    """Write the sweep to config.output_path; returns the number of data rows."""
    text = render_rows(config)
    with open(config.output_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    count = text.count("\n")
    return count - 1 if config.format == "csv" else count
