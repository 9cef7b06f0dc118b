"""Command-line harness: eval, sweep, sample, report.

Exit codes: 0 ok, 2 invalid input, 3 orthogonal selection, 4 zero
probability, 5 I/O failure. A JSON config file supplies defaults; flags win.
"""
from __future__ import annotations

import argparse
import cmath
import json
import math
import sys

from .channel import PhaseAbsorbParams, nonunitary_rz
from .errors import HierarchyViolationError, OrthogonalSelectionError, ZeroProbabilityError
from .gate import SelectionPair, SystemPrep, apply_and_postselect
from .report import build_report
from .sampling import BASES, SampleConfig, sample_outcome
from .sweep import SweepConfig, run_sweep
from .xpm import (DELTA, EPSILON, REGIME_IDS, CoherentTruncation,
                  PostselectionFamily, classify_regime, regime_report, selection)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_ORTHOGONAL = 3
EXIT_ZERO_PROBABILITY = 4
EXIT_IO = 5

EVAL_SCENARIOS = ("generic", "xpm-epsilon", "xpm-delta")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _parse_amplitudes(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated complex amplitudes, got {text!r}")
    return [complex(p.replace(" ", "")) for p in parts]


def _add_scenario_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scenario", choices=EVAL_SCENARIOS, default=None)
    parser.add_argument("--phi", type=float, default=None, help="cross phase (rad)")
    parser.add_argument("--a", type=float, default=None, help="relative absorption")
    parser.add_argument("--eps", type=float, default=None, help="epsilon postselection tilt")
    parser.add_argument("--delta", type=float, default=None, help="delta postselection tilt")
    parser.add_argument("--alpha", type=float, default=None, help="|alpha| of the coherent prep")
    parser.add_argument("--alpha-arg", type=float, default=None, help="arg(alpha) (rad)")
    parser.add_argument("--theta", type=float, default=None, help="generic: system polar angle")
    parser.add_argument("--xi", type=float, default=None, help="generic: system relative phase")
    parser.add_argument("--pre", type=str, default=None,
                        help="generic: preselection 'c0,c1' (complex literals)")
    parser.add_argument("--post", type=str, default=None,
                        help="generic: postselection 'c0,c1'")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--out", type=str, default=None)
    common.add_argument("--format", choices=("csv", "json-lines"), default=None)
    common.add_argument("--config", type=str, default=None, help="JSON config file")

    parser = argparse.ArgumentParser(prog="mvgate",
                                     description="Postselection-controlled two-qubit gate toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", parents=[common],
                            help="evaluate one gate instance")
    _add_scenario_args(p_eval)

    sub.add_parser("sweep", parents=[common], help="parameter sweep to CSV/JSON-lines")

    p_sample = sub.add_parser("sample", parents=[common],
                              help="seeded Monte Carlo postselection + tomography")
    _add_scenario_args(p_sample)
    p_sample.add_argument("--trials", type=int, default=None)
    p_sample.add_argument("--bases", type=str, default=None, help="subset of XYZ")

    p_report = sub.add_parser("report", parents=[common],
                              help="regime validation report")
    p_report.add_argument("--regime", choices=REGIME_IDS + ("all",), default="all")
    p_report.add_argument("--alpha", type=float, default=None)

    return parser


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise ValueError("config file must hold a JSON object")
    return raw


def _setting(args, config: dict, name: str, default=None):
    """Flag value if given, else config-file value, else default."""
    value = getattr(args, name.replace("-", "_"), None)
    if value is not None:
        return value
    return config.get(name, default)


def _resolve_instance(args, config: dict):
    """Build (prep, selection, operator, descriptor) from scenario settings."""
    scenario = _setting(args, config, "scenario")
    if scenario not in EVAL_SCENARIOS:
        raise ValueError(f"--scenario must be one of {EVAL_SCENARIOS}, got {scenario!r}")
    phi = float(_setting(args, config, "phi", 0.0))
    a = float(_setting(args, config, "a", 0.0))
    params = PhaseAbsorbParams(phi, a)
    n = nonunitary_rz(params)

    if scenario == "generic":
        pre_raw = _setting(args, config, "pre")
        post_raw = _setting(args, config, "post")
        if pre_raw is None or post_raw is None:
            raise ValueError("generic scenario needs --pre and --post")
        if isinstance(pre_raw, str):
            pre_raw = _parse_amplitudes(pre_raw)
        if isinstance(post_raw, str):
            post_raw = _parse_amplitudes(post_raw)
        sel = SelectionPair([complex(str(c).replace(" ", "")) for c in pre_raw],
                            [complex(str(c).replace(" ", "")) for c in post_raw])
        theta = float(_setting(args, config, "theta", 0.0))
        xi = float(_setting(args, config, "xi", 0.0))
        prep = SystemPrep(theta, xi)
        fam = None
    else:
        kind = EPSILON if scenario == "xpm-epsilon" else DELTA
        flag = "eps" if kind == EPSILON else "delta"
        angle = _setting(args, config, flag)
        if angle is None:
            raise ValueError(f"{scenario} scenario needs --{flag}")
        fam = PostselectionFamily(kind, float(angle))
        sel = selection(fam)
        alpha_abs = float(_setting(args, config, "alpha", 0.0))
        alpha_arg = float(_setting(args, config, "alpha-arg", 0.0))
        prep = CoherentTruncation(alpha_abs * cmath.exp(1j * alpha_arg)).prep

    return prep, sel, n, {"scenario": scenario, "params": params, "family": fam}


def _print_outcome(outcome, desc) -> None:
    print(f"scenario: {desc['scenario']}")
    print(f"phi: {_fmt(desc['params'].phi)}")
    print(f"a: {_fmt(desc['params'].a)}")
    if outcome.modular is None:
        print("modular value: undefined (orthogonal selection)")
    else:
        v = outcome.modular.value
        print(f"N_m: re={_fmt(v.real)} im={_fmt(v.imag)} "
              f"abs={_fmt(abs(v))} arg={_fmt(cmath.phase(v))}")
        print(f"theta_m: {_fmt(outcome.theta_m)}")
        print(f"omega_m: {_fmt(outcome.omega_m)}")
    print(f"p: {_fmt(outcome.success_probability)}")
    for idx, amp in enumerate(outcome.final_state):
        print(f"final_state[{idx}]: re={_fmt(amp.real)} im={_fmt(amp.imag)}")


def _print_regime_block(desc, alpha: complex) -> None:
    fam = desc["family"]
    if fam is None:
        return
    spec = classify_regime(fam.kind, desc["params"].phi, desc["params"].a, fam.angle)
    if spec is None:
        return
    rep = regime_report(spec, alpha)
    print(f"regime: {spec.regime_id}")
    print(f"approx_rm: abs={_fmt(abs(rep.approx_rm))} arg={_fmt(cmath.phase(rep.approx_rm))}")
    print(f"mag_rel_err: {_fmt(rep.mag_rel_err)}")
    print(f"phase_diff: {_fmt(rep.phase_diff)}")
    print(f"p_approx: {_fmt(rep.p_approx)}")
    if rep.amplification is not None:
        print(f"amplification: {_fmt(rep.amplification)}")
    print(f"effective_absorption: {_fmt(rep.effective_absorption)}")


def _cmd_eval(args, config: dict) -> int:
    prep, sel, n, desc = _resolve_instance(args, config)
    outcome = apply_and_postselect(prep, sel, n)
    if outcome.modular is None:
        raise OrthogonalSelectionError("pre- and post-selection are orthogonal")
    _print_outcome(outcome, desc)
    alpha_abs = float(_setting(args, config, "alpha", 0.0))
    alpha_arg = float(_setting(args, config, "alpha-arg", 0.0))
    _print_regime_block(desc, alpha_abs * cmath.exp(1j * alpha_arg))
    return EXIT_OK


def _cmd_sweep(args, config: dict) -> int:
    if "scenario" not in config:
        raise ValueError("sweep requires a config file with a 'scenario' entry")
    merged = dict(config)
    if args.out is not None:
        merged["output_path"] = args.out
    if args.format is not None:
        merged["format"] = args.format
    sweep_config = SweepConfig.from_dict(merged)
    rows = run_sweep(sweep_config)
    print(f"wrote {rows} rows to {sweep_config.output_path}")
    return EXIT_OK


def _cmd_sample(args, config: dict) -> int:
    prep, sel, n, desc = _resolve_instance(args, config)
    trials = int(_setting(args, config, "trials", 1))
    seed = int(_setting(args, config, "seed", 0))
    bases_raw = _setting(args, config, "bases", "XYZ")
    bases = tuple(b for b in BASES if b in str(bases_raw).upper())
    sample_config = SampleConfig(trials=trials, seed=seed, bases=bases)
    outcome = apply_and_postselect(prep, sel, n)
    est = sample_outcome(outcome, sample_config)
    print(f"trials: {trials}")
    print(f"seed: {seed}")
    print(f"p_exact: {_fmt(outcome.success_probability)}")
    print(f"p_hat: {_fmt(est.p_hat)}")
    print(f"p_stderr: {_fmt(est.p_stderr)}")
    for name, value in zip(("x", "y", "z"), est.bloch_hat):
        if not math.isnan(value):
            print(f"bloch_{name}_hat: {_fmt(value)}")
    if not math.isnan(est.theta_f_hat):
        print(f"theta_f_hat: {_fmt(est.theta_f_hat)}")
    if not math.isnan(est.phase_hat):
        print(f"phase_hat: {_fmt(est.phase_hat)}")
    return EXIT_OK


def _cmd_report(args, config: dict) -> int:
    alpha = float(_setting(args, config, "alpha", 0.05))
    text = build_report(args.regime, alpha)
    out = _setting(args, config, "out")
    if out is not None:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


_COMMANDS = {"eval": _cmd_eval, "sweep": _cmd_sweep,
             "sample": _cmd_sample, "report": _cmd_report}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        return _COMMANDS[args.command](args, config)
    except OrthogonalSelectionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORTHOGONAL
    except ZeroProbabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_PROBABILITY
    except (ValueError, HierarchyViolationError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
