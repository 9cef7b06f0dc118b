"""Exact simulator for a postselection-controlled (modular-value) two-qubit gate."""

from .channel import (BaselineResult, KrausPair, PhaseAbsorbParams, baseline_direct,
                      exact_channel_output, kraus_pair, nonunitary_rz,
                      nonunitary_rz_symmetric, single_kraus_gap)
from .errors import (HierarchyViolationError, MvgateError, OrthogonalSelectionError,
                     ZeroProbabilityError)
from .gate import (GateOutcome, ModularValue, SelectionPair, SystemPrep,
                   apply_and_postselect, controlled_gate, equivalent_local_rotations,
                   generator_gate, modular_value, theta_m)
from .linalg import inner, is_unitary, mat_exp_2x2, tensor, unit_state
from .sampling import SampleConfig, SampleEstimate, sample_outcome
from .sweep import SweepConfig, run_sweep
from .xpm import (CoherentTruncation, PostselectionFamily, RegimeReport, RegimeSpec,
                  classify_regime, exact_rm, postselection_state, regime_approx,
                  regime_report, xpm_joint_gate, xpm_preselection)

__version__ = "0.1.0"
