"""Exceptions shared across the gate toolkit."""


class MvgateError(Exception):
    """Base class for toolkit errors."""


class OrthogonalSelectionError(MvgateError):
    """Pre- and post-selection are orthogonal; the modular value is undefined."""


class ZeroProbabilityError(MvgateError):
    """Postselection success probability is zero; no normalized output state."""


class HierarchyViolationError(MvgateError):
    """Regime parameters do not satisfy the declared scale ordering."""
