"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: parameter problems exit 1, promise or
feasibility problems exit 2, and internal verification failures exit 3.
"""


class GroverWeightError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(GroverWeightError, ValueError):
    """An argument is outside its documented range."""


class WeightOutOfRangeError(ParameterError):
    """Requested oracle weight t is not in [0, 2^n]."""


class IndistinguishablePairError(ParameterError):
    """w = 1/2 gives two identical hypotheses; nothing to decide."""


class DegenerateSubspaceError(GroverWeightError):
    """t in {0, N}: the two-dimensional invariant plane does not exist."""


class PromiseViolationError(GroverWeightError):
    """Observed data is inconsistent with every promised hypothesis."""


class GeometryInfeasibleError(GroverWeightError):
    """Cross-point radicand is negative: the (k, beta) pair is mismatched."""


class InfeasiblePhaseError(GroverWeightError):
    """A phase equation has no solution (|cos| > 1 or degenerate denominator)."""


class PlanningError(GroverWeightError):
    """No sound counting plan exists for the requested hypotheses."""


class PhaseSolutionFailureError(GroverWeightError):
    """No phase-solution branch drives both hypotheses to opposite poles."""
