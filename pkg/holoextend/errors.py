"""Exception taxonomy.

Every failure raised by the library derives from :class:`HoloExtendError`.
Families that describe malformed input also derive from ``ValueError``.
The CLI maps :class:`GeometryError`, :class:`ProblemError`, :class:`InvalidMeasure`
and :class:`TruncationInsufficient` to exit code 1 (the input could not be
turned into a problem) and every other ``HoloExtendError`` to exit code 2.
"""


class HoloExtendError(Exception):
    """Base class for all holoextend failures."""


# =============================================================================
# Geometry
# =============================================================================


class GeometryError(HoloExtendError, ValueError):
    """Invalid circles, domains or region references."""


class InvalidCircle(GeometryError):
    pass


class NestedHoleViolation(GeometryError):
    pass


class OverlappingHoles(GeometryError):
    pass


class PunctureOutsideDomain(GeometryError):
    pass


class DuplicatePuncture(GeometryError):
    pass


class InvalidRegionRef(GeometryError):
    pass


# =============================================================================
# Evaluation of expression trees
# =============================================================================


class EvaluationError(HoloExtendError):
    """Failures while building or evaluating a HoloFunction."""


class PoleHit(EvaluationError, ArithmeticError):
    pass


class OutsideRegion(EvaluationError, ValueError):
    pass


class RegionViolation(EvaluationError, ValueError):
    pass


class AnchorNotOnCircle(EvaluationError, ValueError):
    pass


class AnchorNotOnInnerCircle(EvaluationError, ValueError):
    pass


class InvalidExpression(EvaluationError, ValueError):
    """Structurally invalid node, e.g. a singular Moebius matrix."""


# =============================================================================
# Conformal charts
# =============================================================================


class ChartError(HoloExtendError):
    pass


class UnsupportedRegion(ChartError, ValueError):
    pass


class NotNested(ChartError, ValueError):
    pass


class BoundaryCorrespondenceError(ChartError):
    pass


# =============================================================================
# Measures
# =============================================================================


class MeasureError(HoloExtendError):
    pass


class InvalidMeasure(MeasureError, ValueError):
    pass


class HypothesisViolated(MeasureError):
    pass


class TruncationInsufficient(MeasureError, ValueError):
    pass


class WrongSupport(MeasureError, ValueError):
    pass


# =============================================================================
# Solvers
# =============================================================================


class SolverError(HoloExtendError):
    pass


class InfeasibleBound(SolverError):
    pass


class PointsTooClose(SolverError):
    pass


class BoundViolatedAfterMaxRounds(SolverError):
    pass


class SeparationCheckFailed(SolverError):
    pass


class EpsMarginViolated(SolverError):
    """The growth margin eps fails its sampled inequality."""


class DeltaMarginViolated(SolverError):
    """The cross-component margin delta fails its sampled inequality."""


class GlueBoundViolated(SolverError):
    pass


class PunctureDegenerate(SolverError):
    pass


# =============================================================================
# Problems, verification and runtime checks
# =============================================================================


class ProblemError(HoloExtendError, ValueError):
    """Problem content that cannot describe a valid extension problem."""


class VerificationFailed(HoloExtendError):
    pass


class RandomnessUsed(HoloExtendError):
    pass
