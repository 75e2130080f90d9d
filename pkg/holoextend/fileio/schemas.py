"""On-disk JSON schemas.

Complex numbers are ``{"re": x, "im": y}`` pairs and every top-level file
carries ``schema_version``. Expression trees are stored node by node,
discriminated by ``kind``, so a stored result can be evaluated again exactly.
"""

from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..config import SolverOptions
from ..results import VerificationReport

SCHEMA_VERSION = 1


class _Spec(BaseModel):
    model_config = ConfigDict(extra="forbid")


# =============================================================================
# Geometry
# =============================================================================


class ComplexSpec(_Spec):
    re: float = 0.0
    im: float = 0.0

    @classmethod
    def of(cls, z: complex) -> "ComplexSpec":
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


class CircleSpec(_Spec):
    center: ComplexSpec
    radius: float


class DomainSpec(_Spec):
    outer: CircleSpec
    holes: List[CircleSpec] = Field(default_factory=list)
    punctures: List[ComplexSpec] = Field(default_factory=list)


class DomainFile(BaseModel):
    """Any file with a ``domain`` entry; problem files qualify."""

    model_config = ConfigDict(extra="ignore")

    schema_version: Literal[1] = SCHEMA_VERSION
    domain: DomainSpec


# =============================================================================
# Problems
# =============================================================================


class ConstraintPointSpec(_Spec):
    """A boundary target given by its angle about the component center or by the point itself."""

    angle: Optional[float] = None
    point: Optional[ComplexSpec] = None
    value: ComplexSpec

    @model_validator(mode="after")
    def _one_location(self) -> "ConstraintPointSpec":
        if (self.angle is None) == (self.point is None):
            raise ValueError("give exactly one of 'angle' and 'point'")
        return self


class BoundSpec(_Spec):
    """M(theta) = constant + sum_k cos[k-1] cos(k theta) + sin[k-1] sin(k theta)."""

    constant: float
    cos: List[float] = Field(default_factory=list)
    sin: List[float] = Field(default_factory=list)


class ProblemFile(_Spec):
    schema_version: Literal[1] = SCHEMA_VERSION
    domain: DomainSpec
    constraints: List[List[ConstraintPointSpec]] = Field(description="One list per boundary component, outer circle first")
    bounds: List[BoundSpec] = Field(description="One bound per boundary component")
    puncture_values: List[ComplexSpec] = Field(default_factory=list)
    options: Optional[SolverOptions] = None


# =============================================================================
# Measures
# =============================================================================


class AtomSpec(_Spec):
    angle: float
    weight: ComplexSpec


class DensitySpec(_Spec):
    index: int
    value: ComplexSpec


class CircleMeasureSpec(_Spec):
    atoms: List[AtomSpec] = Field(default_factory=list)
    density: List[DensitySpec] = Field(default_factory=list)


class MeasureFile(_Spec):
    schema_version: Literal[1] = SCHEMA_VERSION
    r0: float
    inner: CircleMeasureSpec = Field(default_factory=CircleMeasureSpec)
    outer: CircleMeasureSpec = Field(default_factory=CircleMeasureSpec)


class CoefficientRow(_Spec):
    index: int
    inner: ComplexSpec
    outer: ComplexSpec
    lambda0: ComplexSpec
    eta0: ComplexSpec
    eta1: ComplexSpec
    lambda1: ComplexSpec


class DecompositionFile(_Spec):
    schema_version: Literal[1] = SCHEMA_VERSION
    r0: float
    truncation: int
    defect: float
    tolerance: float
    passed: bool
    inner_tail_bound: float
    outer_tail_bound: float
    lambda0: CircleMeasureSpec
    eta0: CircleMeasureSpec
    eta1: CircleMeasureSpec
    lambda1: CircleMeasureSpec
    coefficients: List[CoefficientRow]


# =============================================================================
# Expression trees
# =============================================================================


class RegionBoundarySpec(_Spec):
    circle: CircleSpec
    inside: bool


class RegionSpec(_Spec):
    boundaries: List[RegionBoundarySpec]
    tolerance: float


class LaurentTermSpec(_Spec):
    index: int
    value: ComplexSpec


class ConstNode(_Spec):
    kind: Literal["const"] = "const"
    value: ComplexSpec


class LaurentNode(_Spec):
    kind: Literal["laurent"] = "laurent"
    center: ComplexSpec
    coefficients: List[LaurentTermSpec]


class DiscPeakNode(_Spec):
    kind: Literal["disc_peak"] = "disc_peak"
    anchor: ComplexSpec
    circle: CircleSpec
    exponent: int


class MoebiusNode(_Spec):
    kind: Literal["moebius"] = "moebius"
    a: ComplexSpec
    b: ComplexSpec
    c: ComplexSpec
    d: ComplexSpec


class SumNode(_Spec):
    kind: Literal["sum"] = "sum"
    terms: List["FunctionNode"]


class ProductNode(_Spec):
    kind: Literal["product"] = "product"
    factors: List["FunctionNode"]


class ScaleNode(_Spec):
    kind: Literal["scale"] = "scale"
    factor: ComplexSpec
    child: "FunctionNode"


class ComposeNode(_Spec):
    kind: Literal["compose"] = "compose"
    outer: "FunctionNode"
    inner: "FunctionNode"


class OnRegionNode(_Spec):
    kind: Literal["on_region"] = "on_region"
    child: "FunctionNode"
    region: RegionSpec


FunctionNode = Annotated[
    Union[ConstNode, LaurentNode, DiscPeakNode, MoebiusNode, SumNode, ProductNode, ScaleNode, ComposeNode, OnRegionNode],
    Field(discriminator="kind"),
]

for _node in (SumNode, ProductNode, ScaleNode, ComposeNode, OnRegionNode):
    _node.model_rebuild()


# =============================================================================
# Results
# =============================================================================


class MarginsSpec(_Spec):
    gamma: float
    eps: float
    delta: float


class ResultFile(_Spec):
    schema_version: Literal[1] = SCHEMA_VERSION
    kind: Literal["disc", "glue", "punctures"]
    problem: ProblemFile
    options: SolverOptions
    function: FunctionNode
    terms: List[int] = Field(default_factory=list, description="Component index of each glued summand")
    margins: Optional[MarginsSpec] = None
    report: VerificationReport
