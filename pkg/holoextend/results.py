from dataclasses import dataclass, field
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from .holomorphic.expressions import HoloFunction


@dataclass(frozen=True)
class GlueMargins:
    gamma: float
    eps: float
    delta: float

    def as_dict(self) -> Dict[str, float]:
        return {"gamma": self.gamma, "eps": self.eps, "delta": self.delta}


class ProductCheck(BaseModel):
    """Sampled checks of the separating product h_j of one component."""

    component: int
    one_on_own: float = Field(description="max |h_j - 1| on the constraint points of component j")
    zero_elsewhere: float = Field(description="max |h_j| on constraint points of other components")
    bound_own_ratio: float = Field(description="sampled sup |h_j| on component j over (1 + eps)^(k-1)")
    bound_other_ratio: float = Field(description="sampled sup |h_j| elsewhere over delta (1 + eps)^(k-2)")
    passed: bool


class VerificationReport(BaseModel):
    """Numbers behind every verification of an extension."""

    kind: str
    passed: bool
    failures: List[str] = Field(default_factory=list)
    interpolation_residual: float = 0.0
    puncture_residual: Optional[float] = None
    holomorphy_residuals: List[float] = Field(default_factory=list)
    bound_margins: Optional[List[float]] = Field(default=None, description="Per component min over samples of M - |F|")
    max_modulus_excess: float = 0.0
    margins: Optional[Dict[str, float]] = None
    product_checks: Optional[List[ProductCheck]] = None
    bound_chain_excess: Optional[float] = None
    sample_count: int = 0
    solver_rounds: Optional[Dict[str, int]] = None
    wall_time: Optional[float] = None


@dataclass
class ExtensionResult:
    F: HoloFunction
    kind: str
    margins: Optional[GlueMargins] = None
    report: Optional[VerificationReport] = None
    # component index of each summand F_l * h_l of a glued F
    terms: List[int] = field(default_factory=list)
