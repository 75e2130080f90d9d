from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional

import numpy as np

from ..config import get_measure_config
from ..errors import HypothesisViolated, TruncationInsufficient, WrongSupport
from ..holomorphic.expressions import Const, HoloFunction, LaurentPoly
from ..holomorphic.verification import FourierSeq
from ..logging_config import get_logger
from .circle_measure import AnnulusMeasure, CircleMeasure, fourier_coefficient

logger = get_logger(__name__)


class Side(str, Enum):
    NONNEG = "nonneg"
    NONPOS = "nonpos"


@dataclass(frozen=True)
class RieszDecomposition:
    """mu0 = lambda0 + eta0 on r0 T and mu1 = eta1 + lambda1 on T.

    lambda0 carries the coefficients of mu0 at 1..J and eta1 those of mu1 at
    -J..-1, so eta0 has no coefficients at 1..J and lambda1 none at -J..-1.
    """

    lambda0: CircleMeasure
    eta0: CircleMeasure
    eta1: CircleMeasure
    lambda1: CircleMeasure
    truncation: int
    defect: float
    # geometric tails of the truncated analytic series beyond order J
    inner_tail_bound: float
    outer_tail_bound: float


def riesz_hypothesis_defect(m: AnnulusMeasure, J: int) -> float:
    """max over |j| <= J of |mu0_j + mu1_j|."""
    return max(abs(fourier_coefficient(m.inner, j) + fourier_coefficient(m.outer, j)) for j in range(-J, J + 1))


def _one_sided_density(m: CircleMeasure, indices) -> Dict[int, complex]:
    """Density coefficients reproducing a^k mu_k for the given k (atoms folded in)."""
    density = m.density_dict
    angles, weights = m.atom_angles, m.atom_weights
    result = {}
    for k in indices:
        value = density.get(k, 0j)
        if m.atoms:
            value += complex(np.sum(weights * np.exp(-1j * k * angles)))
        result[k] = value
    return result


def decompose(m: AnnulusMeasure, J: Optional[int] = None, tolerance: Optional[float] = None) -> RieszDecomposition:
    """Split an annular measure satisfying mu0_j = -mu1_j into one-sided pieces."""
    measure_config = get_measure_config()
    J = measure_config.truncation if J is None else J
    tolerance = measure_config.hypothesis_tolerance if tolerance is None else tolerance
    if J < 1:
        raise ValueError(f"Truncation order must be positive, got {J}")

    for label, piece in (("inner", m.inner), ("outer", m.outer)):
        beyond = [k for k in piece.density_support if abs(k) > J]
        if beyond:
            raise TruncationInsufficient(f"{label} density has indices {beyond} beyond truncation order {J}")

    defect = riesz_hypothesis_defect(m, J)
    if defect > tolerance:
        raise HypothesisViolated(f"Coefficient defect {defect:.3e} exceeds tolerance {tolerance:.1e}")

    lambda0 = CircleMeasure(m.inner.circle, (), tuple(_one_sided_density(m.inner, range(1, J + 1)).items()))
    eta0 = m.inner - lambda0
    eta1 = CircleMeasure(m.outer.circle, (), tuple(_one_sided_density(m.outer, range(-J, 0)).items()))
    lambda1 = m.outer - eta1

    geometric = m.r0 ** (J + 1) / (1 - m.r0)
    result = RieszDecomposition(
        lambda0=lambda0,
        eta0=eta0,
        eta1=eta1,
        lambda1=lambda1,
        truncation=J,
        defect=defect,
        inner_tail_bound=m.outer.tv_ub * geometric,
        outer_tail_bound=m.inner.tv_ub * geometric,
    )
    logger.info(f"Decomposed annular measure at order {J}: defect {defect:.3e}, tails {result.inner_tail_bound:.3e} / {result.outer_tail_bound:.3e}")
    return result


def analytic_density(seq: FourierSeq, side: Side) -> HoloFunction:
    """The truncated series sum_j seq_j z^j as a function, for one-sided seq."""
    side = Side(side)
    support = seq.support()
    wrong = [j for j in support if (j < 0 if side == Side.NONNEG else j > 0)]
    if wrong:
        raise WrongSupport(f"Indices {wrong} violate the {side.value} support requirement")
    if all(j == 0 for j in support):
        return Const(seq[0])
    return LaurentPoly.from_dict(0j, {j: seq[j] for j in support})
