"""Holomorphic expression trees, peak functions and numerical certificates."""

from .expressions import (
    INFINITY,
    Compose,
    Const,
    DiscPeak,
    HoloFunction,
    LaurentPoly,
    Moebius,
    OnRegion,
    Product,
    Scale,
    Sum,
    combine,
    evaluate,
    moebius_apply,
)
from .peaks import annulus_inner_peak, disc_peak
from .verification import FourierSeq, holomorphy_residual, laurent_coeffs, sup_on_circle

__all__ = [
    "INFINITY",
    "Compose",
    "Const",
    "DiscPeak",
    "FourierSeq",
    "HoloFunction",
    "LaurentPoly",
    "Moebius",
    "OnRegion",
    "Product",
    "Scale",
    "Sum",
    "annulus_inner_peak",
    "combine",
    "disc_peak",
    "evaluate",
    "holomorphy_residual",
    "laurent_coeffs",
    "moebius_apply",
    "sup_on_circle",
]
