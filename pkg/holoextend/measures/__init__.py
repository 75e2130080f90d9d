"""Measures on circles, their Fourier coefficients and the annular decomposition."""

from .circle_measure import (
    AnnulusMeasure,
    CircleMeasure,
    arc_variation_probe,
    coefficient_bound_margin,
    fourier_coefficient,
    fourier_sequence,
    measure_from_sequence,
)
from .decomposition import RieszDecomposition, Side, analytic_density, decompose, riesz_hypothesis_defect

__all__ = [
    "AnnulusMeasure",
    "CircleMeasure",
    "RieszDecomposition",
    "Side",
    "analytic_density",
    "arc_variation_probe",
    "coefficient_bound_margin",
    "decompose",
    "fourier_coefficient",
    "fourier_sequence",
    "measure_from_sequence",
    "riesz_hypothesis_defect",
]
