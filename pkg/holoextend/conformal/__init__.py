"""Moebius charts of disc, exterior and two-circle regions."""

from .moebius import (
    AnnulusChart,
    MoebiusMap,
    annulus_chart,
    arclength_images,
    chart_region,
    component_chart,
    disc_chart,
    modulus,
    pair_chart,
    solver_annulus_region,
    unit_disc_region,
)

__all__ = [
    "AnnulusChart",
    "MoebiusMap",
    "annulus_chart",
    "arclength_images",
    "chart_region",
    "component_chart",
    "disc_chart",
    "modulus",
    "pair_chart",
    "solver_annulus_region",
    "unit_disc_region",
]
