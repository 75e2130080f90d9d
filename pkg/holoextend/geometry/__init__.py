"""Circle-bounded domains and their derived regions."""

from .domain import (
    UNIT_CIRCLE,
    Circle,
    Domain,
    RegionDescriptor,
    RegionKind,
    RegionRef,
    build_domain,
    derived_region,
    sample_angles,
    sample_boundary,
)

__all__ = [
    "UNIT_CIRCLE",
    "Circle",
    "Domain",
    "RegionDescriptor",
    "RegionKind",
    "RegionRef",
    "build_domain",
    "derived_region",
    "sample_angles",
    "sample_boundary",
]
