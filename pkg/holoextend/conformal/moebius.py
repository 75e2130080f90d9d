"""Exact Moebius charts of circle-bounded regions.

Disc interiors and circle exteriors go to the unit disc; a doubly connected
region between two nested circles goes to a standard annulus r0 < |w| < 1 via
the common symmetric points of the two circles.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..config import get_geometry_config
from ..errors import BoundaryCorrespondenceError, InvalidExpression, NotNested, UnsupportedRegion
from ..geometry.domain import (
    UNIT_CIRCLE,
    Circle,
    Domain,
    RegionDescriptor,
    RegionRef,
    derived_region,
    sample_boundary,
)
from ..holomorphic.expressions import INFINITY, POLE_TOLERANCE, Moebius, moebius_apply
from ..logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class MoebiusMap:
    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.determinant == 0:
            raise InvalidExpression(f"Singular Moebius map ({self.a}, {self.b}, {self.c}, {self.d})")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    @property
    def determinant(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=complex)

    def forward(self, z):
        if z is INFINITY:
            return INFINITY if abs(self.c) < POLE_TOLERANCE else self.a / self.c
        points = np.asarray(z, dtype=complex)
        values = moebius_apply(self.a, self.b, self.c, self.d, np.atleast_1d(points))
        return complex(values[0]) if points.ndim == 0 else values.reshape(points.shape)

    def inverse_map(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def inverse(self, w):
        return self.inverse_map().forward(w)

    def compose(self, inner: "MoebiusMap") -> "MoebiusMap":
        """self after inner."""
        (a, b), (c, d) = self.matrix @ inner.matrix
        return MoebiusMap(a, b, c, d)

    def as_holo(self) -> Moebius:
        return Moebius(self.a, self.b, self.c, self.d)

    def image_circle(self, circle: Circle) -> Circle:
        """Image of a circle that avoids the pole, from three of its points."""
        z1, z2, z3 = (self.forward(circle.point(angle)) for angle in (0.0, np.pi / 2, np.pi))
        numerator = abs(z1) ** 2 * (z2 - z3) + abs(z2) ** 2 * (z3 - z1) + abs(z3) ** 2 * (z1 - z2)
        denominator = np.conj(z1) * (z2 - z3) + np.conj(z2) * (z3 - z1) + np.conj(z3) * (z1 - z2)
        if abs(denominator) < POLE_TOLERANCE:
            raise UnsupportedRegion("Circle passes through the pole; its image is a line")
        center = complex(numerator / denominator)
        return Circle(center, abs(z1 - center))


@dataclass(frozen=True)
class AnnulusChart:
    """Chart of a doubly connected region onto r0 < |w| < 1.

    ``source_outer`` maps to the unit circle and ``source_inner`` to |w| = r0.
    ``exterior_source`` is set when the unit-circle source is a hole, i.e. the
    region lies outside both source circles and contains infinity.
    """

    map: MoebiusMap
    r0: float
    source_outer: int = 0
    source_inner: int = 1
    exterior_source: bool = False

    def forward(self, z):
        return self.map.forward(z)

    def inverse(self, w):
        return self.map.inverse(w)


# =============================================================================
# Simply connected regions
# =============================================================================


def disc_chart(region: RegionDescriptor) -> MoebiusMap:
    """Chart of a disc interior, (z - c) / r, or circle exterior, r / (z - c)."""
    if len(region.boundaries) != 1:
        raise UnsupportedRegion(f"Disc charts need a region bounded by one circle, got {len(region.boundaries)}")
    (circle, inside), = region.boundaries
    if inside:
        return MoebiusMap(1 / circle.radius, -circle.center / circle.radius, 0, 1)
    return MoebiusMap(0, circle.radius, 1, -circle.center)


def component_chart(domain: Domain, j: int) -> MoebiusMap:
    return disc_chart(derived_region(domain, RegionRef.simply(j)))


def arclength_images(domain: Domain, j: int, points: Sequence[complex]) -> np.ndarray:
    """Images on the unit circle of boundary points of component j.

    A finite set maps to a finite set of the unit circle, which has arclength zero.
    """
    images = np.atleast_1d(component_chart(domain, j).forward(np.asarray(points, dtype=complex)))
    tolerance = get_geometry_config().chart_tolerance
    if images.size and np.max(np.abs(np.abs(images) - 1)) > tolerance:
        raise BoundaryCorrespondenceError(f"Points do not lie on boundary component {j}")
    return images


# =============================================================================
# Doubly connected regions
# =============================================================================


def _check_correspondence(chart: MoebiusMap, circle: Circle, radius: float, samples: int, tolerance: float) -> None:
    images = chart.forward(sample_boundary(circle, samples))
    error = float(np.max(np.abs(np.abs(images) - radius)))
    if error >= tolerance:
        raise BoundaryCorrespondenceError(f"Boundary images miss |w| = {radius} by {error:.3e}")


def annulus_chart(outer: Circle, inner: Circle, source_outer: int = 0, source_inner: int = 1, exterior_source: bool = False) -> AnnulusChart:
    """Moebius map of the region between nested circles onto r0 < |w| < 1."""
    geometry = get_geometry_config()
    if not outer.contains_disc_of(inner, geometry.gap_tolerance):
        raise NotNested(f"Circle (center {inner.center}, radius {inner.radius}) is not strictly inside (center {outer.center}, radius {outer.radius})")

    normalize = MoebiusMap(1 / outer.radius, -outer.center / outer.radius, 0, 1)
    offset = (inner.center - outer.center) / outer.radius
    radius = inner.radius / outer.radius

    if offset == 0:
        chart = normalize
        r0 = radius
        logger.debug(f"Concentric circles, r0 = {r0}")
    else:
        distance = abs(offset)
        rotate = MoebiusMap(np.conj(offset) / distance, 0, 0, 1)
        # smaller root of c x^2 - (1 + c^2 - r^2) x + c = 0
        b = 1 + distance**2 - radius**2
        x1 = 2 * distance / (b + np.sqrt(b * b - 4 * distance**2))
        symmetric = MoebiusMap(1, -x1, -x1, 1)
        chart = symmetric.compose(rotate.compose(normalize))
        r0 = abs((distance - radius - x1) / (1 - x1 * (distance - radius)))
        logger.debug(f"Symmetric point x1 = {x1}, r0 = {r0}")

    if not (0 < r0 < 1):
        raise NotNested(f"Computed modulus {r0} is not in (0, 1)")

    _check_correspondence(chart, outer, 1.0, geometry.chart_check_samples, geometry.chart_tolerance)
    _check_correspondence(chart, inner, r0, geometry.chart_check_samples, geometry.chart_tolerance)
    return AnnulusChart(chart, float(r0), source_outer, source_inner, exterior_source)


def modulus(outer: Circle, inner: Circle) -> float:
    return annulus_chart(outer, inner).r0


def pair_chart(domain: Domain, j: int, l: int) -> AnnulusChart:
    """Annulus chart of D_{j,l}, the doubly connected region between components j and l.

    With the outer circle involved it is the unit-circle source. For two holes,
    hole j's exterior is first sent to the unit disc, then the image of hole l
    is straightened by annulus_chart.
    """
    derived_region(domain, RegionRef.doubly(j, l))
    if j == 0 or l == 0:
        hole = l if j == 0 else j
        return annulus_chart(domain.outer, domain.component(hole), 0, hole, False)

    geometry = get_geometry_config()
    exterior = disc_chart(derived_region(domain, RegionRef.simply(j)))
    image = exterior.image_circle(domain.component(l))
    inner_chart = annulus_chart(UNIT_CIRCLE, image)
    chart = inner_chart.map.compose(exterior)
    _check_correspondence(chart, domain.component(j), 1.0, geometry.chart_check_samples, geometry.chart_tolerance)
    _check_correspondence(chart, domain.component(l), inner_chart.r0, geometry.chart_check_samples, geometry.chart_tolerance)
    return AnnulusChart(chart, inner_chart.r0, j, l, True)


def chart_region(domain: Domain, chart: AnnulusChart) -> RegionDescriptor:
    return derived_region(domain, RegionRef.doubly(chart.source_outer, chart.source_inner))


def solver_annulus_region(r0: float) -> RegionDescriptor:
    return RegionDescriptor(((UNIT_CIRCLE, True), (Circle(0j, r0), False)))


def unit_disc_region() -> RegionDescriptor:
    return RegionDescriptor(((UNIT_CIRCLE, True),))
