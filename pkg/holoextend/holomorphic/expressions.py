"""Expression trees of holomorphic functions.

Every construction in the package (peak sums, chart compositions, separating
products, glued extensions) is represented as an immutable tree of the nodes
below and evaluated exactly by recursion. Nodes evaluate whole sample arrays
at once; :func:`evaluate` is the scalar-friendly entry point.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from ..errors import AnchorNotOnCircle, InvalidExpression, OutsideRegion, PoleHit
from ..geometry.domain import Circle, RegionDescriptor

POLE_TOLERANCE = 1e-14
ANCHOR_TOLERANCE = 1e-12


class _Infinity:
    """The point at infinity of the Riemann sphere."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


def moebius_apply(a: complex, b: complex, c: complex, d: complex, z: np.ndarray) -> np.ndarray:
    """(a z + b) / (c z + d) on an array, raising PoleHit near the pole."""
    denominator = c * z + d
    if np.any(np.abs(denominator) < POLE_TOLERANCE):
        raise PoleHit(f"Moebius map ({a}, {b}, {c}, {d}) evaluated at its pole")
    return (a * z + b) / denominator


# =============================================================================
# Base class
# =============================================================================


class HoloFunction(ABC):
    """A holomorphic function given as an expression tree."""

    kind: str = ""

    @abstractmethod
    def evaluate_many(self, z: np.ndarray) -> np.ndarray:
        """Values at a 1-d complex array."""

    def at_infinity(self) -> complex:
        """Value at infinity; PoleHit when the function is unbounded there."""
        raise PoleHit(f"{type(self).__name__} has no finite value at infinity")

    @property
    def region(self) -> Optional[RegionDescriptor]:
        return None

    def __call__(self, z):
        return evaluate(self, z)


def evaluate(f: HoloFunction, z):
    """Evaluate f at a complex scalar, an array of points, or INFINITY."""
    if z is INFINITY:
        return complex(f.at_infinity())
    points = np.asarray(z, dtype=complex)
    values = f.evaluate_many(np.atleast_1d(points).ravel())
    if points.ndim == 0:
        return complex(values[0])
    return values.reshape(points.shape)


# =============================================================================
# Primitives
# =============================================================================


@dataclass(frozen=True)
class Const(HoloFunction):
    value: complex
    kind = "const"

    def __post_init__(self):
        object.__setattr__(self, "value", complex(self.value))

    def evaluate_many(self, z: np.ndarray) -> np.ndarray:
        return np.full(z.shape, self.value, dtype=complex)

    def at_infinity(self) -> complex:
        return self.value


@dataclass(frozen=True)
class LaurentPoly(HoloFunction):
    """Sum of a_j (z - center)^j over a finite set of integer indices."""

    center: complex
    coefficients: Tuple[Tuple[int, complex], ...]
    kind = "laurent"

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        terms = [(int(j), complex(a)) for j, a in self.coefficients]
        indices = [j for j, _ in terms]
        if len(set(indices)) != len(indices):
            raise InvalidExpression(f"Repeated Laurent index in {sorted(indices)}")
        object.__setattr__(self, "coefficients", tuple(sorted(terms, key=lambda term: term[0])))

    @classmethod
    def from_dict(cls, center: complex, coefficients: Mapping[int, complex]) -> "LaurentPoly":
        return cls(center, tuple(coefficients.items()))

    def as_dict(self) -> Dict[int, complex]:
        return dict(self.coefficients)

    def evaluate_many(self, z: np.ndarray) -> np.ndarray:
        w = z - self.center
        if any(j < 0 for j, _ in self.coefficients) and np.any(np.abs(w) < POLE_TOLERANCE):
            raise PoleHit(f"Laurent polynomial evaluated at its center {self.center}")
        result = np.zeros(z.shape, dtype=complex)
        for j, a in self.coefficients:
            result += a * w**j
        return result

    def at_infinity(self) -> complex:
        if any(j > 0 and a != 0 for j, a in self.coefficients):
            raise PoleHit("Laurent polynomial with positive powers is unbounded at infinity")
        return self.as_dict().get(0, 0j)


@dataclass(frozen=True)
class DiscPeak(HoloFunction):
    """((1 + conj(zeta) (z - c) / r) / 2)^n with zeta the anchor on the unit circle."""

    anchor: complex
    circle: Circle
    exponent: int
    kind = "disc_peak"

    def __post_init__(self):
        anchor = complex(self.anchor)
        exponent = int(self.exponent)
        if exponent < 1:
            raise InvalidExpression(f"Peak exponent must be a positive integer, got {self.exponent}")
        off = abs(abs(anchor - self.circle.center) - self.circle.radius)
        if off > ANCHOR_TOLERANCE * max(1.0, self.circle.radius):
            raise AnchorNotOnCircle(f"Anchor {anchor} is {off:.3e} away from the reference circle")
        object.__setattr__(self, "anchor", anchor)
        object.__setattr__(self, "exponent", exponent)

    @property
    def unit_anchor(self) -> complex:
        return (self.anchor - self.circle.center) / self.circle.radius

    def evaluate_many(self, z: np.ndarray) -> np.ndarray:
        u = (z - self.circle.center) / self.circle.radius
        base = (1 + np.conj(self.unit_anchor) * u) / 2
        return base**self.exponent


@dataclass(frozen=True)
class Moebius(HoloFunction):
    a: complex
    b: complex
    c: complex
    d: complex
    kind = "moebius"

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.a * self.d - self.b * self.c == 0:
            raise InvalidExpression(f"Singular Moebius coefficients ({self.a}, {self.b}, {self.c}, {self.d})")

    def evaluate_many(self, z: np.ndarray) -> np.ndarray:
        return moebius_apply(self.a, self.b, self.c, self.d, z)

    def at_infinity(self) -> complex:
        if abs(self.c) < POLE_TOLERANCE:
            raise PoleHit("Affine map sends infinity to infinity")
        return self.a / self.c


# =============================================================================
# Combinators
# =============================================================================


@dataclass(frozen=True)
class Sum(HoloFunction):
    terms: Tuple[HoloFunction, ...]
    kind = "sum"

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def evaluate_many(self, z: np.ndarray) -> np.ndarray:
        result = np.zeros(z.shape, dtype=complex)
        for term in self.terms:
            result = result + term.evaluate_many(z)
        return result

    def at_infinity(self) -> complex:
        return sum((term.at_infinity() for term in self.terms), 0j)


@dataclass(frozen=True)
class Product(HoloFunction):
    factors: Tuple[HoloFunction, ...]
    kind = "product"

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def evaluate_many(self, z: np.ndarray) -> np.ndarray:
        result = np.ones(z.shape, dtype=complex)
        for factor in self.factors:
            result = result * factor.evaluate_many(z)
        return result

    def at_infinity(self) -> complex:
        result = 1 + 0j
        for factor in self.factors:
            result *= factor.at_infinity()
        return result


@dataclass(frozen=True)
class Scale(HoloFunction):
    factor: complex
    child: HoloFunction
    kind = "scale"

    def __post_init__(self):
        object.__setattr__(self, "factor", complex(self.factor))

    def evaluate_many(self, z: np.ndarray) -> np.ndarray:
        return self.factor * self.child.evaluate_many(z)

    def at_infinity(self) -> complex:
        return self.factor * self.child.at_infinity()


@dataclass(frozen=True)
class Compose(HoloFunction):
    """outer(inner(z))."""

    outer: HoloFunction
    inner: HoloFunction
    kind = "compose"

    def evaluate_many(self, z: np.ndarray) -> np.ndarray:
        return self.outer.evaluate_many(self.inner.evaluate_many(z))

    def at_infinity(self) -> complex:
        try:
            w = self.inner.at_infinity()
        except PoleHit:
            return self.outer.at_infinity()
        return complex(self.outer.evaluate_many(np.array([w], dtype=complex))[0])


@dataclass(frozen=True)
class OnRegion(HoloFunction):
    """Records the region of definition; evaluation outside it raises OutsideRegion."""

    child: HoloFunction
    descriptor: RegionDescriptor
    kind = "on_region"

    @property
    def region(self) -> RegionDescriptor:
        return self.descriptor

    def evaluate_many(self, z: np.ndarray) -> np.ndarray:
        inside = self.descriptor.contains(z)
        if not np.all(inside):
            outside = z[~inside][0]
            raise OutsideRegion(f"Point {outside} lies outside the region of definition")
        return self.child.evaluate_many(z)

    def at_infinity(self) -> complex:
        if not self.descriptor.contains_infinity:
            raise OutsideRegion("Infinity lies outside the region of definition")
        return self.child.at_infinity()


def combine(coefficients, basis) -> HoloFunction:
    """sum_i c_i * basis_i, as a single Scale when there is one term."""
    terms = tuple(Scale(complex(c), b) for c, b in zip(coefficients, basis))
    if not terms:
        return Const(0)
    if len(terms) == 1:
        return terms[0]
    return Sum(terms)


def is_zero_constant(f: HoloFunction) -> bool:
    return isinstance(f, Const) and f.value == 0
