import numpy as np
import pytest

from holoextend.config import reset_config
from holoextend.geometry import UNIT_CIRCLE, Circle, build_domain
from holoextend.solvers import BoundaryConstraint, BoundFunction, ExtensionProblem


@pytest.fixture(autouse=True)
def fresh_config():
    reset_config()
    yield
    reset_config()


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def two_circle_problem():
    """Unit disc minus |z| <= 0.5 with f(1) = 0.3 and f(0.5) = -0.2, M = 1."""
    domain = build_domain(UNIT_CIRCLE, [Circle(0, 0.5)])
    constraints = (
        BoundaryConstraint((1.0,), (0.3,), BoundFunction.const(1.0)),
        BoundaryConstraint((0.5,), (-0.2,), BoundFunction.const(1.0)),
    )
    return ExtensionProblem(domain, constraints)


@pytest.fixture
def three_circle_problem():
    """Unit disc minus two holes of radius 0.2 at +-0.45, one target per circle."""
    domain = build_domain(UNIT_CIRCLE, [Circle(0.45, 0.2), Circle(-0.45, 0.2)])
    constraints = (
        BoundaryConstraint((1.0,), (0.3,), BoundFunction.const(1.0)),
        BoundaryConstraint((0.65,), (-0.2,), BoundFunction.const(1.0)),
        BoundaryConstraint((-0.65,), (0.1j,), BoundFunction.const(1.0)),
    )
    return ExtensionProblem(domain, constraints)


@pytest.fixture
def punctured_problem():
    """Factory: unit disc minus |z - 0.55| <= 0.2 with targets at i and 0.35."""

    def build(punctures, puncture_values, outer_value=0.0, hole_value=0.0):
        domain = build_domain(UNIT_CIRCLE, [Circle(0.55, 0.2)], punctures)
        constraints = (
            BoundaryConstraint((1j,), (outer_value,), BoundFunction.const(1.0)),
            BoundaryConstraint((0.35,), (hole_value,), BoundFunction.const(1.0)),
        )
        return ExtensionProblem(domain, constraints, tuple(puncture_values))

    return build
