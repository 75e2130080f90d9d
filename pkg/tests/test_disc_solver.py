import numpy as np
import pytest

from holoextend.config import get_solver_options
from holoextend.errors import AnchorNotOnCircle, InfeasibleBound, PointsTooClose, ProblemError
from holoextend.geometry import UNIT_CIRCLE, Circle, RegionRef, build_domain, derived_region, sample_boundary
from holoextend.holomorphic import INFINITY, Const, evaluate, holomorphy_residual, sup_on_circle
from holoextend.solvers import BoundaryConstraint, BoundFunction, extend_disc, extend_disc_nonconstant, extend_region
from holoextend.solvers.disc_solver import augmentation_angle


def boundary_sup(F, circle=UNIT_CIRCLE, n=4096):
    return float(np.max(np.abs(evaluate(F, sample_boundary(circle, n)))))


def test_single_point():
    F = extend_disc(BoundaryConstraint((1,), (0.5,)))
    np.testing.assert_allclose(evaluate(F, 1), 0.5, atol=1e-12)
    assert boundary_sup(F) <= 0.95
    np.testing.assert_allclose(boundary_sup(F), 0.5, atol=1e-12)


def test_antipodal_points_decouple():
    F = extend_disc(BoundaryConstraint((1, -1), (0.5, -0.5)))
    np.testing.assert_allclose(evaluate(F, np.array([1, -1])), [0.5, -0.5], atol=1e-12)
    assert boundary_sup(F) <= 0.95


def test_empty_and_zero_constraints():
    assert extend_disc(BoundaryConstraint()) == Const(0)
    assert extend_disc(BoundaryConstraint((1j, -1j), (0, 0))) == Const(0)


def test_many_points_with_varying_bound(rng):
    angles = 2 * np.pi * (np.arange(12) + rng.uniform(0, 0.5, size=12)) / 12
    points = np.exp(1j * angles)
    bound = BoundFunction(1.0, (0.3,), (0.1,))
    values = 0.5 * bound.at_angle(angles) * np.exp(1j * rng.uniform(0, 2 * np.pi, size=12))
    F = extend_disc(BoundaryConstraint(tuple(points), tuple(values), bound))

    np.testing.assert_allclose(evaluate(F, points), values, atol=1e-10)
    samples = sample_boundary(UNIT_CIRCLE, 4096)
    ratio = np.abs(evaluate(F, samples)) / bound.at_angle(np.angle(samples))
    assert np.max(ratio) <= get_solver_options().safety + 1e-12


def test_constraint_validation():
    with pytest.raises(InfeasibleBound):
        extend_disc(BoundaryConstraint((1,), (1.0,)))
    with pytest.raises(InfeasibleBound):
        extend_disc(BoundaryConstraint((1,), (0.97,)))
    with pytest.raises(PointsTooClose):
        extend_disc(BoundaryConstraint((1, np.exp(1e-12j)), (0.1, 0.2)))
    with pytest.raises(AnchorNotOnCircle):
        extend_disc(BoundaryConstraint((0.9,), (0.1,)))
    with pytest.raises(ProblemError):
        BoundaryConstraint((1, -1), (0.1,))
    with pytest.raises(ProblemError):
        BoundFunction(0.5, (1.0,))


def test_nonconstant_augmentation():
    empty = extend_disc_nonconstant(BoundaryConstraint())
    np.testing.assert_allclose(evaluate(empty, -1), 0.5j, atol=1e-12)

    vanishing = extend_disc_nonconstant(BoundaryConstraint((1,), (0,)))
    np.testing.assert_allclose(evaluate(vanishing, np.array([1, -1])), [0, 0.5], atol=1e-12)

    constraint = BoundaryConstraint((1, 1j), (0.2, -0.3))
    plain = extend_disc(constraint)
    augmented = extend_disc_nonconstant(constraint)
    samples = sample_boundary(UNIT_CIRCLE, 64)
    np.testing.assert_allclose(evaluate(augmented, samples), evaluate(plain, samples))


def test_augmentation_angle_moves_along_gap():
    assert augmentation_angle([0.0]) == pytest.approx(np.pi)
    assert augmentation_angle([0.0], 1) == pytest.approx(4 * np.pi / 3)
    assert augmentation_angle([0.0, np.pi / 2]) == pytest.approx(5 * np.pi / 4)
    assert augmentation_angle([]) == pytest.approx(np.pi)


def test_extend_region_interior_matches_disc():
    domain = build_domain(UNIT_CIRCLE, [Circle(0.3, 0.3)])
    constraint = BoundaryConstraint((1, 1j), (0.2, -0.1j))
    F = extend_region(derived_region(domain, RegionRef.simply(0)), constraint)
    samples = sample_boundary(UNIT_CIRCLE, 64)
    np.testing.assert_allclose(evaluate(F, samples), evaluate(extend_disc(constraint), samples))


def test_extend_region_exterior():
    domain = build_domain(UNIT_CIRCLE, [Circle(0.3, 0.3)])
    region = derived_region(domain, RegionRef.simply(1))
    F = extend_region(region, BoundaryConstraint((0.6,), (0.2,)))

    np.testing.assert_allclose(evaluate(F, 0.6), 0.2, atol=1e-12)
    assert np.isfinite(abs(evaluate(F, INFINITY)))
    assert boundary_sup(F, Circle(0.3, 0.3)) <= 0.95 + 1e-12
    assert extend_region(region, BoundaryConstraint()) == Const(0)


def test_extend_region_pulls_back_bound():
    hole = Circle(0.3, 0.3)
    domain = build_domain(UNIT_CIRCLE, [hole])
    bound = BoundFunction(0.5, (0.2,))
    points = (hole.point(0.0), hole.point(2.0))
    F = extend_region(derived_region(domain, RegionRef.simply(1)), BoundaryConstraint(points, (0.3, 0.1j), bound))

    samples = sample_boundary(hole, 4096)
    ratio = np.abs(evaluate(F, samples)) / bound.at_angle(hole.angles_of(samples))
    assert np.max(ratio) <= 0.95 + 1e-12


def separated_angles(rng, n, separation=0.05):
    """n random angles, one per equal cell, with pairwise chord distance >= separation."""
    angles = 2 * np.pi * (np.arange(n) + rng.uniform(0, 0.5, size=n)) / n + rng.uniform(0, 2 * np.pi)
    points = np.exp(1j * angles)
    if n > 1:
        gaps = np.abs(points[:, None] - points[None, :]) + np.eye(n)
        assert gaps.min() >= separation
    return angles


@pytest.mark.parametrize("n", [1, 2, 5, 20])
def test_random_targets_near_random_bound(rng, n):
    safety = get_solver_options().safety
    for _ in range(3):
        bound = BoundFunction(1.0, tuple(rng.uniform(-0.2, 0.2, size=2)), tuple(rng.uniform(-0.2, 0.2, size=2)))
        angles = separated_angles(rng, n)
        points = np.exp(1j * angles)
        values = 0.8 * bound.at_angle(angles) * np.exp(1j * rng.uniform(0, 2 * np.pi, size=n))
        F = extend_disc(BoundaryConstraint(tuple(points), tuple(values), bound))

        assert np.max(np.abs(evaluate(F, points) - values)) < 1e-10
        samples = sample_boundary(UNIT_CIRCLE, 4096)
        ratio = np.abs(evaluate(F, samples)) / bound.at_angle(np.angle(samples))
        assert np.max(ratio) <= safety + 1e-12
        assert holomorphy_residual(F, 0, 0.5, 0.9, 32) < 1e-9
        assert sup_on_circle(F, Circle(0, 0.9)) <= boundary_sup(F) + 1e-9
