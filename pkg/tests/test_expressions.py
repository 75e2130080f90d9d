import numpy as np
import pytest

from holoextend.errors import AnchorNotOnCircle, AnchorNotOnInnerCircle, InvalidExpression, OutsideRegion, PoleHit
from holoextend.geometry import UNIT_CIRCLE, Circle, sample_boundary
from holoextend.holomorphic import (
    INFINITY,
    Compose,
    Const,
    DiscPeak,
    LaurentPoly,
    Moebius,
    OnRegion,
    Product,
    Scale,
    Sum,
    annulus_inner_peak,
    combine,
    disc_peak,
    evaluate,
)
from holoextend.conformal import unit_disc_region


def test_disc_peak_values():
    for n in (1, 2, 7, 64):
        np.testing.assert_allclose(evaluate(DiscPeak(1, UNIT_CIRCLE, n), 1), 1)
    assert evaluate(DiscPeak(1, UNIT_CIRCLE, 1), -1) == 0
    np.testing.assert_allclose(evaluate(disc_peak(1, UNIT_CIRCLE, 2), 1j), 0.5j, atol=1e-15)
    np.testing.assert_allclose(evaluate(disc_peak(1j, UNIT_CIRCLE, 1), -1j), 0, atol=1e-15)


def test_disc_peak_on_shifted_circle():
    circle = Circle(2 + 1j, 0.5)
    peak = disc_peak(2.5 + 1j, circle, 5)
    np.testing.assert_allclose(evaluate(peak, 2.5 + 1j), 1)
    np.testing.assert_allclose(evaluate(peak, 1.5 + 1j), 0, atol=1e-15)


def test_disc_peak_bound_and_localization():
    circle = Circle(0.2 + 0.1j, 0.7)
    anchor = circle.point(0.4)
    samples = sample_boundary(circle, 512)
    samples = samples[np.abs(samples - anchor) > 1e-6]
    previous = np.ones(samples.size)
    for n in range(1, 65):
        moduli = np.abs(evaluate(disc_peak(anchor, circle, n), samples))
        assert np.all(moduli < 1)
        assert np.all(moduli <= previous)
        previous = moduli


def test_disc_peak_validation():
    with pytest.raises(AnchorNotOnCircle):
        DiscPeak(0.5, UNIT_CIRCLE, 3)
    with pytest.raises(InvalidExpression):
        DiscPeak(1, UNIT_CIRCLE, 0)


def test_annulus_inner_peak():
    r0 = 0.5
    for n in (1, 4, 9):
        np.testing.assert_allclose(evaluate(annulus_inner_peak(r0, r0, n), r0), 1)
    np.testing.assert_allclose(evaluate(annulus_inner_peak(r0, r0, 1), -r0), 0, atol=1e-15)
    np.testing.assert_allclose(evaluate(annulus_inner_peak(r0, r0, 1), 1), 0.75)

    anchor = r0 * np.exp(0.7j)
    np.testing.assert_allclose(evaluate(annulus_inner_peak(anchor, r0, 3), anchor), 1)
    with pytest.raises(AnchorNotOnInnerCircle):
        annulus_inner_peak(0.4, r0, 1)


def test_combinators():
    assert evaluate(Sum((Const(2), Const(3))), 0.1 + 0.2j) == 5
    z = np.array([0.5, 1j, -0.25])
    square = Product((LaurentPoly(0, ((1, 1),)), LaurentPoly(0, ((1, 1),))))
    np.testing.assert_allclose(evaluate(square, z), z**2)
    np.testing.assert_allclose(evaluate(Scale(2j, square), z), 2j * z**2)

    flip = Moebius(0, 1, 1, 0)
    np.testing.assert_allclose(evaluate(Compose(square, flip), z), 1 / z**2)
    assert evaluate(flip, INFINITY) == 0
    assert evaluate(Compose(LaurentPoly(0, ((0, 3), (1, 1))), flip), INFINITY) == 3

    np.testing.assert_allclose(evaluate(combine([2, -1], [Const(1), LaurentPoly(0, ((1, 1),))]), 0.5), 1.5)
    assert evaluate(combine([], []), 0.3) == 0


def test_evaluate_shapes():
    f = LaurentPoly(0, ((2, 1),))
    assert isinstance(evaluate(f, 0.5), complex)
    grid = np.full((2, 3), 0.5 + 0j)
    assert evaluate(f, grid).shape == (2, 3)


def test_poles_and_regions():
    with pytest.raises(PoleHit):
        evaluate(LaurentPoly(0, ((-1, 1),)), 0)
    with pytest.raises(PoleHit):
        evaluate(Moebius(1, 0, 1, -1), 1)
    with pytest.raises(PoleHit):
        evaluate(LaurentPoly(0, ((1, 1),)), INFINITY)
    with pytest.raises(InvalidExpression):
        Moebius(1, 2, 2, 4)
    with pytest.raises(InvalidExpression):
        LaurentPoly(0, ((1, 1), (1, 2)))
    assert LaurentPoly(0, ((2, 1j), (-1, 3))).coefficients == ((-1, 3 + 0j), (2, 1j))

    bounded = OnRegion(LaurentPoly(0, ((1, 1),)), unit_disc_region())
    np.testing.assert_allclose(evaluate(bounded, 1.0), 1.0)
    with pytest.raises(OutsideRegion):
        evaluate(bounded, 2.0)
    with pytest.raises(OutsideRegion):
        evaluate(bounded, INFINITY)
