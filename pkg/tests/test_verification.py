from dataclasses import dataclass

import numpy as np
import pytest

from holoextend.errors import RegionViolation
from holoextend.geometry import UNIT_CIRCLE, Circle
from holoextend.holomorphic import (
    Const,
    DiscPeak,
    FourierSeq,
    HoloFunction,
    LaurentPoly,
    OnRegion,
    holomorphy_residual,
    laurent_coeffs,
    sup_on_circle,
)
from holoextend.conformal import unit_disc_region


@dataclass(frozen=True)
class Conjugate(HoloFunction):
    """z -> conj(z); not holomorphic anywhere."""

    kind = "conjugate"

    def evaluate_many(self, z):
        return np.conj(z)


def test_laurent_coeffs():
    coeffs = laurent_coeffs(Const(1), UNIT_CIRCLE, 8)
    expected = np.zeros(17, dtype=complex)
    expected[8] = 1
    np.testing.assert_allclose(coeffs.as_array(), expected, atol=1e-12)

    coeffs = laurent_coeffs(LaurentPoly(0, ((3, 2 + 1j),)), UNIT_CIRCLE, 8, 64)
    assert abs(coeffs[3] - (2 + 1j)) < 1e-12
    assert max(abs(coeffs[j]) for j in coeffs.indices if j != 3) < 1e-12

    coeffs = laurent_coeffs(DiscPeak(1, UNIT_CIRCLE, 1), UNIT_CIRCLE, 4)
    np.testing.assert_allclose([coeffs[0], coeffs[1]], [0.5, 0.5], atol=1e-12)


def test_laurent_coeffs_rejects_short_ffts():
    with pytest.raises(ValueError):
        laurent_coeffs(Const(1), UNIT_CIRCLE, 8, 16)
    with pytest.raises(ValueError):
        laurent_coeffs(Const(1), UNIT_CIRCLE, 8, 48)


def test_fourier_seq():
    seq = FourierSeq(2, {1: 2, -2: 1j})
    assert seq[0] == 0
    assert seq[1] == 2
    assert seq.support() == [-2, 1]
    assert seq.max_abs_difference(FourierSeq(3, {1: 2})) == 1
    with pytest.raises(ValueError):
        FourierSeq(1, {2: 1})


def test_sup_on_circle():
    assert sup_on_circle(Const(3), Circle(1j, 0.2)) == 3
    np.testing.assert_allclose(sup_on_circle(LaurentPoly(0, ((1, 1),)), Circle(0, 2)), 2)
    peak_sup = sup_on_circle(DiscPeak(1, UNIT_CIRCLE, 50), UNIT_CIRCLE, 4096)
    assert 1 - 1e-9 <= peak_sup <= 1


def test_holomorphy_residual():
    assert holomorphy_residual(LaurentPoly(0, ((-1, 1),)), 0, 0.5, 0.9, 16) < 1e-12

    residual = holomorphy_residual(Conjugate(), 0, 0.5, 0.9, 16)
    np.testing.assert_allclose(residual, 0.9**2 - 0.5**2, rtol=1e-9)

    peaks = OnRegion(DiscPeak(1, UNIT_CIRCLE, 12), unit_disc_region())
    assert holomorphy_residual(peaks, 0, 0.5, 0.9, 32) < 1e-9


def test_holomorphy_residual_stays_in_region():
    bounded = OnRegion(LaurentPoly(0, ((1, 1),)), unit_disc_region())
    with pytest.raises(RegionViolation):
        holomorphy_residual(bounded, 0, 0.5, 1.5, 8)
    with pytest.raises(RegionViolation):
        holomorphy_residual(bounded, 0, 0.9, 0.5, 8)
