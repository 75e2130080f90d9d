import numpy as np
import pytest

from holoextend.errors import HypothesisViolated, InvalidMeasure, TruncationInsufficient, WrongSupport
from holoextend.holomorphic import Const, FourierSeq, LaurentPoly, evaluate
from holoextend.measures import (
    AnnulusMeasure,
    CircleMeasure,
    Side,
    analytic_density,
    arc_variation_probe,
    coefficient_bound_margin,
    decompose,
    fourier_coefficient,
    fourier_sequence,
    measure_from_sequence,
    riesz_hypothesis_defect,
)

R0 = 0.5


def coefficients(m, J=6):
    return np.array([fourier_coefficient(m, j) for j in range(-J, J + 1)])


def test_fourier_coefficients():
    atom = CircleMeasure.on_radius(R0, [(0.0, 1)])
    for j in range(-4, 5):
        np.testing.assert_allclose(fourier_coefficient(atom, j), R0 ** (-j))

    sigma = CircleMeasure.on_radius(1.0, density={0: 1})
    expected = np.zeros(13)
    expected[6] = 1
    np.testing.assert_allclose(coefficients(sigma), expected)

    z_sigma = CircleMeasure.on_radius(1.0, density={1: 1})
    assert fourier_coefficient(z_sigma, 1) == 1
    assert fourier_coefficient(z_sigma, 0) == 0

    seq = fourier_sequence(z_sigma, 3)
    assert seq.support() == [1]


def test_coefficient_bound_margin():
    atom = CircleMeasure.on_radius(R0, [(0.0, 1)])
    for j in (-3, 0, 2):
        assert abs(coefficient_bound_margin(atom, j)) < 1e-12 * R0 ** (-j)
    sigma = CircleMeasure.on_radius(1.0, density={0: 1})
    assert coefficient_bound_margin(sigma, 5) == 1
    mixed = CircleMeasure.on_radius(1.0, density={0: 1, 1: 0.5})
    np.testing.assert_allclose(coefficient_bound_margin(mixed, 1), 1.0)


def test_measure_arithmetic():
    a = CircleMeasure.on_radius(1.0, [(0.0, 1), (np.pi, 2j)], {2: 1})
    b = CircleMeasure.on_radius(1.0, [(0.0, -1)], {2: -1, 3: 4})
    total = a + b
    assert total.atoms == ((float(np.pi), 2j),)
    assert total.density == ((3, 4 + 0j),)
    assert (a - a).is_zero()
    with pytest.raises(InvalidMeasure):
        a + CircleMeasure.on_radius(R0)
    with pytest.raises(InvalidMeasure):
        CircleMeasure.on_radius(1.0, [(0.0, 1), (2 * np.pi, 1)])
    with pytest.raises(InvalidMeasure):
        CircleMeasure.on_radius(1.0, [(1.0, 1), (1.0, 2j)])


def test_hypothesis_defect():
    outer = CircleMeasure.on_radius(1.0, density={1: 1})
    inner = CircleMeasure.on_radius(R0, density={1: -R0})
    assert riesz_hypothesis_defect(AnnulusMeasure(inner, outer, R0), 8) < 1e-12

    same = AnnulusMeasure(CircleMeasure.on_radius(R0, density={0: 1}), CircleMeasure.on_radius(1.0, density={0: 1}), R0)
    np.testing.assert_allclose(riesz_hypothesis_defect(same, 4), 2)

    zero = AnnulusMeasure(CircleMeasure.zero(R0), CircleMeasure.zero(1.0), R0)
    assert riesz_hypothesis_defect(zero, 4) == 0


def test_annulus_measure_validation():
    with pytest.raises(InvalidMeasure):
        AnnulusMeasure(CircleMeasure.zero(R0), CircleMeasure.zero(1.0), 1.2)
    with pytest.raises(InvalidMeasure):
        AnnulusMeasure(CircleMeasure.zero(0.4), CircleMeasure.zero(1.0), R0)


def test_decompose_analytic_measure():
    outer = CircleMeasure.on_radius(1.0, density={1: 1})
    inner = CircleMeasure.on_radius(R0, density={1: -R0})
    result = decompose(AnnulusMeasure(inner, outer, R0), 8)

    np.testing.assert_allclose(coefficients(result.lambda0), coefficients(inner), atol=1e-14)
    assert result.eta0.is_zero(1e-14)
    assert result.eta1.is_zero(1e-14)
    np.testing.assert_allclose(coefficients(result.lambda1), coefficients(outer), atol=1e-14)


def test_decompose_negative_indices():
    outer = CircleMeasure.on_radius(1.0, density={-2: 1})
    inner = CircleMeasure.on_radius(R0, density={-2: -(R0**-2)})
    result = decompose(AnnulusMeasure(inner, outer, R0), 8)

    assert result.lambda0.is_zero(1e-14)
    np.testing.assert_allclose(coefficients(result.eta0), coefficients(inner), atol=1e-12)
    np.testing.assert_allclose(coefficients(result.eta1), coefficients(outer), atol=1e-14)
    assert result.lambda1.is_zero(1e-14)


def test_decompose_zero_and_violations():
    zero = decompose(AnnulusMeasure(CircleMeasure.zero(R0), CircleMeasure.zero(1.0), R0), 4)
    for piece in (zero.lambda0, zero.eta0, zero.eta1, zero.lambda1):
        assert piece.is_zero()
    assert zero.defect == 0

    same = AnnulusMeasure(CircleMeasure.on_radius(R0, density={0: 1}), CircleMeasure.on_radius(1.0, density={0: 1}), R0)
    with pytest.raises(HypothesisViolated):
        decompose(same, 4)

    wide = AnnulusMeasure(CircleMeasure.zero(R0), CircleMeasure.on_radius(1.0, density={9: 1}), R0)
    with pytest.raises(TruncationInsufficient):
        decompose(wide, 4)


def test_decompose_pieces_are_one_sided(rng):
    J = 6
    outer_density = {j: complex(*rng.normal(size=2)) for j in range(-J, J + 1)}
    inner_density = {j: -(R0**j) * v for j, v in outer_density.items()}
    m = AnnulusMeasure(CircleMeasure.on_radius(R0, density=inner_density), CircleMeasure.on_radius(1.0, density=outer_density), R0)
    result = decompose(m, J)

    for j in range(1, J + 1):
        assert abs(fourier_coefficient(result.eta0, j)) < 1e-12
        assert abs(fourier_coefficient(result.lambda1, -j)) < 1e-12
    for j in range(-J, J + 1):
        np.testing.assert_allclose(
            fourier_coefficient(result.lambda0, j) + fourier_coefficient(result.eta0, j),
            fourier_coefficient(m.inner, j),
            atol=1e-10,
        )


def test_analytic_density():
    assert analytic_density(FourierSeq(2, {0: 1}), Side.NONNEG) == Const(1)

    poly = analytic_density(FourierSeq(3, {1: 2, 3: -1}), Side.NONNEG)
    z = np.array([0.3, 0.5j])
    np.testing.assert_allclose(evaluate(poly, z), 2 * z - z**3)

    inverse = analytic_density(FourierSeq(1, {-1: 1}), "nonpos")
    assert isinstance(inverse, LaurentPoly)
    np.testing.assert_allclose(evaluate(inverse, 0.25), 4)

    with pytest.raises(WrongSupport):
        analytic_density(FourierSeq(1, {-1: 1}), Side.NONNEG)


def test_arc_variation_probe():
    sigma = CircleMeasure.on_radius(1.0, density={0: 1})
    np.testing.assert_allclose(arc_variation_probe(sigma, 1.3, 0.2), 0.2 / np.pi)

    atom = CircleMeasure.on_radius(1.0, [(0.0, 1)])
    for width in (0.5, 0.01):
        assert arc_variation_probe(atom, 0.0, width) == 1

    z_sigma = CircleMeasure.on_radius(1.0, density={1: 1})
    np.testing.assert_allclose(arc_variation_probe(z_sigma, 0.0, 0.4), np.sin(0.4) / np.pi)


def test_decomposed_pieces_have_no_atoms_on_small_arcs():
    J = 4
    outer = CircleMeasure.on_radius(1.0, density={-1: 0.5, 0: 1, 2: 0.25j})
    inner = CircleMeasure.on_radius(R0, density={j: -(R0**j) * v for j, v in outer.density})
    result = decompose(AnnulusMeasure(inner, outer, R0), J)

    for piece in (result.lambda0, result.eta0, result.eta1, result.lambda1):
        if piece.is_zero(1e-14):
            continue
        masses = [abs(arc_variation_probe(piece, 0.3, w)) for w in (0.1, 0.01, 0.001)]
        assert masses[2] < 1e-2
        for wide, narrow in zip(masses, masses[1:]):
            if narrow > 1e-14:
                assert 8 <= wide / narrow <= 12


# =============================================================================
# Randomized suites
# =============================================================================


def random_complex(rng, size):
    return rng.normal(size=size) + 1j * rng.normal(size=size)


def random_measure(rng, radius, max_atoms=5, max_index=10):
    n_atoms = int(rng.integers(0, max_atoms + 1))
    angles = rng.choice(360, size=n_atoms, replace=False) * (2 * np.pi / 360)
    indices = rng.choice(np.arange(-max_index, max_index + 1), size=int(rng.integers(0, 6)), replace=False)
    return CircleMeasure.on_radius(
        radius,
        list(zip(angles, random_complex(rng, n_atoms))),
        dict(zip(indices.tolist(), random_complex(rng, indices.size))),
    )


def random_annulus_measure(rng, r0, max_index=32):
    """Density-only measure with mu0_j = -mu1_j and both signs of index present."""
    indices = {int(rng.integers(1, max_index + 1)), -int(rng.integers(1, max_index + 1))}
    indices |= set(rng.choice(np.arange(-max_index, max_index + 1), size=4, replace=False).tolist())
    outer = dict(zip(sorted(indices), random_complex(rng, len(indices))))
    inner = {k: -(r0**k) * v for k, v in outer.items()}
    return AnnulusMeasure(CircleMeasure.on_radius(r0, density=inner), CircleMeasure.on_radius(1.0, density=outer), r0)


def test_coefficient_bound_on_random_measures(rng):
    for trial in range(200):
        m = random_measure(rng, (0.3, 0.5, 1.0)[trial % 3])
        margins = [coefficient_bound_margin(m, j) for j in range(-50, 51)]
        assert min(margins) >= -1e-12


def test_decomposition_of_random_measures(rng):
    J = 64
    for trial in range(50):
        r0 = (0.3, 0.6)[trial % 2]
        m = random_annulus_measure(rng, r0)
        parts = decompose(m, J)

        for j in range(-J, J + 1):
            inner = fourier_coefficient(parts.lambda0, j) + fourier_coefficient(parts.eta0, j)
            outer = fourier_coefficient(parts.eta1, j) + fourier_coefficient(parts.lambda1, j)
            assert abs(inner - fourier_coefficient(m.inner, j)) < 1e-10
            assert abs(outer - fourier_coefficient(m.outer, j)) < 1e-10
        for j in range(1, J + 1):
            assert abs(fourier_coefficient(parts.eta0, j)) < 1e-12
            assert abs(fourier_coefficient(parts.lambda1, -j)) < 1e-12

        for piece in (parts.lambda0, parts.eta0, parts.eta1, parts.lambda1):
            assert not piece.is_zero()
            ratio = abs(arc_variation_probe(piece, 0.7, 1e-3)) / abs(arc_variation_probe(piece, 0.7, 1e-4))
            assert 8 <= ratio <= 12


def test_sequence_determines_density_measure(rng):
    J = 12
    for radius in (0.3, 1.0):
        indices = rng.choice(np.arange(-J, J + 1), size=5, replace=False)
        m = CircleMeasure.on_radius(radius, density=dict(zip(indices.tolist(), random_complex(rng, 5))))
        back = measure_from_sequence(fourier_sequence(m, J), radius)
        for k in range(-J, J + 1):
            np.testing.assert_allclose(back.density_dict.get(k, 0), m.density_dict.get(k, 0), rtol=1e-12)

    assert measure_from_sequence(FourierSeq(J), 0.5).is_zero()
    assert measure_from_sequence(fourier_sequence(CircleMeasure.zero(0.5), J), 0.5).is_zero()


def test_distinct_density_measures_have_distinct_sequences(rng):
    J = 16
    for _ in range(50):
        radius = rng.uniform(0.2, 1.0)
        first, second = (
            dict(zip(rng.choice(np.arange(-J, J + 1), size=3, replace=False).tolist(), random_complex(rng, 3)))
            for _ in range(2)
        )
        a = CircleMeasure.on_radius(radius, density=first)
        b = CircleMeasure.on_radius(radius, density=second)
        assert fourier_sequence(a, J).max_abs_difference(fourier_sequence(b, J)) > 0
        assert any(abs(fourier_coefficient(a, j)) > 0 for j in range(-J, J + 1))
