#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from conftest import anchored_T, random_complex, random_hermitian_pd, random_symmetric, random_weight
from HPhiEmbedding.Metaplectic import MetaplecticWord as Words
from HPhiEmbedding.Metaplectic.GaussianPacket import (GaussianPacket, MetaplecticError, NotInSpaceError, apply_shift,
                                                      shift_compose, shift_function)
from HPhiEmbedding.Metaplectic.Norms import (hphi_inner_product, hphi_norm, in_space, l2_inner_product, l2_norm)
from HPhiEmbedding.PhaseSpace import Generators
from HPhiEmbedding.PhaseSpace.CanonicalMap import PhasePoint
from HPhiEmbedding.Weights.QuadraticWeight import QuadraticWeight


seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)
dimensions = st.integers(min_value=1, max_value=3)


def _random_point(rng, n, scale=0.5):
    return PhasePoint(random_complex(rng, n, scale), random_complex(rng, n, scale))


def _relative(a, b):
    return abs(a - b) / max(abs(a), abs(b))


def test_packet_basics():
    packet = GaussianPacket([[1j]])

    assert abs(packet.evaluate([2.0]) - np.exp(-4.0 * np.pi)) <= 1e-15
    assert GaussianPacket.constant(2, 3.0).evaluate([1.0, 1j]) == 3.0

    with pytest.raises(AttributeError):
        packet.amplitude = 2.0

    with pytest.raises(MetaplecticError):
        GaussianPacket([[0.0, 1.0], [0.0, 0.0]])

    with pytest.raises(MetaplecticError):
        GaussianPacket([[1j]], center=PhasePoint.zero(2))


@given(seeds, dimensions)
def test_shift_matches_defining_formula(seed, n):
    rng = np.random.default_rng(seed)
    packet = GaussianPacket(random_symmetric(rng, n), _random_point(rng, n), amplitude=0.5 + 1j)
    Y = _random_point(rng, n)

    shifted = apply_shift(Y, packet)
    reference = shift_function(Y, packet.evaluate)

    for x in random_complex(rng, (4, n)):
        assert _relative(shifted.evaluate(x), reference(x)) <= 1e-10


@given(seeds, dimensions)
def test_shift_composition(seed, n):
    rng = np.random.default_rng(seed)
    packet = GaussianPacket(random_symmetric(rng, n))
    X, Y = _random_point(rng, n), _random_point(rng, n)

    phase, Z = shift_compose(X, Y)
    twice = shift_function(X, shift_function(Y, packet.evaluate))
    once = shift_function(Z, packet.evaluate)

    for x in random_complex(rng, (4, n)):
        assert _relative(twice(x), phase * once(x)) <= 1e-10

    assert apply_shift(X, apply_shift(Y, packet)).same_function(apply_shift(Z, packet).scaled(phase))


@given(seeds, dimensions)
def test_batch_evaluation(seed, n):
    rng = np.random.default_rng(seed)
    packet = GaussianPacket(random_symmetric(rng, n), _random_point(rng, n))
    points = random_complex(rng, (5, n))

    batch = packet.evaluate(points)
    for point, value in zip(points, batch):
        assert _relative(value, packet.evaluate(point)) <= 1e-12


def test_skew_and_scale_atoms():
    T = np.array([[0.2 + 0.5j]])
    packet = GaussianPacket(T)

    result, signs = Words.MetaplecticWord(1, [Words.Skew([[0.1]]), Words.Skew([[0.3j]])]).apply(packet)
    assert_allclose(result.T, T + 0.1 + 0.3j, atol=1e-15)
    assert abs(result.amplitude - 1.0) <= 1e-15
    assert signs == [1, 1]

    result = Words.apply_word(Words.MetaplecticWord(1, [Words.Scale([[2.0]])]), packet)
    assert_allclose(result.T, 4.0 * T, atol=1e-14)
    assert abs(result.amplitude - np.sqrt(2.0)) <= 1e-14


def test_standard_bargmann_atom():
    result = Words.apply_word(Words.MetaplecticWord(1, [Words.Barg0()]), GaussianPacket([[1j]]))

    assert abs(result.T[0, 0]) <= 1e-15
    assert abs(abs(result.amplitude) - 2.0 ** -0.25) <= 1e-14


def test_bargmann_atom_and_inverse_cancel():
    packet = GaussianPacket([[0.3 + 0.8j]], PhasePoint([0.2], [0.1j]), amplitude=2.0)
    word = Words.MetaplecticWord(1, [Words.Barg0(), Words.Barg0Inverse()])

    result, _ = word.apply(packet)
    assert abs(abs(result.amplitude) - 2.0) <= 1e-12
    assert_allclose(result.T, packet.T, atol=1e-12)
    assert result.center.is_close(packet.center)


def test_singular_atom_names_its_position():
    word = Words.MetaplecticWord(1, [Words.Skew([[0.0]]), Words.Barg0()])

    with pytest.raises(MetaplecticError, match="atom 1"):
        word.apply(GaussianPacket([[-1j]]))


def test_word_concatenation():
    first = Words.MetaplecticWord(2, [Words.Barg0()])
    second = first.append(Words.Scalar(2.0))

    assert len(first.atoms) == 1
    assert len(first.then(second).atoms) == 3

    with pytest.raises(MetaplecticError):
        first.then(Words.MetaplecticWord(1))


@given(seeds, dimensions)
def test_bargmann_word_matches_bargmann_map(seed, n):
    rng = np.random.default_rng(seed)
    weight = random_weight(rng, n)

    assert Words.bargmann_word(weight).canonical_map().is_close(Generators.bargmann_map(weight), tol=1e-12)


def test_gaussian_inner_products_on_standard_weight():
    standard = QuadraticWeight.standard(1)

    assert abs(hphi_inner_product(GaussianPacket.constant(), GaussianPacket.constant(), standard).value - 0.5) <= 1e-15
    assert abs(hphi_norm(GaussianPacket([[0.5j]]), standard) ** 2 - 3.0 ** -0.5) <= 1e-14

    assert hphi_norm(GaussianPacket([[1j]]), standard) is None
    assert not in_space(GaussianPacket([[1j]]), standard)

    with pytest.raises(NotInSpaceError):
        hphi_norm(GaussianPacket([[1j]]), standard, strict=True)


def test_l2_norms():
    assert abs(l2_norm(GaussianPacket([[1j]])) - 2.0 ** -0.25) <= 1e-15
    assert l2_norm(GaussianPacket([[1.0]])) is None

    value = l2_inner_product(GaussianPacket([[1j]]), GaussianPacket([[2j]])).value
    assert abs(value - 3.0 ** -0.5) <= 1e-14


@given(seeds, dimensions)
def test_bargmann_transform_is_unitary(seed, n):
    rng = np.random.default_rng(seed)
    weight = random_weight(rng, n)

    imag = random_hermitian_pd(rng, n, floor=0.3).real
    T = random_symmetric(rng, n, 0.5).real + 1j * (imag + imag.T) / 2.0
    packet = GaussianPacket(T, PhasePoint(0.3 * rng.standard_normal(n), 0.3 * rng.standard_normal(n)))

    image = Words.bargmann_transform_gaussian(weight, packet)

    assert _relative(hphi_norm(image, weight), l2_norm(packet)) <= 1e-9


def test_bargmann_transform_of_standard_gaussian():
    image = Words.bargmann_transform_gaussian(QuadraticWeight.standard(1), GaussianPacket([[1j]]))

    assert abs(image.T[0, 0]) <= 1e-15
    assert abs(abs(image.amplitude) - 2.0 ** 0.25) <= 1e-14

    with pytest.raises(MetaplecticError):
        Words.bargmann_transform_gaussian(QuadraticWeight.standard(1), GaussianPacket([[1.0]]))


@given(seeds, dimensions)
def test_skew_multiplication_is_unitary(seed, n):
    rng = np.random.default_rng(seed)
    weight = random_weight(rng, n)
    f = GaussianPacket(anchored_T(rng, weight), _random_point(rng, n))
    T = random_symmetric(rng, n)

    image = Words.apply_word(Words.MetaplecticWord(n, [Words.Skew(T)]), f)

    assert _relative(hphi_norm(image, weight.transform_skew(T)), hphi_norm(f, weight)) <= 1e-9


@given(seeds, dimensions)
def test_scaling_is_unitary(seed, n):
    rng = np.random.default_rng(seed)
    weight = random_weight(rng, n)
    f = GaussianPacket(anchored_T(rng, weight), _random_point(rng, n))
    G = random_complex(rng, (n, n), 0.15) + np.eye(n)

    word = Words.MetaplecticWord(n, [Words.Scale(G), Words.Scalar(Words.unitary_scale_factor(G))])
    image = Words.apply_word(word, f)

    assert _relative(hphi_norm(image, weight.transform_scale(G)), hphi_norm(f, weight)) <= 1e-9


@given(seeds, dimensions)
def test_shift_is_unitary_onto_shifted_weight(seed, n):
    rng = np.random.default_rng(seed)
    weight = random_weight(rng, n)
    f = GaussianPacket(anchored_T(rng, weight), _random_point(rng, n))
    Y = _random_point(rng, n)

    image = apply_shift(Y, f)

    assert _relative(hphi_norm(image, weight.transform_shift(Y)), hphi_norm(f, weight)) <= 1e-9


@given(seeds, dimensions)
def test_shift_adjoint(seed, n):
    rng = np.random.default_rng(seed)
    weight = random_weight(rng, n)
    f = GaussianPacket(anchored_T(rng, weight), _random_point(rng, n, 0.3))
    g = GaussianPacket(anchored_T(rng, weight), _random_point(rng, n, 0.3))
    Y = _random_point(rng, n, 0.3)

    Z = Generators.adjoint_shift_vector(weight, Y)

    left = hphi_inner_product(apply_shift(Y, f), g, weight).value
    right = hphi_inner_product(f, apply_shift(Z, g), weight).value

    assert _relative(left, right) <= 1e-9


def test_products_with_selected_integrator(integrator, integrator_tol):
    standard = QuadraticWeight.standard(1)

    value = hphi_inner_product(GaussianPacket.constant(), GaussianPacket.constant(), standard, integrator).value
    assert abs(value - 0.5) <= integrator_tol
    assert abs(hphi_norm(GaussianPacket([[0.5j]]), standard, integrator=integrator) ** 2 - 3.0 ** -0.5) <= integrator_tol

    value = l2_inner_product(GaussianPacket([[1j]]), GaussianPacket([[2j]]), integrator).value
    assert abs(value - 3.0 ** -0.5) <= integrator_tol


def test_shift_adjoint_with_selected_integrator(integrator, integrator_tol):
    rng = np.random.default_rng(7)

    for _ in range(5):
        weight = random_weight(rng, 1)
        f = GaussianPacket(anchored_T(rng, weight), _random_point(rng, 1, 0.3))
        g = GaussianPacket(anchored_T(rng, weight), _random_point(rng, 1, 0.3))
        Y = _random_point(rng, 1, 0.3)

        Z = Generators.adjoint_shift_vector(weight, Y)

        left = hphi_inner_product(apply_shift(Y, f), g, weight, integrator).value
        right = hphi_inner_product(f, apply_shift(Z, g), weight, integrator).value

        assert _relative(left, right) <= 1e-9 + 2.0 * integrator_tol
        assert _relative(left, hphi_inner_product(apply_shift(Y, f), g, weight).value) <= integrator_tol


@given(seeds, dimensions)
def test_shift_unitary_exactly_on_lambda(seed, n):
    rng = np.random.default_rng(seed)
    weight = random_weight(rng, n)
    f = GaussianPacket(-1j * np.array(weight.P))

    on_manifold = weight.lambda_point(random_complex(rng, n, 0.3))
    assert _relative(hphi_norm(apply_shift(on_manifold, f), weight), hphi_norm(f, weight)) <= 1e-9

    off_manifold = on_manifold * 1j
    assert _relative(hphi_norm(apply_shift(off_manifold, f), weight), hphi_norm(f, weight)) > 1e-6


def test_shift_inverse_and_identity():
    packet = GaussianPacket([[0.2 + 0.7j]], PhasePoint([0.1], [0.3 - 0.2j]), amplitude=1.5j)
    Y = PhasePoint([0.4 + 0.1j], [-0.3j])

    assert apply_shift(PhasePoint.zero(1), packet).same_function(packet)
    assert apply_shift(Y, apply_shift(-Y, packet)).same_function(packet)


def test_empty_word_is_identity():
    packet = GaussianPacket([[0.2 + 0.7j]], PhasePoint([0.1], [0.3]))
    result, signs = Words.MetaplecticWord(1).apply(packet)

    assert result.same_function(packet)
    assert signs == []


@given(seeds, dimensions)
def test_word_intertwines_shifts(seed, n):
    rng = np.random.default_rng(seed)
    weight = random_weight(rng, n)
    word = Words.bargmann_word(weight)

    imag = random_hermitian_pd(rng, n, floor=0.5).real
    f = GaussianPacket(1j * (imag + imag.T) / 2.0, _random_point(rng, n, 0.3))
    Y = _random_point(rng, n, 0.3)

    left = Words.apply_word(word, apply_shift(Y, f))
    right = apply_shift(word.canonical_map().apply(Y), Words.apply_word(word, f))

    assert left.same_function(right)


@given(seeds, dimensions)
def test_concatenated_word_map_is_product(seed, n):
    rng = np.random.default_rng(seed)
    first = Words.MetaplecticWord(n, [Words.Skew(random_symmetric(rng, n)), Words.Barg0()])
    second = Words.MetaplecticWord(n, [Words.Scale(np.eye(n) + random_complex(rng, (n, n), 0.15)), Words.Barg0Inverse()])

    combined = first.then(second).canonical_map()

    assert combined.is_close(second.canonical_map() @ first.canonical_map())
