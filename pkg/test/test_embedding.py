#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import anchored_T, incomparable_pair, random_hermitian_pd, strict_pair
from HPhiEmbedding.Embedding.Embedding import (EmbeddingError, Verdict, embedding_canonical_map, embedding_norm,
                                               embedding_spectrum, epsilon_limit_norm, unboundedness_witness,
                                               witness_gaussian)
from HPhiEmbedding.Metaplectic.Norms import in_space
from HPhiEmbedding.Oracle import Oracle
from HPhiEmbedding.PhaseSpace.CanonicalMap import positivity_defect
from HPhiEmbedding.Weights.Ordering import reduce_to_standard
from HPhiEmbedding.Weights.QuadraticWeight import QuadraticWeight


seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)
dimensions = st.integers(min_value=1, max_value=3)

STANDARD = QuadraticWeight.standard(1)


def closed_form_norm(a, b):
    s = 1.0 + a * a - abs(b) ** 2
    return ((s - math.sqrt(s * s - 4.0 * a * a)) / (2.0 * a * a)) ** 0.25


def closed_form_tau(a, b):
    if b == 0:
        return 0j

    s = 1.0 + a * a - abs(b) ** 2
    return -1j * (1.0 - a * a + abs(b) ** 2 + math.sqrt(s * s - 4.0 * a * a)) / (2.0 * b.conjugate())


def _levi_pair(rng, n):
    L1 = random_hermitian_pd(rng, n)
    return QuadraticWeight(L1), QuadraticWeight(L1 + random_hermitian_pd(rng, n, floor=0.1))


@settings(max_examples=50)
@given(seeds, dimensions)
def test_levi_only_pairs(seed, n):
    rng = np.random.default_rng(seed)
    weight1, weight2 = _levi_pair(rng, n)

    result = embedding_norm(weight1, weight2)
    expected = math.sqrt(np.linalg.det(weight1.L).real / np.linalg.det(weight2.L).real)

    assert result.verdict == Verdict.BOUNDED_STRICT
    assert abs(result.norm - expected) <= 1e-9 * expected
    assert np.max(np.abs(result.witness_T)) <= 1e-8


def test_levi_only_examples():
    result = embedding_norm(STANDARD, QuadraticWeight([[4.0]]))
    assert abs(result.norm - 0.5) <= 1e-12
    assert result.mus == pytest.approx([0.25])

    T = witness_gaussian(QuadraticWeight.standard(2), QuadraticWeight(2.0 * np.eye(2)))
    assert np.max(np.abs(T)) <= 1e-12


def test_scalar_example_values():
    weight = QuadraticWeight.scalar(3.0, 1.0)

    spectrum = embedding_spectrum(STANDARD, weight)
    assert spectrum.mus == pytest.approx([(3.0 - math.sqrt(5.0)) / 2.0], rel=1e-12)

    result = embedding_norm(STANDARD, weight)
    assert result.verdict == Verdict.BOUNDED_STRICT
    assert abs(result.norm - ((9.0 - math.sqrt(45.0)) / 18.0) ** 0.25) <= 1e-12
    assert abs(result.norm - 0.597346) <= 1e-6
    assert abs(complex(result.witness_T[0, 0]) - 0.145898j) <= 1e-6


def test_spectrum_of_separated_levi_pair():
    spectrum = embedding_spectrum(STANDARD, QuadraticWeight.scalar(2.0))

    assert spectrum.mus == pytest.approx([0.5], rel=1e-12)
    assert sorted(spectrum.eigenvalues) == pytest.approx([0.5, 2.0], rel=1e-12)


@pytest.mark.parametrize("a", [1.5, 2.0, 3.0, 5.0])
@pytest.mark.parametrize("modulus", ["zero", "small", "large"])
@pytest.mark.parametrize("phase", [0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0])
def test_scalar_family_grid(a, modulus, phase):
    b = {"zero": 0.0, "small": 0.2, "large": a - 1.2}[modulus] * cmath.exp(1j * phase)

    result = embedding_norm(STANDARD, QuadraticWeight.scalar(a, b))

    expected = closed_form_norm(a, b)
    assert abs(result.norm - expected) <= 1e-9 * expected
    assert abs(complex(result.witness_T[0, 0]) - closed_form_tau(a, b)) <= 1e-8


def test_boundary_case():
    weight = QuadraticWeight.scalar(2.0, 1.0)
    result = embedding_norm(STANDARD, weight)

    assert result.verdict == Verdict.BOUNDED_NONSTRICT
    assert result.witness_T is None
    assert abs(result.norm - 2.0 ** -0.25) <= 1e-9 * 2.0 ** -0.25

    limits = epsilon_limit_norm(STANDARD, weight)
    assert abs(limits[-1] - 2.0 ** -0.25) <= 1e-5
    assert all(later >= earlier - 1e-9 for earlier, later in zip(limits, limits[1:]))

    with pytest.raises(EmbeddingError):
        witness_gaussian(STANDARD, weight)


def test_identical_weights():
    weight = QuadraticWeight([[2.0, 0.5j], [-0.5j, 1.5]], [[0.2, 0.1], [0.1, -0.3j]])
    result = embedding_norm(weight, weight)

    assert result.verdict == Verdict.BOUNDED_NONSTRICT
    assert result.mus == pytest.approx([1.0, 1.0])
    assert abs(result.norm - 1.0) <= 1e-12
    assert abs(epsilon_limit_norm(weight, weight)[-1] - 1.0) <= 1e-5


@settings(max_examples=100)
@given(seeds, dimensions)
def test_spectrum_pairs_reciprocals(seed, n):
    rng = np.random.default_rng(seed)
    weight1, weight2 = strict_pair(rng, n)

    values = np.array(embedding_spectrum(weight1, weight2).eigenvalues)

    assert abs(np.prod(values) - 1.0) <= 1e-8
    assert np.allclose(np.sort(values), np.sort(1.0 / values), rtol=1e-7, atol=0.0)


@settings(max_examples=100)
@given(seeds, dimensions)
def test_strict_pairs_agree_with_oracle(seed, n):
    rng = np.random.default_rng(seed)
    weight1, weight2 = strict_pair(rng, n)

    result = embedding_norm(weight1, weight2)

    assert result.verdict == Verdict.BOUNDED_STRICT
    assert all(mu < 1.0 for mu in result.mus)
    assert np.max(np.abs(result.witness_T - result.witness_T.T)) <= 1e-9

    sample = Oracle.ratio(result.witness_T, weight1, weight2)
    assert abs(sample.ratio - result.norm) <= 1e-8 * result.norm

    # det of the transfer matrix on its stable subspace is the product of the mus
    assert abs(result.diagnostics["stable_norm"] - result.norm) <= 1e-7 * result.norm


@settings(max_examples=20)
@given(seeds, dimensions)
def test_random_gaussians_stay_below_norm(seed, n):
    rng = np.random.default_rng(seed)
    weight1, weight2 = strict_pair(rng, n)
    norm = embedding_norm(weight1, weight2, with_witness=False).norm

    for _ in range(500):
        sample = Oracle.ratio(anchored_T(rng, weight1, radius=rng.uniform(0.0, 0.95)), weight1, weight2)
        assert sample.ratio is not None
        assert sample.ratio <= norm * (1.0 + 1e-8)


@given(seeds, dimensions)
def test_norm_invariant_under_reduction(seed, n):
    rng = np.random.default_rng(seed)
    weight1, weight2 = strict_pair(rng, n)
    reduced, _ = reduce_to_standard(weight1, weight2)

    direct = embedding_norm(weight1, weight2, with_witness=False).norm
    standard = embedding_norm(QuadraticWeight.standard(n), reduced, with_witness=False).norm

    assert abs(direct - standard) <= 1e-9 * direct


@given(seeds, dimensions)
def test_regularized_limit_of_strict_pair(seed, n):
    rng = np.random.default_rng(seed)
    weight1, weight2 = strict_pair(rng, n)

    limits = epsilon_limit_norm(weight1, weight2, eps_ladder=(1e-4, 1e-5, 1e-6))
    norm = embedding_norm(weight1, weight2, with_witness=False).norm

    assert max(limits) - min(limits) <= 1e-4
    assert abs(limits[-1] - norm) <= 1e-5


@pytest.mark.parametrize("weight2", [
    QuadraticWeight.scalar(1.5, 1.0),
    QuadraticWeight.scalar(0.5),
    QuadraticWeight.scalar(1.0, 0.5),
])
def test_unboundedness_witness_examples(weight2):
    assert embedding_norm(STANDARD, weight2).verdict == Verdict.UNBOUNDED

    witness = unboundedness_witness(STANDARD, weight2)

    assert in_space(witness.packet, STANDARD)
    assert not in_space(witness.packet, weight2)
    assert witness.margin1 > 0 >= witness.margin2
    assert abs(abs(witness.x0[0]) - 1.0) <= 1e-12


def test_radial_deficiency_takes_first_rung():
    witness = unboundedness_witness(STANDARD, QuadraticWeight.scalar(0.5))

    assert witness.delta == pytest.approx(0.9)


@settings(max_examples=20)
@given(seeds, dimensions)
def test_unboundedness_witness_random(seed, n):
    rng = np.random.default_rng(seed)
    weight1, weight2 = incomparable_pair(rng, n)

    result = embedding_norm(weight1, weight2)
    assert result.verdict == Verdict.UNBOUNDED
    assert result.norm is None and result.witness_T is None

    witness = unboundedness_witness(weight1, weight2)
    assert in_space(witness.packet, weight1)
    assert not in_space(witness.packet, weight2)


def test_witness_requires_incomparable_pair():
    with pytest.raises(EmbeddingError):
        unboundedness_witness(STANDARD, QuadraticWeight.scalar(3.0, 1.0))

    with pytest.raises(EmbeddingError):
        embedding_spectrum(STANDARD, QuadraticWeight.scalar(1.5, 1.0))

    with pytest.raises(EmbeddingError):
        epsilon_limit_norm(STANDARD, QuadraticWeight.scalar(0.5))


def test_mismatched_dimensions():
    with pytest.raises(EmbeddingError):
        embedding_norm(STANDARD, QuadraticWeight.standard(2))


@given(seeds, dimensions)
def test_canonical_map_of_embedding_is_positive(seed, n):
    rng = np.random.default_rng(seed)
    weight1, weight2 = strict_pair(rng, n)

    assert positivity_defect(embedding_canonical_map(weight1, weight2)) >= -1e-8


def test_canonical_map_of_deficient_pair_is_not_positive():
    assert positivity_defect(embedding_canonical_map(STANDARD, QuadraticWeight.scalar(0.5))) < -0.1
