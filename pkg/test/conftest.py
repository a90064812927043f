#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import os
import sys

import numpy as np
import pytest
from hypothesis import settings

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '../src'))

from HPhiEmbedding.Integrators.IntegratorManager import IntegratorManager  # noqa: E402
from HPhiEmbedding.Tolerances import Defaults  # noqa: E402
from HPhiEmbedding.Weights.QuadraticWeight import QuadraticWeight  # noqa: E402


settings.register_profile("default", deadline=None, max_examples=25, derandomize=True)
settings.load_profile("default")

# Relative accuracy expected of each back-end on well-decaying low dimensional integrals.
INTEGRATOR_TOLERANCE = {
    "closed-form": 1e-12,
    "quadrature": 1e-6,
}


@pytest.fixture
def integrator():
    """
    Integration back-end chosen with `test.py --integrator`, auto-probed when
    the tests are run directly.
    """
    return IntegratorManager(os.environ.get(Defaults.INTEGRATOR_ENV) or None)


@pytest.fixture
def integrator_tol(integrator):
    return INTEGRATOR_TOLERANCE[integrator.integrator.name()]


def random_complex(rng, shape, scale=1.0):
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def random_symmetric(rng, n, norm=1.0):
    """
    Complex symmetric matrix with spectral norm ``norm``.
    """
    S = random_complex(rng, (n, n))
    S = 0.5 * (S + S.T)
    return norm * S / np.linalg.norm(S, 2)


def random_hermitian_pd(rng, n, floor=1.0, spread=1.0):
    """
    Hermitian matrix with every eigenvalue at least ``floor``.
    """
    A = random_complex(rng, (n, n), spread / np.sqrt(2 * n))
    return floor * np.eye(n) + A @ A.conj().T


def random_weight(rng, n, p_norm=0.5):
    """
    Weight with L >= 1 and |P| = p_norm, so that g_T lies in H_Phi whenever
    |T + iP| < 1.
    """
    return QuadraticWeight(random_hermitian_pd(rng, n), random_symmetric(rng, n, p_norm))


def strict_pair(rng, n, gap=0.3):
    """
    Weights Phi1 < Phi2: Phi2 = Phi1 plus a weight whose real form is
    positive definite with margin at least ``gap``.
    """
    weight1 = random_weight(rng, n)

    extra_L = random_hermitian_pd(rng, n, floor=2.0 * gap + 0.5)
    extra_P = random_symmetric(rng, n, 0.5)
    return weight1, QuadraticWeight(weight1.L + extra_L, weight1.P + extra_P)


def incomparable_pair(rng, n):
    """
    Weights with Phi2 - Phi1 negative in some direction.
    """
    weight1 = random_weight(rng, n)
    return weight1, QuadraticWeight(0.5 * np.array(weight1.L), weight1.P + random_symmetric(rng, n, 0.3))


def anchored_T(rng, weight, radius=0.3):
    """
    Gaussian matrix T = -iP + S with |S| = radius, whose Gaussian lies in
    H_Phi when L >= 1.
    """
    return -1j * np.array(weight.P) + random_symmetric(rng, weight.n, radius)


def misaligned_unitary():
    """
    Unitary U = [u, w] whose first column is parallel to (1, 1 + i/2), the
    start vector of the power iteration in two dimensions.
    """
    u = np.array([1.0, 1.0 + 0.5j])
    u = u / np.linalg.norm(u)
    w = np.array([-np.conj(u[1]), np.conj(u[0])])
    return np.column_stack([u, w])


def misaligned_incomparable_pair():
    """
    Phi0 against L = 2, P = conj(U) diag(0.5, 1.5) U*: the reduced
    pluriharmonic matrix has norm 1.5, attained off the power iteration
    start vector, and the pair is incomparable with margin -0.5.
    """
    U = misaligned_unitary()
    P = U.conj() @ np.diag([0.5, 1.5]) @ U.conj().T
    return QuadraticWeight.standard(2), QuadraticWeight(2.0 * np.eye(2), P)
