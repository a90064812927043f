#         Python H_Phi Embedding Library
#      Released under the MIT license
#

"""
Independent verification of the embedding norm. Everything here is computed
from weight evaluations and Gaussian integrals only; neither A_Phi nor its
spectrum is consulted, so an error in the spectral route cannot be hidden by
the same error on this side.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from ..Integrators.ClosedForm import ClosedForm
from ..Integrators.Integrator import GaussianIntegrand, IntegratorError
from ..Integrators.IntegratorManager import IntegratorManager
from ..Integrators.Quadrature import Quadrature
from ..LinearAlgebra import Dense
from ..Metaplectic.GaussianPacket import GaussianPacket
from ..Metaplectic.Norms import hphi_integrand, hphi_norm, real_to_complex
from ..Tolerances import Defaults
from ..Weights.QuadraticWeight import QuadraticWeight, WeightError


@dataclass(frozen=True)
class RatioSample:
    """
    Norm ratio ||g_T||_H_Phi2 / ||g_T||_H_Phi1 of one centred Gaussian.
    ``ratio`` is None unless g_T lies in both spaces.
    """

    T: np.ndarray
    ratio: float
    in_space1: bool
    in_space2: bool


def ratio(T, weight1, weight2):
    """
    Norm ratio of the Gaussian g_T between two weighted spaces.

    :param array_like T: Symmetric n x n matrix.
    :param QuadraticWeight weight1: Source weight Phi1.
    :param QuadraticWeight weight2: Target weight Phi2.

    :rtype: RatioSample
    """
    packet = GaussianPacket(T)

    norm1 = hphi_norm(packet, weight1)
    norm2 = hphi_norm(packet, weight2)

    value = None
    if norm1 is not None and norm2 is not None:
        value = norm2 / norm1

    return RatioSample(T=np.array(packet.T), ratio=value, in_space1=norm1 is not None, in_space2=norm2 is not None)


def _modulus_sampler(packet, weight):
    L = np.array(weight.L)
    P = np.array(weight.P)

    def sample(points):
        x = real_to_complex(points)
        phi = 0.5 * np.einsum('ki,ij,kj->k', x.conj(), L, x).real + 0.5 * np.einsum('ki,ij,kj->k', x, P, x).real
        return np.abs(packet.evaluate(x)) ** 2 * np.exp(-4.0 * np.pi * phi)

    return sample


def quadrature_check(packet, weight, order=Defaults.QUADRATURE_ORDER, min_margin=1e-3):
    """
    Squared H_Phi norm of a packet by Gauss-Hermite quadrature of
    |f|^2 exp(-4 pi Phi) over R^2n, next to its closed form.

    :param GaussianPacket packet: Packet with n <= 2.
    :param QuadraticWeight weight: Weight Phi.
    :param int order: Quadrature nodes per real axis.
    :param float min_margin: Least decay eigenvalue the grid accepts.

    :rtype: (float, float, float)
    :return: The numeric value, the closed form and their relative error.
    """
    if packet.n > 2:
        raise IntegratorError("Quadrature cross-check supports n <= 2, got n = {}.".format(packet.n))

    exponent = hphi_integrand(packet, packet, weight)
    sampled = GaussianIntegrand(exponent.A, exponent.b, exponent.c, exponent.prefactor, sampler=_modulus_sampler(packet, weight))

    closed = IntegratorManager(ClosedForm.NAME).integrate(exponent)
    if not closed.in_space:
        raise IntegratorError("Packet is not in H_Phi (decay margin {:.3e}).".format(closed.min_eigenvalue))

    numeric = IntegratorManager(Quadrature.NAME, order=order, min_margin=min_margin).integrate(sampled)

    numeric_value = float(numeric.value.real)
    closed_value = float(closed.value.real)
    rel_err = abs(numeric_value - closed_value) / abs(closed_value)

    logging.debug("Quadrature %.15g against closed form %.15g (relative error %.3e)", numeric_value, closed_value, rel_err)

    return numeric_value, closed_value, rel_err


def _anchor(weight1):
    return -1j * np.array(weight1.P)


def _random_symmetric(rng, n, radius=1.5):
    modulus = radius * np.sqrt(rng.uniform(size=(n, n)))
    angle = 2.0 * np.pi * rng.uniform(size=(n, n))
    T = modulus * np.exp(1j * angle)
    return 0.5 * (T + T.T)


def _feasible_draw(rng, weight1, anchor, halvings=60):
    T = _random_symmetric(rng, weight1.n)

    s = 1.0
    for _ in range(halvings):
        candidate = (1.0 - s) * anchor + s * T
        if hphi_norm(GaussianPacket(candidate), weight1) is not None:
            return candidate
        s *= 0.5

    return anchor


def _objective(T, weight1, weight2):
    value = ratio(T, weight1, weight2).ratio
    return -np.inf if value is None else value


def _coordinates(n):
    for i in range(n):
        for j in range(i, n):
            for unit in (1.0, 1j):
                step = np.zeros((n, n), dtype=complex)
                step[i, j] = unit
                step[j, i] = unit
                yield step


def _polish(T, weight1, weight2, width=0.5, rounds=40, rel_tol=1e-13):
    best = _objective(T, weight1, weight2)

    for _ in range(rounds):
        start = best

        for step in _coordinates(T.shape[0]):
            def negated(t, step=step):
                value = _objective(T + t * step, weight1, weight2)
                return np.inf if not np.isfinite(value) else -value

            found = minimize_scalar(negated, bounds=(-width, width), method='bounded', options={'xatol': 1e-12})
            if np.isfinite(found.fun) and -found.fun > best:
                best = -found.fun
                T = T + found.x * step

        if best - start <= rel_tol * best:
            width *= 0.5
            if width < 1e-9:
                break

    return best, T


def random_search_norm(weight1, weight2, trials=Defaults.TRIALS, seed=Defaults.SEED):
    """
    Lower estimate of the embedding norm by maximizing the norm ratio over
    random centred Gaussians, followed by a coordinate-wise polish of the best
    one. Trial k draws from its own generator seeded with seed + k, so the
    result does not depend on the order in which trials run.

    :param QuadraticWeight weight1: Source weight Phi1.
    :param QuadraticWeight weight2: Target weight Phi2.
    :param int trials: Number of random Gaussians.
    :param int seed: Base seed.

    :rtype: (float, numpy.ndarray)
    :return: The best ratio found and its Gaussian matrix T, or (None, None)
             when no sampled Gaussian lies in both spaces.
    """
    anchor = _anchor(weight1)

    best_ratio, best_T = None, None
    for k in range(trials):
        rng = np.random.default_rng(seed + k)
        T = _feasible_draw(rng, weight1, anchor)

        value = ratio(T, weight1, weight2).ratio
        if value is not None and (best_ratio is None or value > best_ratio):
            best_ratio, best_T = value, T

    if best_ratio is None:
        logging.warning("No sampled Gaussian lies in both spaces after %d trials", trials)
        return None, None

    logging.debug("Best sampled ratio %.15g, polishing", best_ratio)
    best_ratio, best_T = _polish(best_T, weight1, weight2)

    logging.info("Random search over %d trials (seed %d) reached %.15g", trials, seed, best_ratio)
    return float(best_ratio), best_T


@dataclass(frozen=True)
class DeltaSample:
    delta: float
    closed_form: float
    integral: float


def delta_sequence(a, b, deltas=(0.5, 0.9, 0.99), rel_tol=1e-9):
    """
    Norm ratios of the Gaussians g_(delta tau), tau = i b / |b|, between
    Phi0 and the boundary weight 1/2 a |x|^2 + 1/2 Re(b x^2) with
    a - |b| = 1. The closed form ((2a + delta - 1) / (1 + delta))^(-1/4) tends
    to the norm a^(-1/4) as delta -> 1.

    :param float a: Levi coefficient, a > 1.
    :param complex b: Pluriharmonic coefficient with |b| = a - 1.
    :param deltas: Values in [0, 1).

    :rtype: list(DeltaSample)
    """
    b = complex(b)
    if a <= 1 or abs(abs(b) - (a - 1)) > rel_tol * a:
        raise WeightError("Weight (a = {}, b = {}) is not on the boundary a - |b| = 1.".format(a, b))

    weight1 = QuadraticWeight.standard(1)
    weight2 = QuadraticWeight.scalar(a, b)
    tau = 1j * b / abs(b)

    samples = []
    for delta in deltas:
        if not 0 <= delta < 1:
            raise WeightError("delta must lie in [0, 1), got {}.".format(delta))

        closed_form = ((2.0 * a + delta - 1.0) / (1.0 + delta)) ** -0.25
        integral = ratio(Dense.as_complex_matrix([[delta * tau]]), weight1, weight2).ratio

        samples.append(DeltaSample(delta=float(delta), closed_form=float(closed_form), integral=integral))

    return samples
