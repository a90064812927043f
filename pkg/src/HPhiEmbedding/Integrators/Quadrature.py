#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import logging

import numpy as np
from numpy.polynomial.hermite import hermgauss

from ..Tolerances import Defaults
from .Integrator import GaussianIntegral, Integrator, IntegratorError


class Quadrature(Integrator):
    """
    Tensor-product Gauss-Hermite quadrature in the principal-axis frame of the
    decay form, centred on the peak of the integrand modulus. The integrand is
    sampled pointwise, so the result is independent of any closed form.
    """

    NAME = "quadrature"

    MAX_DIMENSION = 4

    def __init__(self, order=Defaults.QUADRATURE_ORDER, min_margin=1e-3):
        self.order = int(order)
        self.min_margin = min_margin

        if self.order < 2:
            raise IntegratorError("Quadrature order must be at least 2, got {}.".format(order))

    @staticmethod
    def probe():
        nodes, _ = hermgauss(2)
        if len(nodes) != 2:
            raise IntegratorError("Gauss-Hermite rule is unavailable.")

    def _frame(self, integrand):
        decay = integrand.decay_form()
        values, axes = np.linalg.eigh(decay)

        if values[0] <= self.min_margin:
            raise IntegratorError("Insufficient decay for quadrature (margin {:.3e} <= {:.1e}).".format(values[0], self.min_margin))

        centre = np.linalg.solve(decay, integrand.b.real)
        spreads = np.sqrt(2.0 / (np.pi * values))

        return centre, axes * spreads

    def integrate(self, integrand):
        d = integrand.dimension
        if d > self.MAX_DIMENSION:
            raise IntegratorError("Quadrature supports at most {} real dimensions, got {}.".format(self.MAX_DIMENSION, d))

        margin = integrand.decay_margin()
        centre, frame = self._frame(integrand)

        nodes, weights = hermgauss(self.order)
        weights = weights * np.exp(nodes ** 2)
        jacobian = abs(np.linalg.det(frame))

        logging.debug("Quadrature over %d dimensions with %d nodes per axis", d, self.order)

        inner = d - 1
        if inner:
            inner_nodes = np.stack(np.meshgrid(*([nodes] * inner), indexing='ij'), axis=-1).reshape(-1, inner)
            inner_weights = np.prod(np.stack(np.meshgrid(*([weights] * inner), indexing='ij'), axis=-1).reshape(-1, inner), axis=1)
        else:
            inner_nodes = np.zeros((1, 0))
            inner_weights = np.ones(1)

        total = 0.0 + 0.0j
        for node, weight in zip(nodes, weights):
            u = np.hstack([np.full((len(inner_nodes), 1), node), inner_nodes])
            points = centre + u @ frame.T
            total += weight * np.dot(inner_weights, integrand.sample(points))

        return GaussianIntegral(value=complex(total * jacobian), in_space=True, min_eigenvalue=margin)
