#         Python H_Phi Embedding Library
#      Released under the MIT license
#

from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from ..LinearAlgebra import Dense
from ..Tolerances import Tolerances


class IntegratorError(Exception):
    """
    Exception thrown when a Gaussian integral cannot be evaluated by the
    selected back-end (for example, when a quadrature grid is requested for an
    integrand without enough decay).
    """

    pass


class GaussianIntegrand:
    """
    An integrand exp(-pi v . A v + 2 pi b . v + c) on R^d, with A complex
    symmetric and b complex. An optional ``sampler`` evaluates the integrand
    from first principles on a batch of points (rows of a d-column array);
    back-ends that sample the integrand use it in place of the exponent.
    """

    def __init__(self, A, b, c=0.0, prefactor=1.0, sampler=None):
        self.A = Dense.as_complex_matrix(A)
        self.b = Dense.as_complex_vector(b, self.A.shape[0])
        self.c = complex(c)
        self.prefactor = complex(prefactor)
        self.sampler = sampler

    @property
    def dimension(self):
        return self.A.shape[0]

    def decay_form(self):
        """
        Real symmetric part Re A governing the decay of the integrand.

        :rtype: numpy.ndarray
        """
        real_part = self.A.real
        return 0.5 * (real_part + real_part.T)

    def decay_margin(self):
        """
        Least eigenvalue of the decay form.

        :rtype: float
        """
        return float(np.linalg.eigvalsh(self.decay_form())[0])

    def decay_scale(self):
        return 1.0 + float(np.linalg.norm(self.A, 2))

    def is_integrable(self, rel_tol=Tolerances.INTEGRABLE_REL):
        return self.decay_margin() > rel_tol * self.decay_scale()

    def sample(self, points):
        """
        Evaluates the integrand on a batch of points.

        :param numpy.ndarray points: Array of shape (count, d).

        :rtype: numpy.ndarray
        """
        if self.sampler is not None:
            return self.sampler(points)

        quadratic = np.einsum('ki,ij,kj->k', points, self.A, points)
        return self.prefactor * np.exp(-np.pi * quadratic + 2.0 * np.pi * points @ self.b + self.c)


@dataclass(frozen=True)
class GaussianIntegral:
    """
    Result of a Gaussian integration. ``value`` is None when the integrand does
    not decay, in which case ``in_space`` is False and ``min_eigenvalue`` is the
    offending least eigenvalue of the decay form.
    """

    value: complex
    in_space: bool
    min_eigenvalue: float


class Integrator(ABC):
    """
    Base integration back-end, evaluating integrals of Gaussian type over real
    Euclidean space.
    """

    NAME = ""

    @staticmethod
    @abstractmethod
    def probe():
        """
        Attempts to determine if the back-end is usable, raising an
        :class:`IntegratorError` if it is not.
        """
        pass

    @abstractmethod
    def integrate(self, integrand):
        """
        Integrates a Gaussian integrand over R^d.

        :param GaussianIntegrand integrand: The integrand.

        :rtype: GaussianIntegral
        :return: The integral, or a not-in-space marker if the integrand does
                 not decay.
        """
        pass

    def name(self):
        return self.NAME
