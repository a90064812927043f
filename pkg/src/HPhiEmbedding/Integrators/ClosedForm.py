#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import numpy as np
import scipy.linalg

from ..Tolerances import Tolerances
from .Integrator import GaussianIntegral, Integrator, IntegratorError


def principal_inverse_sqrt_det(A, det_tol=1e-10):
    """
    det(A)^(-1/2) as the product of the principal inverse square roots of the
    eigenvalues of A. On matrices with positive definite real part every
    eigenvalue lies in the right half plane, and this is the analytic branch
    that is positive on real positive definite matrices.

    The eigenvalues come straight from LAPACK, not from the library's own
    eigen-solver, and their product is checked against an LU determinant to
    det_tol |A|^d, the accuracy both reach on an ill-conditioned A.

    :param array_like A: Square complex matrix.
    :param float det_tol: Admitted disagreement of the two determinants,
                          relative to |A|^d.

    :rtype: complex
    """
    A = np.asarray(A, dtype=complex)

    values = scipy.linalg.eigvals(A, check_finite=True)
    product = complex(np.prod(values))
    determinant = complex(scipy.linalg.det(A, check_finite=False))

    scale = np.linalg.norm(A, 2) ** A.shape[0]
    if abs(product - determinant) > det_tol * max(scale, np.finfo(float).tiny):
        raise IntegratorError("Eigenvalue product {} disagrees with the determinant {}.".format(product, determinant))

    return complex(np.prod(1.0 / np.sqrt(values)))


class ClosedForm(Integrator):
    """
    Evaluates Gaussian integrals exactly by completing the square:
    the integral of exp(-pi v . A v + 2 pi b . v + c) over R^d is
    det(A)^(-1/2) exp(pi b . A^-1 b + c) when Re A is positive definite.
    """

    NAME = "closed-form"

    def __init__(self, rel_tol=Tolerances.INTEGRABLE_REL):
        self.rel_tol = rel_tol

    @staticmethod
    def probe():
        pass

    def integrate(self, integrand):
        margin = integrand.decay_margin()
        if margin <= self.rel_tol * integrand.decay_scale():
            return GaussianIntegral(value=None, in_space=False, min_eigenvalue=margin)

        A = 0.5 * (integrand.A + integrand.A.T)
        solved = scipy.linalg.solve(A, integrand.b, assume_a='sym', check_finite=False)

        exponent = np.pi * np.dot(integrand.b, solved) + integrand.c
        value = integrand.prefactor * principal_inverse_sqrt_det(A) * np.exp(exponent)

        return GaussianIntegral(value=complex(value), in_space=True, min_eigenvalue=margin)
