#         Python H_Phi Embedding Library
#      Released under the MIT license
#

"""
Inner products and norms of Gaussian packets, in H_Phi (integration against
exp(-4 pi Phi) over C^n = R^2n) and in L^2(R^n). Every product reduces to a
single Gaussian integral which is handed to an integration back-end.
"""

import numpy as np

from ..Integrators.ClosedForm import ClosedForm
from ..Integrators.Integrator import GaussianIntegrand
from ..Integrators.IntegratorManager import IntegratorManager
from ..Weights.QuadraticWeight import AffineWeight
from .GaussianPacket import MetaplecticError, NotInSpaceError


# Only the closed form reports non-decaying integrands as values rather than errors.
DEFAULT_INTEGRATOR = IntegratorManager(ClosedForm.NAME)


def _embedding(n):
    identity = np.eye(n, dtype=complex)
    return np.hstack([identity, 1j * identity])


def real_to_complex(points):
    """
    Maps real points (x1, x2) of R^2n, one per row, to x1 + i x2 in C^n.

    :rtype: numpy.ndarray
    """
    points = np.atleast_2d(points)
    n = points.shape[1] // 2
    return points[:, :n] + 1j * points[:, n:]


def _weight_parts(weight):
    if isinstance(weight, AffineWeight):
        return weight.quad, np.array(weight.linear), weight.constant

    return weight, np.zeros(weight.n, dtype=complex), 0.0


def hphi_integrand(f, g, weight):
    """
    The integrand f(x) conj(g(x)) exp(-4 pi Phi(x)) on R^2n, written as
    exp(-pi v . A v + 2 pi b . v + c) with
    A = 2Q - i K(T_f) + i conj(K(T_g)), K(T) = E^T T E and E = [1, i].

    :param GaussianPacket f: First packet.
    :param GaussianPacket g: Second packet (conjugated).
    :param weight: QuadraticWeight or AffineWeight.

    :rtype: GaussianIntegrand
    """
    quad, linear, constant = _weight_parts(weight)

    if f.n != quad.n or g.n != quad.n:
        raise MetaplecticError("Packets of dimension {} and {} do not match the weight dimension {}.".format(f.n, g.n, quad.n))

    E = _embedding(quad.n)
    Q = quad.real_form().Q

    T_f, beta_f, theta_f = f.exponent()
    T_g, beta_g, theta_g = g.exponent()

    A = 2.0 * Q - 1j * (E.T @ T_f @ E) + 1j * (E.T @ T_g @ E).conj()
    b = 1j * (E.T @ beta_f) - 1j * (E.T @ beta_g).conj()
    b = b - 4.0 * np.concatenate([linear.real, -linear.imag])
    c = 1j * np.pi * (theta_f - np.conj(theta_g)) - 4.0 * np.pi * constant

    return GaussianIntegrand(A, b, c, prefactor=f.amplitude * np.conj(g.amplitude))


def hphi_inner_product(f, g, weight, integrator=None):
    """
    Inner product <f, g> in H_Phi.

    :param GaussianPacket f: First packet.
    :param GaussianPacket g: Second packet.
    :param weight: QuadraticWeight or AffineWeight.
    :param integrator: :class:`IntegratorManager` or integration back-end,
                       :data:`DEFAULT_INTEGRATOR` when omitted.

    :rtype: GaussianIntegral
    :return: The inner product, or a not-in-space marker carrying the least
             eigenvalue of the decay form.
    """
    integrator = integrator or DEFAULT_INTEGRATOR
    return integrator.integrate(hphi_integrand(f, g, weight))


def _norm_from(integral, strict, what):
    if not integral.in_space:
        if strict:
            raise NotInSpaceError("Packet is not in {} (decay margin {:.3e}).".format(what, integral.min_eigenvalue))
        return None

    value = integral.value
    if value.real <= 0 or abs(value.imag) > 1e-8 * abs(value):
        raise MetaplecticError("Squared norm {} is not a positive real number.".format(value))

    return float(np.sqrt(value.real))


def hphi_norm(f, weight, strict=False, integrator=None):
    """
    Norm of a packet in H_Phi.

    :param GaussianPacket f: Packet.
    :param weight: QuadraticWeight or AffineWeight.
    :param bool strict: Raise :class:`NotInSpaceError` rather than return None
                        for packets outside the space.

    :rtype: float or None
    """
    return _norm_from(hphi_inner_product(f, f, weight, integrator), strict, "H_Phi")


def in_space(f, weight):
    return hphi_integrand(f, f, weight).is_integrable()


def l2_integrand(f, g):
    """
    The integrand f(x) conj(g(x)) over R^n for real x.

    :rtype: GaussianIntegrand
    """
    if f.n != g.n:
        raise MetaplecticError("Packets of dimension {} and {} cannot be paired.".format(f.n, g.n))

    T_f, beta_f, theta_f = f.exponent()
    T_g, beta_g, theta_g = g.exponent()

    A = -1j * T_f + 1j * T_g.conj()
    b = 1j * beta_f - 1j * beta_g.conj()
    c = 1j * np.pi * (theta_f - np.conj(theta_g))

    return GaussianIntegrand(A, b, c, prefactor=f.amplitude * np.conj(g.amplitude))


def l2_inner_product(f, g, integrator=None):
    integrator = integrator or DEFAULT_INTEGRATOR
    return integrator.integrate(l2_integrand(f, g))


def l2_norm(f, strict=False, integrator=None):
    """
    Norm of a packet in L^2(R^n). For a single packet the integrand is
    |c|^2 exp(-2 pi Im theta) exp(-pi x . (2 Im T) x - 4 pi Im beta . x).

    :rtype: float or None
    """
    return _norm_from(l2_inner_product(f, f, integrator), strict, "L^2(R^n)")
