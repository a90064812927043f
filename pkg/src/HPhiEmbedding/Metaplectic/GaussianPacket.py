#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import numpy as np

from ..LinearAlgebra import Dense
from ..PhaseSpace.CanonicalMap import PhasePoint, symplectic_form
from ..Tolerances import Tolerances


class MetaplecticError(Exception):
    """
    Exception thrown when a metaplectic operator cannot act on a Gaussian
    packet, for example when A + BT is singular at some atom of a word or when
    a Gaussian matrix is not symmetric.
    """

    pass


class NotInSpaceError(Exception):
    """
    Exception thrown when a finite norm or inner product is required but the
    Gaussian integrand does not decay.
    """

    pass


def e(t):
    """
    The character e(t) = exp(2 pi i t).

    :rtype: complex
    """
    return complex(np.exp(2j * np.pi * t))


class GaussianPacket:
    """
    A shifted Gaussian wave packet amplitude * S_Y g_T, where
    g_T(x) = exp(pi i T x . x) and S_(y, eta) f(x) = e(-1/2 y . eta + eta . x) f(x - y).
    """

    __slots__ = ("amplitude", "center", "T")

    def __init__(self, T, center=None, amplitude=1.0, sym_tol=Tolerances.SYMMETRIC_T):
        T = Dense.as_complex_matrix(T)

        if Dense.symmetric_defect(T) > sym_tol:
            raise MetaplecticError("Gaussian matrix T is not symmetric.")

        T = 0.5 * (T + T.T)
        T.setflags(write=False)

        if center is None:
            center = PhasePoint.zero(T.shape[0])
        elif center.n != T.shape[0]:
            raise MetaplecticError("Center of dimension {} does not match T of dimension {}.".format(center.n, T.shape[0]))

        object.__setattr__(self, "T", T)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "amplitude", complex(amplitude))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianPacket is immutable")

    @classmethod
    def constant(cls, n=1, amplitude=1.0):
        return cls(np.zeros((n, n), dtype=complex), amplitude=amplitude)

    @property
    def n(self):
        return self.T.shape[0]

    def scaled(self, factor):
        return GaussianPacket(self.T, self.center, self.amplitude * factor)

    def exponent(self):
        """
        Coefficients of the packet written as
        amplitude * exp(pi i T x . x + 2 pi i beta . x + pi i theta).

        :rtype: (numpy.ndarray, numpy.ndarray, complex)
        :return: The triple (T, beta, theta).
        """
        y, eta = self.center.x, self.center.xi
        beta = eta - self.T @ y
        theta = complex(y @ self.T @ y - np.dot(y, eta))
        return np.array(self.T), beta, theta

    def evaluate(self, x):
        """
        Evaluates the packet at one point or at a batch of points (rows).

        :param array_like x: Complex n-vector, or array of shape (count, n).

        :rtype: complex or numpy.ndarray
        """
        x = np.asarray(x, dtype=complex)
        T, beta, theta = self.exponent()

        if x.ndim == 1:
            phase = x @ T @ x + 2.0 * np.dot(beta, x) + theta
            return complex(self.amplitude * np.exp(1j * np.pi * phase))

        phase = np.einsum('ki,ij,kj->k', x, T, x) + 2.0 * x @ beta + theta
        return self.amplitude * np.exp(1j * np.pi * phase)

    def same_function(self, other, tol=1e-9):
        """
        Whether two packets describe the same function, comparing the
        exponent coefficients and the overall constant factor.

        :rtype: bool
        """
        T1, beta1, theta1 = self.exponent()
        T2, beta2, theta2 = other.exponent()

        factor1 = self.amplitude * np.exp(1j * np.pi * theta1)
        factor2 = other.amplitude * np.exp(1j * np.pi * theta2)

        scale = max(1.0, np.linalg.norm(T1))
        return bool(
            np.linalg.norm(T1 - T2) <= tol * scale
            and np.linalg.norm(beta1 - beta2) <= tol * max(1.0, np.linalg.norm(beta1))
            and abs(factor1 - factor2) <= tol * max(1.0, abs(factor1))
        )

    def __repr__(self):
        return "GaussianPacket(amplitude={:.6g}, center={!r}, T={})".format(self.amplitude, self.center, np.array2string(self.T, precision=6))


def shift_compose(X, Y):
    """
    Composition rule S_X S_Y = e(1/2 sigma(X, Y)) S_(X+Y).

    :param PhasePoint X: Outer shift.
    :param PhasePoint Y: Inner shift.

    :rtype: (complex, PhasePoint)
    :return: The unit phase and the combined shift vector.
    """
    return e(0.5 * symplectic_form(X, Y)), X + Y


def apply_shift(Y, packet):
    """
    Applies the phase-space shift S_Y to a packet.

    :param PhasePoint Y: Shift vector.
    :param GaussianPacket packet: Packet to shift.

    :rtype: GaussianPacket
    """
    if Y.n != packet.n:
        raise MetaplecticError("Shift of dimension {} cannot act on a packet of dimension {}.".format(Y.n, packet.n))

    phase, center = shift_compose(Y, packet.center)
    return GaussianPacket(packet.T, center, packet.amplitude * phase)


def shift_function(Y, f):
    """
    The defining formula of S_Y applied to an arbitrary callable f.

    :rtype: callable
    """
    y, eta = Y.x, Y.xi

    def shifted(x):
        x = np.asarray(x, dtype=complex)
        return e(-0.5 * np.dot(y, eta) + np.dot(eta, x)) * f(x - y)

    return shifted
