#         Python H_Phi Embedding Library
#      Released under the MIT license
#

"""
Real-quadratic weights Phi(x) = 1/2 L x . conj(x) + 1/2 Re(P x . x) on C^n,
their real 2n-variable form, and the weight transformations induced by
multiplication with Gaussians, linear changes of variables and phase-space
shifts.
"""

import numpy as np

from ..LinearAlgebra import Dense
from ..PhaseSpace.CanonicalMap import PhasePoint
from ..Tolerances import Tolerances


class WeightError(Exception):
    """
    Exception thrown when a weight cannot be constructed or transformed, for
    example because its Levi matrix is not Hermitian positive definite or a
    dimension does not match.
    """

    pass


def _real_block(M):
    return np.block([[M.real, -M.imag], [M.imag, M.real]])


class RealForm:
    """
    Real symmetric 2n x 2n matrix Q with Phi(x) = 1/2 v . Q v, where
    x = x1 + i x2 and v = (x1, x2).
    """

    __slots__ = ("Q",)

    def __init__(self, Q):
        Q = np.array(Q, dtype=float)
        Q = 0.5 * (Q + Q.T)
        Q.setflags(write=False)
        object.__setattr__(self, "Q", Q)

    def __setattr__(self, name, value):
        raise AttributeError("RealForm is immutable")

    @staticmethod
    def to_real(x):
        """
        Identifies a complex n-vector with the real 2n-vector (Re x, Im x).

        :rtype: numpy.ndarray
        """
        x = np.asarray(x, dtype=complex)
        return np.concatenate([x.real, x.imag])

    def evaluate(self, v):
        v = np.asarray(v, dtype=float)
        return float(0.5 * v @ self.Q @ v)

    def min_eigenvalue(self):
        return float(np.linalg.eigvalsh(self.Q)[0])

    def norm(self):
        return float(np.linalg.norm(self.Q, 2))

    def __sub__(self, other):
        return RealForm(self.Q - other.Q)

    def __add__(self, other):
        return RealForm(self.Q + other.Q)


class QuadraticWeight:
    """
    Represents a strictly plurisubharmonic real-quadratic weight, given by its
    Levi matrix L (Hermitian positive definite) and its pluriharmonic matrix P
    (complex symmetric). Weights are immutable; every transform returns a new
    weight.
    """

    __slots__ = ("L", "P", "n")

    def __init__(self, L, P=None, herm_tol=Tolerances.HERMITIAN_REL):
        """
        Creates a new weight.

        :param array_like L: Levi matrix, Hermitian positive definite.
        :param array_like P: Pluriharmonic matrix, complex symmetric. Defaults
                             to zero.
        :param float herm_tol: Admitted relative Hermitian (symmetric) defect.
        """
        try:
            L = Dense.as_complex_matrix(L)
            P = np.zeros_like(L) if P is None else Dense.as_complex_matrix(P)
        except Dense.LinearAlgebraError as matrix_error:
            raise WeightError("Malformed weight matrices.", matrix_error)

        if L.shape != P.shape:
            raise WeightError("L has shape {} but P has shape {}.".format(L.shape, P.shape))

        if Dense.hermitian_defect(L) > herm_tol:
            raise WeightError("Levi matrix L is not Hermitian.")

        if Dense.symmetric_defect(P) > herm_tol:
            raise WeightError("Pluriharmonic matrix P is not symmetric.")

        L = 0.5 * (L + L.conj().T)
        P = 0.5 * (P + P.T)

        if np.linalg.eigvalsh(L)[0] <= 0:
            raise WeightError("Levi matrix L is not positive definite.")

        L.setflags(write=False)
        P.setflags(write=False)

        object.__setattr__(self, "L", L)
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "n", L.shape[0])

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticWeight is immutable")

    @classmethod
    def standard(cls, n=1):
        """
        The standard weight Phi0(x) = 1/2 |x|^2.

        :rtype: QuadraticWeight
        """
        return cls(np.eye(n, dtype=complex))

    @classmethod
    def scalar(cls, a, b=0):
        """
        The one dimensional weight 1/2 a |x|^2 + 1/2 Re(b x^2).

        :rtype: QuadraticWeight
        """
        return cls([[a]], [[b]])

    def _check_vector(self, x):
        try:
            return Dense.as_complex_vector(x, self.n)
        except Dense.LinearAlgebraError as vector_error:
            raise WeightError("Point does not match the weight dimension {}.".format(self.n), vector_error)

    def evaluate(self, x):
        """
        Evaluates the weight at a point.

        :param array_like x: Complex n-vector.

        :rtype: float
        """
        x = self._check_vector(x)

        levi = np.vdot(x, self.L @ x)
        magnitude = abs(levi) + np.linalg.norm(self.L) * np.vdot(x, x).real
        if abs(levi.imag) > 1e-13 * max(magnitude, np.finfo(float).tiny):
            raise WeightError("Levi term has a non-negligible imaginary part {:.3e}.".format(levi.imag))

        return float(0.5 * levi.real + 0.5 * (x @ self.P @ x).real)

    def real_form(self):
        """
        Real symmetric matrix of the weight in the variables (Re x, Im x).

        :rtype: RealForm
        """
        flip = np.diag(np.concatenate([np.ones(self.n), -np.ones(self.n)]))
        return RealForm(_real_block(self.L) + flip @ _real_block(self.P))

    def regularized(self, eps):
        """
        The weight Phi(x) + 1/2 eps |x|^2.

        :rtype: QuadraticWeight
        """
        return QuadraticWeight(self.L + eps * np.eye(self.n), self.P)

    def transform_skew(self, T):
        """
        Weight Phi_T(x) = Phi(x) + 1/2 Re(x . (iT) x), the target of
        multiplication by the Gaussian g_T.

        :param array_like T: Complex symmetric n x n matrix.

        :rtype: QuadraticWeight
        """
        T = self._check_square(T)
        if Dense.symmetric_defect(T) > Tolerances.SYMMETRIC_T:
            raise WeightError("Skew matrix T is not symmetric.")

        return QuadraticWeight(self.L, self.P + 1j * T)

    def transform_scale(self, G):
        """
        Weight Phi_G(x) = Phi(G x).

        :param array_like G: Invertible complex n x n matrix.

        :rtype: QuadraticWeight
        """
        G = self._check_square(G)

        algebra = Dense.basic_algebra(G)
        if algebra.condition > algebra.condition_max:
            raise WeightError("Scaling matrix G is singular to tolerance.")

        return QuadraticWeight(G.conj().T @ self.L @ G, G.T @ self.P @ G)

    def transform_shift(self, Y):
        """
        Weight Phi_Y(x) = Phi(x - y) + Im(1/2 y . eta - eta . x), the target of
        the phase-space shift by Y = (y, eta).

        :param PhasePoint Y: Shift vector.

        :rtype: AffineWeight
        """
        if Y.n != self.n:
            raise WeightError("Shift of dimension {} does not match the weight dimension {}.".format(Y.n, self.n))

        y, eta = Y.x, Y.xi
        w = -self.L.conj() @ y.conj() - self.P @ y + 1j * eta
        constant = self.evaluate(y) + np.imag(0.5 * np.dot(y, eta))

        return AffineWeight(self, 0.5 * w, float(constant))

    def lambda_point(self, y):
        """
        The point (y, -2i dPhi/dx(y)) of the totally real manifold Lambda_Phi
        above y; shifts by such points leave the weight unchanged.

        :param array_like y: Complex n-vector.

        :rtype: PhasePoint
        """
        y = self._check_vector(y)
        return PhasePoint(y, -1j * (self.P @ y + (self.L @ y).conj()))

    def is_close(self, other, tol=1e-11):
        if self.n != other.n:
            return False

        scale = max(1.0, np.linalg.norm(self.L), np.linalg.norm(other.L))
        return bool(np.linalg.norm(self.L - other.L) <= tol * scale and np.linalg.norm(self.P - other.P) <= tol * scale)

    def _check_square(self, M):
        try:
            M = Dense.as_complex_matrix(M)
        except Dense.LinearAlgebraError as matrix_error:
            raise WeightError("Malformed transform matrix.", matrix_error)

        if M.shape != (self.n, self.n):
            raise WeightError("Transform matrix has shape {}, expected {}.".format(M.shape, (self.n, self.n)))

        return M

    def __repr__(self):
        return "QuadraticWeight(L={}, P={})".format(np.array2string(self.L, precision=6), np.array2string(self.P, precision=6))


class AffineWeight:
    """
    A quadratic weight plus a real affine part,
    Phi(x) + lambda . x + conj(lambda) . conj(x) + constant.
    """

    __slots__ = ("quad", "linear", "constant")

    def __init__(self, quad, linear, constant=0.0):
        linear = Dense.as_complex_vector(linear, quad.n)
        linear.setflags(write=False)

        object.__setattr__(self, "quad", quad)
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "constant", float(constant))

    def __setattr__(self, name, value):
        raise AttributeError("AffineWeight is immutable")

    @property
    def n(self):
        return self.quad.n

    def evaluate(self, x):
        x = Dense.as_complex_vector(x, self.n)
        return self.quad.evaluate(x) + 2.0 * float(np.dot(self.linear, x).real) + self.constant

    def has_zero_affine_part(self, tol=1e-11):
        """
        Whether the weight reduces to its quadratic part, coefficientwise.

        :rtype: bool
        """
        scale = max(1.0, np.linalg.norm(self.quad.L))
        return bool(np.max(np.abs(self.linear), initial=0.0) <= tol * scale and abs(self.constant) <= tol * scale)

    def __repr__(self):
        return "AffineWeight(quad={!r}, linear={}, constant={:.6g})".format(self.quad, np.array2string(self.linear, precision=6), self.constant)
