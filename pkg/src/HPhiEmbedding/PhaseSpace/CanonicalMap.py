#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import numpy as np

from ..LinearAlgebra import Dense
from ..Tolerances import Tolerances


class CanonicalMapError(Exception):
    """
    Exception thrown when a phase-space map is malformed, or when two
    independent constructions of the same map disagree.
    """

    pass


class PhasePoint:
    """
    A point X = (x, xi) of the complex phase space C^2n. Instances are
    immutable; arithmetic returns new points.
    """

    __slots__ = ("x", "xi")

    def __init__(self, x, xi):
        x = Dense.as_complex_vector(x)
        xi = Dense.as_complex_vector(xi)

        if x.shape != xi.shape:
            raise CanonicalMapError("Position and momentum dimensions differ ({} != {}).".format(len(x), len(xi)))

        x.setflags(write=False)
        xi.setflags(write=False)

        object.__setattr__(self, "x", x)
        object.__setattr__(self, "xi", xi)

    def __setattr__(self, name, value):
        raise AttributeError("PhasePoint is immutable")

    @classmethod
    def zero(cls, n):
        return cls(np.zeros(n, dtype=complex), np.zeros(n, dtype=complex))

    @classmethod
    def from_vector(cls, v):
        """
        Splits a stacked vector (x, xi) of even length into a phase point.

        :rtype: PhasePoint
        """
        v = Dense.as_complex_vector(v)
        if len(v) % 2:
            raise CanonicalMapError("Stacked phase-space vector has odd length {}.".format(len(v)))

        n = len(v) // 2
        return cls(v[:n], v[n:])

    @property
    def n(self):
        return len(self.x)

    def as_vector(self):
        """
        Returns the stacked vector (x, xi) of length 2n.

        :rtype: numpy.ndarray
        """
        return np.concatenate([self.x, self.xi])

    def conjugate(self):
        return PhasePoint(self.x.conj(), self.xi.conj())

    def is_real(self, tol=1e-12):
        return bool(np.all(np.abs(self.as_vector().imag) <= tol))

    def is_close(self, other, tol=1e-10):
        scale = max(1.0, np.linalg.norm(self.as_vector()), np.linalg.norm(other.as_vector()))
        return bool(np.linalg.norm(self.as_vector() - other.as_vector()) <= tol * scale)

    def _check_dimension(self, other):
        if self.n != other.n:
            raise CanonicalMapError("Phase points of dimension {} and {} cannot be combined.".format(self.n, other.n))

    def __add__(self, other):
        self._check_dimension(other)
        return PhasePoint(self.x + other.x, self.xi + other.xi)

    def __sub__(self, other):
        self._check_dimension(other)
        return PhasePoint(self.x - other.x, self.xi - other.xi)

    def __neg__(self):
        return PhasePoint(-self.x, -self.xi)

    def __mul__(self, scalar):
        return PhasePoint(scalar * self.x, scalar * self.xi)

    __rmul__ = __mul__

    def __repr__(self):
        return "PhasePoint(x={}, xi={})".format(np.array2string(self.x, precision=6), np.array2string(self.xi, precision=6))


def symplectic_matrix(n):
    """
    Matrix J of the symplectic form, so that sigma(X, Y) = X^T J Y.

    :rtype: numpy.ndarray
    """
    identity = np.eye(n, dtype=complex)
    zero = np.zeros((n, n), dtype=complex)
    return np.block([[zero, -identity], [identity, zero]])


def symplectic_form(X, Y):
    """
    Evaluates the (bilinear, antisymmetric) symplectic form
    sigma((x, xi), (y, eta)) = xi . y - eta . x.

    :param PhasePoint X: First phase-space point.
    :param PhasePoint Y: Second phase-space point.

    :rtype: complex
    """
    X._check_dimension(Y)
    return complex(np.dot(X.xi, Y.x) - np.dot(Y.xi, X.x))


class CanonicalMap:
    """
    Represents a complex linear map on the phase space C^2n, stored as a 2n x 2n
    matrix with n x n blocks [[A, B], [C, D]]. Whether the map actually
    preserves the symplectic form is queried with :func:`is_canonical` rather
    than enforced, so that defective intermediate products can be diagnosed.
    """

    __slots__ = ("matrix", "n")

    def __init__(self, M):
        M = Dense.as_complex_matrix(M)

        if M.shape[0] % 2:
            raise CanonicalMapError("Phase-space map must have even dimension, got {}.".format(M.shape[0]))

        M.setflags(write=False)
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "n", M.shape[0] // 2)

    def __setattr__(self, name, value):
        raise AttributeError("CanonicalMap is immutable")

    @classmethod
    def identity(cls, n):
        return cls(np.eye(2 * n, dtype=complex))

    @property
    def A(self):
        return self.matrix[:self.n, :self.n]

    @property
    def B(self):
        return self.matrix[:self.n, self.n:]

    @property
    def C(self):
        return self.matrix[self.n:, :self.n]

    @property
    def D(self):
        return self.matrix[self.n:, self.n:]

    def apply(self, X):
        """
        Maps a phase-space point.

        :param PhasePoint X: Point to map.

        :rtype: PhasePoint
        """
        if X.n != self.n:
            raise CanonicalMapError("Map of dimension {} cannot act on a point of dimension {}.".format(self.n, X.n))

        return PhasePoint.from_vector(self.matrix @ X.as_vector())

    def compose(self, other):
        """
        Returns the map X -> self(other(X)).

        :rtype: CanonicalMap
        """
        if other.n != self.n:
            raise CanonicalMapError("Cannot compose maps of dimension {} and {}.".format(self.n, other.n))

        return CanonicalMap(self.matrix @ other.matrix)

    def __matmul__(self, other):
        return self.compose(other)

    def inverse(self):
        return CanonicalMap(Dense.inverse(self.matrix))

    def conjugate(self):
        return CanonicalMap(self.matrix.conj())

    def is_close(self, other, tol=1e-10):
        scale = max(1.0, np.linalg.norm(self.matrix))
        return bool(np.linalg.norm(self.matrix - other.matrix) <= tol * scale)

    def __repr__(self):
        return "CanonicalMap(n={}, matrix={})".format(self.n, np.array2string(self.matrix, precision=6))


def canonical_defect(M):
    """
    Largest deviation |sigma(M e_j, M e_k) - sigma(e_j, e_k)| over pairs of
    basis vectors, relative to max(1, |M|^2).

    :param CanonicalMap M: Map to test.

    :rtype: float
    """
    J = symplectic_matrix(M.n)
    residual = M.matrix.T @ J @ M.matrix - J

    scale = max(1.0, np.linalg.norm(M.matrix, 2) ** 2)
    return float(np.max(np.abs(residual)) / scale)


def is_canonical(M, tol=Tolerances.CANONICAL_DEFECT):
    """
    Checks whether a map preserves the symplectic form.

    :param CanonicalMap M: Map to test.
    :param float tol: Admitted relative defect.

    :rtype: (bool, float)
    :return: Whether the map is canonical, and the measured defect.
    """
    defect = canonical_defect(M)
    return defect <= tol, defect


def _positivity_quadratic(M, X):
    MX = M.apply(X)
    value = -1j * (symplectic_form(MX, MX.conjugate()) - symplectic_form(X, X.conjugate()))
    return value.real


def positivity_hermitian(M, tol=1e-11):
    """
    Builds the Hermitian matrix H with X* H X = -i(sigma(MX, conj MX) -
    sigma(X, conj X)) by polarization over the standard basis, and checks it
    against the block formula i(M* J M - J).

    :param CanonicalMap M: Map whose positivity form is wanted.
    :param float tol: Admitted relative disagreement between the two routes.

    :rtype: numpy.ndarray
    """
    dim = 2 * M.n
    basis = np.eye(dim, dtype=complex)

    def q(v):
        return _positivity_quadratic(M, PhasePoint.from_vector(v))

    H = np.zeros((dim, dim), dtype=complex)
    for j in range(dim):
        H[j, j] = q(basis[j])
        for k in range(j + 1, dim):
            u, v = basis[j], basis[k]
            entry = 0.25 * ((q(u + v) - q(u - v)) - 1j * (q(u + 1j * v) - q(u - 1j * v)))
            H[j, k] = entry
            H[k, j] = np.conj(entry)

    J = symplectic_matrix(M.n)
    closed = 1j * (M.matrix.conj().T @ J @ M.matrix - J)

    scale = max(1.0, np.linalg.norm(closed))
    if np.linalg.norm(H - closed) > tol * scale or Dense.hermitian_defect(closed) > tol:
        raise CanonicalMapError("Polarized positivity form disagrees with its block formula.")

    return H


def positivity_defect(M, tol=1e-11):
    """
    Least eigenvalue of the Hermitian positivity form of a canonical map. The
    map is positive when this value is non-negative up to tolerance; zero is
    returned for real canonical maps.

    :param CanonicalMap M: Map to test.

    :rtype: float
    """
    values, _ = Dense.eig_hermitian(positivity_hermitian(M, tol=tol))
    return float(values[0])
