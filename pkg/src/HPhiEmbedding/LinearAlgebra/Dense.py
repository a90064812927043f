#         Python H_Phi Embedding Library
#      Released under the MIT license
#

"""
Dense complex linear algebra for the small matrices (2n <= 32) used by the
rest of the library. Heavy lifting is delegated to LAPACK through numpy and
scipy; this module adds the residual, Hermitian and conditioning checks that
the phase-space code relies on.
"""

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..Tolerances import Tolerances


MAX_DIMENSION = 32


class LinearAlgebraError(Exception):
    """
    Exception thrown when a matrix operation cannot be carried out, for example
    because the input is not square, not finite, singular to tolerance or fails
    the Hermitian check of the requested routine.
    """

    pass


def as_complex_matrix(M, square=True):
    """
    Converts the given array-like into a finite complex128 matrix.

    :param array_like M: Matrix entries, nested rows or an ndarray.
    :param bool square: Whether the matrix is required to be square.

    :rtype: numpy.ndarray
    :return: Two dimensional complex copy of the input.
    """
    M = np.array(M, dtype=complex)

    if M.ndim != 2:
        raise LinearAlgebraError("Expected a two dimensional matrix, got shape {}.".format(M.shape))

    if square and M.shape[0] != M.shape[1]:
        raise LinearAlgebraError("Expected a square matrix, got shape {}.".format(M.shape))

    if not np.all(np.isfinite(M)):
        raise LinearAlgebraError("Matrix has non-finite entries.")

    return M


def as_complex_vector(v, n=None):
    """
    Converts the given array-like into a finite complex128 vector, optionally
    checking its length.
    """
    v = np.array(v, dtype=complex).reshape(-1)

    if n is not None and v.shape[0] != n:
        raise LinearAlgebraError("Expected a vector of length {}, got {}.".format(n, v.shape[0]))

    if not np.all(np.isfinite(v)):
        raise LinearAlgebraError("Vector has non-finite entries.")

    return v


def hermitian_defect(H):
    """
    Relative distance of a matrix from its conjugate transpose, measured in the
    Frobenius norm.

    :rtype: float
    """
    scale = np.linalg.norm(H)
    if scale == 0:
        return 0.0

    return float(np.linalg.norm(H - H.conj().T) / scale)


def symmetric_defect(S):
    """
    Relative distance of a matrix from its (non-conjugated) transpose.

    :rtype: float
    """
    scale = np.linalg.norm(S)
    if scale == 0:
        return 0.0

    return float(np.linalg.norm(S - S.T) / scale)


@dataclass(frozen=True)
class EigenSystem:
    """
    Eigenvalues of a general square matrix with unit right eigenvectors (as
    columns), the eigenvalue condition numbers and the worst relative residual
    of the decomposition.
    """

    values: np.ndarray
    vectors: np.ndarray
    conditions: np.ndarray
    residual: float

    def pairs(self):
        """
        Eigenpairs in solver order.

        :rtype: list((complex, numpy.ndarray))
        """
        return [(complex(self.values[k]), self.vectors[:, k]) for k in range(len(self.values))]

    def worst_condition(self):
        return float(np.max(self.conditions)) if len(self.conditions) else 1.0


def eig_general(M, residual_tol=1e-10):
    """
    Computes all eigenvalues of a square complex matrix, with multiplicity,
    together with unit length eigenvectors. The matrix is balanced and reduced
    to Hessenberg form before the shifted QR iteration (LAPACK ``zgeev``).

    Near-defective eigenvalues are returned along with a large condition
    number rather than refused.

    :param array_like M: Square matrix of dimension at most 32.
    :param float residual_tol: Admitted residual relative to the matrix norm.

    :rtype: EigenSystem
    :return: Eigenvalues, eigenvectors and diagnostics.
    """
    M = as_complex_matrix(M)

    if M.shape[0] > MAX_DIMENSION:
        raise LinearAlgebraError("Dimension {} exceeds the supported {}.".format(M.shape[0], MAX_DIMENSION))

    try:
        values, left, right = scipy.linalg.eig(M, left=True, right=True)
    except (np.linalg.LinAlgError, ValueError) as eig_error:
        raise LinearAlgebraError("Eigenvalue iteration failed to converge.", eig_error)

    right = right / np.linalg.norm(right, axis=0)
    left = left / np.linalg.norm(left, axis=0)

    overlaps = np.abs(np.einsum('ij,ij->j', left.conj(), right))
    with np.errstate(divide='ignore'):
        conditions = np.where(overlaps > 0, 1.0 / overlaps, np.inf)

    scale = max(np.linalg.norm(M, 2), np.finfo(float).tiny)
    residual = float(np.max(np.linalg.norm(M @ right - right * values, axis=0)) / scale) if len(values) else 0.0

    if residual > residual_tol:
        raise LinearAlgebraError("Eigen decomposition residual {:.3e} exceeds {:.1e}.".format(residual, residual_tol))

    if np.max(conditions, initial=1.0) > Tolerances.EIGEN_CONDITION_WARN:
        logging.debug("Ill-conditioned spectrum, worst eigenvalue condition %.3e", np.max(conditions))

    return EigenSystem(values=values, vectors=right, conditions=conditions, residual=residual)


def eig_hermitian(H, herm_tol=Tolerances.HERMITIAN_REL):
    """
    Diagonalizes a Hermitian matrix.

    :param array_like H: Hermitian matrix (up to the relative tolerance).
    :param float herm_tol: Admitted relative Hermitian defect.

    :rtype: (numpy.ndarray, numpy.ndarray)
    :return: Real eigenvalues in ascending order, and the unitary matrix whose
             columns are the matching orthonormal eigenvectors.
    """
    H = as_complex_matrix(H)

    defect = hermitian_defect(H)
    if defect > herm_tol:
        raise LinearAlgebraError("Matrix is not Hermitian (relative defect {:.3e}).".format(defect))

    values, vectors = np.linalg.eigh(0.5 * (H + H.conj().T))
    return values, vectors


def hermitian_sqrt_pd(H, herm_tol=Tolerances.HERMITIAN_REL):
    """
    Principal square root of a Hermitian positive definite matrix.

    :param array_like H: Hermitian positive definite matrix.

    :rtype: numpy.ndarray
    :return: The unique Hermitian positive definite R with R @ R == H.
    """
    values, vectors = eig_hermitian(H, herm_tol=herm_tol)

    if values[0] <= 0:
        raise LinearAlgebraError("Matrix is not positive definite (smallest eigenvalue {:.3e}).".format(values[0]))

    root = (vectors * np.sqrt(values)) @ vectors.conj().T
    return 0.5 * (root + root.conj().T)


def hermitian_inv_sqrt_pd(H, herm_tol=Tolerances.HERMITIAN_REL):
    """
    Inverse of the principal square root of a Hermitian positive definite
    matrix.

    :rtype: numpy.ndarray
    """
    values, vectors = eig_hermitian(H, herm_tol=herm_tol)

    if values[0] <= 0:
        raise LinearAlgebraError("Matrix is not positive definite (smallest eigenvalue {:.3e}).".format(values[0]))

    root = (vectors / np.sqrt(values)) @ vectors.conj().T
    return 0.5 * (root + root.conj().T)


class BasicAlgebra:
    """
    LU based determinant, inverse and linear solves for one square matrix.
    The factorization is computed once and shared by all three operations.
    """

    def __init__(self, M, condition_max=Tolerances.CONDITION_MAX):
        self.matrix = as_complex_matrix(M)
        self.condition_max = condition_max
        self.condition = float(np.linalg.cond(self.matrix)) if self.matrix.size else 1.0

        self._lu, self._piv = scipy.linalg.lu_factor(self.matrix, check_finite=False)

    def determinant(self):
        """
        Determinant from the triangular factor, with the permutation sign
        folded in.

        :rtype: complex
        """
        n = self.matrix.shape[0]
        swaps = np.count_nonzero(self._piv != np.arange(n))
        sign = -1.0 if swaps % 2 else 1.0

        return complex(sign * np.prod(np.diag(self._lu)))

    def _check_invertible(self):
        if not np.isfinite(self.condition) or self.condition > self.condition_max:
            raise LinearAlgebraError("Matrix is singular to tolerance (condition {:.3e}).".format(self.condition))

    def inverse(self):
        """
        :rtype: numpy.ndarray
        :return: Inverse matrix.
        """
        self._check_invertible()

        n = self.matrix.shape[0]
        return scipy.linalg.lu_solve((self._lu, self._piv), np.eye(n, dtype=complex), check_finite=False)

    def solve(self, b):
        """
        Solves M x = b.

        :param array_like b: Right hand side vector (or matrix of columns).

        :rtype: numpy.ndarray
        """
        self._check_invertible()

        b = np.asarray(b, dtype=complex)
        return scipy.linalg.lu_solve((self._lu, self._piv), b, check_finite=False)


def basic_algebra(M, condition_max=Tolerances.CONDITION_MAX):
    """
    Factorizes M for determinant, inverse and solve queries.

    :rtype: BasicAlgebra
    """
    return BasicAlgebra(M, condition_max=condition_max)


def determinant(M):
    return BasicAlgebra(M).determinant()


def inverse(M, condition_max=Tolerances.CONDITION_MAX):
    return BasicAlgebra(M, condition_max=condition_max).inverse()


def solve(M, b, condition_max=Tolerances.CONDITION_MAX):
    return BasicAlgebra(M, condition_max=condition_max).solve(b)


def operator_norm(M, rel_tol=1e-13, max_iter=500, confirm_tol=1e-10):
    """
    Largest singular value of M, by power iteration on M* M. A start vector
    that is (numerically) annihilated is replaced by the next basis vector.
    The result is always confirmed against a Hermitian eigen-solve of M* M,
    which wins when the iteration settles below the top of the spectrum (a
    start vector orthogonal to the leading singular vector) or does not
    settle at all.

    :param array_like M: Any finite complex matrix.
    :param float confirm_tol: Relative disagreement with the eigen-solve
                              that is logged and corrected.

    :rtype: float
    :return: Spectral norm of M.
    """
    M = as_complex_matrix(M, square=False)

    if M.size == 0 or not np.any(M):
        return 0.0

    gram = M.conj().T @ M
    n = gram.shape[0]

    starts = [np.ones(n, dtype=complex) + 1j * np.arange(n) / max(n, 1)] + [np.eye(n, dtype=complex)[k] for k in range(n)]

    for start in starts:
        x = start / np.linalg.norm(start)
        if np.linalg.norm(gram @ x) > 1e-14 * np.linalg.norm(gram):
            break
    else:
        x = starts[0] / np.linalg.norm(starts[0])

    value = None
    previous = 0.0
    for _ in range(max_iter):
        y = gram @ x
        estimate = float(np.real(np.vdot(x, y)))
        y_norm = np.linalg.norm(y)
        if y_norm == 0:
            break

        x = y / y_norm
        if previous and abs(estimate - previous) <= rel_tol * estimate:
            value = estimate
            break
        previous = estimate

    values, _ = eig_hermitian(gram, herm_tol=1e-8)
    top = float(max(values[-1], 0.0))

    if value is None:
        logging.debug("Power iteration did not settle, using the Hermitian eigen-solve")
    elif abs(value - top) > confirm_tol * top:
        logging.debug("Power iteration settled on %.12g below the top eigenvalue %.12g of M* M", value, top)
    else:
        return float(np.sqrt(max(value, 0.0)))

    return float(np.sqrt(top))
