#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..LinearAlgebra import Dense
from ..Tolerances import Tolerances
from .QuadraticWeight import QuadraticWeight, WeightError


class OrderingError(Exception):
    """
    Exception thrown when the real-form ordering test and the reduced
    pluriharmonic-norm criterion reach opposite conclusions on a pair of
    weights. This indicates a numerical or logic fault, never a user error.
    """

    pass


class Ordering(Enum):
    """
    Relative position of two weights Phi1, Phi2.
    """

    STRICT = 1
    NONSTRICT = 2
    INCOMPARABLE = 3


@dataclass(frozen=True)
class OrderingResult:
    """
    Outcome of :func:`compare`. The margin is the least eigenvalue of the real
    form of Phi2 - Phi1; ``reduced_norm`` is the operator norm of the reduced
    pluriharmonic matrix when that criterion was computable.
    """

    ordering: Ordering
    margin: float
    pd_tol: float
    reduced_norm: float = None

    def is_bounded(self):
        return self.ordering != Ordering.INCOMPARABLE


class Reduction:
    """
    Records the unitary map U = V~_G W_{iP1} taking H_Phi1 onto H_Phi0, with
    G = L1^(-1/2). The same U takes H_Phi2 onto the reduced weight.
    """

    def __init__(self, weight1):
        self.n = weight1.n
        self.scale = Dense.hermitian_inv_sqrt_pd(weight1.L)
        self.scale_inverse = Dense.hermitian_sqrt_pd(weight1.L)
        self.skew = 1j * np.array(weight1.P)

    def apply_to_weight(self, weight):
        """
        Transforms a weight the way U transforms its space.

        :rtype: QuadraticWeight
        """
        return weight.transform_skew(self.skew).transform_scale(self.scale)

    def pull_back_T(self, T):
        """
        Given a Gaussian g_T on the reduced side, returns the matrix of the
        Gaussian f with U f proportional to g_T.

        :rtype: numpy.ndarray
        """
        T = np.asarray(T, dtype=complex)
        return self.scale_inverse.T @ T @ self.scale_inverse - self.skew

    def push_forward_T(self, T):
        """
        Inverse of :meth:`pull_back_T`.

        :rtype: numpy.ndarray
        """
        T = np.asarray(T, dtype=complex)
        return self.scale.T @ (T + self.skew) @ self.scale

    def pull_back_point(self, x):
        """
        Point of the original coordinates corresponding to x on the reduced
        side.
        """
        return self.scale @ np.asarray(x, dtype=complex)


def reduce_to_standard(weight1, weight2):
    """
    Reduces the pair (Phi1, Phi2) to (Phi0, Phi) by a single unitary map, with
    L = L1^(-1/2) L2 L1^(-1/2) and P = conj(L1)^(-1/2) (P2 - P1) L1^(-1/2).

    :param QuadraticWeight weight1: Source weight Phi1.
    :param QuadraticWeight weight2: Target weight Phi2.

    :rtype: (QuadraticWeight, Reduction)
    :return: The reduced target weight and the record of the reducing map.
    """
    if weight1.n != weight2.n:
        raise WeightError("Weights have different dimensions ({} != {}).".format(weight1.n, weight2.n))

    reduction = Reduction(weight1)
    return reduction.apply_to_weight(weight2), reduction


def _reduced_norm(reduced, tol):
    shifted = np.array(reduced.L) - np.eye(reduced.n)
    values, _ = Dense.eig_hermitian(shifted, herm_tol=1e-8)

    if values[0] <= tol:
        return None, float(values[0])

    inv_root = Dense.hermitian_inv_sqrt_pd(shifted, herm_tol=1e-8)
    p_tilde = inv_root.conj() @ np.array(reduced.P) @ inv_root
    return Dense.operator_norm(p_tilde), float(values[0])


def compare(weight1, weight2, pd_rel=Tolerances.PD_REL, crosscheck_tol=Tolerances.ORDERING_CROSSCHECK):
    """
    Classifies the pair (Phi1, Phi2) by the least eigenvalue m of the real form
    of Phi2 - Phi1: STRICT when m > pd_tol, NONSTRICT when |m| <= pd_tol and
    INCOMPARABLE otherwise, with pd_tol = pd_rel (1 + |Q2| + |Q1|).

    After reduction to Phi1 = Phi0, the operator norm of
    (conj(L) - 1)^(-1/2) P (L - 1)^(-1/2) must lie below 1 exactly for
    ordered pairs; whenever that norm is decisive it is checked against the
    real-form verdict.

    :param QuadraticWeight weight1: Source weight Phi1.
    :param QuadraticWeight weight2: Target weight Phi2.

    :rtype: OrderingResult
    """
    if weight1.n != weight2.n:
        raise WeightError("Weights have different dimensions ({} != {}).".format(weight1.n, weight2.n))

    form1 = weight1.real_form()
    form2 = weight2.real_form()

    margin = (form2 - form1).min_eigenvalue()
    pd_tol = pd_rel * (1.0 + form2.norm() + form1.norm())

    if margin > pd_tol:
        ordering = Ordering.STRICT
    elif margin >= -pd_tol:
        ordering = Ordering.NONSTRICT
    else:
        ordering = Ordering.INCOMPARABLE

    reduced, _ = reduce_to_standard(weight1, weight2)
    reduced_norm, levi_gap = _reduced_norm(reduced, pd_tol)

    if reduced_norm is None:
        if levi_gap < -crosscheck_tol and ordering != Ordering.INCOMPARABLE:
            raise OrderingError("Reduced Levi matrix is below the identity (gap {:.3e}) but the pair is {}.".format(levi_gap, ordering.name))
    else:
        logging.debug("Ordering margin %.6e, reduced pluriharmonic norm %.12f", margin, reduced_norm)

        if margin > pd_tol and reduced_norm > 1.0 + crosscheck_tol:
            raise OrderingError("Real form is positive (margin {:.3e}) but reduced norm is {:.12f}.".format(margin, reduced_norm))

        if margin < -pd_tol and reduced_norm < 1.0 - crosscheck_tol:
            raise OrderingError("Real form is indefinite (margin {:.3e}) but reduced norm is {:.12f}.".format(margin, reduced_norm))

    return OrderingResult(ordering=ordering, margin=float(margin), pd_tol=float(pd_tol), reduced_norm=reduced_norm)
