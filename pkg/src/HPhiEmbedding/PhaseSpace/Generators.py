#         Python H_Phi Embedding Library
#      Released under the MIT license
#

"""
Generator matrices of the complex symplectic group used by the library, and
the canonical maps attached to a weight: the adjoint-shift matrix A_Phi and
the FBI-Bargmann canonical map B.
"""

import numpy as np

from ..LinearAlgebra import Dense
from ..Tolerances import Tolerances
from .CanonicalMap import CanonicalMap, CanonicalMapError, symplectic_matrix


def _blocks(A, B, C, D):
    return CanonicalMap(np.block([[A, B], [C, D]]))


def skew_map(T):
    """
    The map W_T = [[1, 0], [T, 1]] quantized by multiplication with the
    Gaussian g_T.

    :param array_like T: Complex symmetric n x n matrix.

    :rtype: CanonicalMap
    """
    T = Dense.as_complex_matrix(T)
    if Dense.symmetric_defect(T) > Tolerances.SYMMETRIC_T:
        raise CanonicalMapError("Skew matrix T is not symmetric.")

    n = T.shape[0]
    identity = np.eye(n, dtype=complex)
    return _blocks(identity, np.zeros((n, n), dtype=complex), T, identity)


def scale_map(G):
    """
    The map V_G = [[G^-1, 0], [0, G^T]] quantized by the change of variables
    f(x) -> f(G x).

    :param array_like G: Invertible complex n x n matrix.

    :rtype: CanonicalMap
    """
    G = Dense.as_complex_matrix(G)

    try:
        G_inverse = Dense.inverse(G)
    except Dense.LinearAlgebraError as inverse_error:
        raise CanonicalMapError("Scaling matrix G is singular.", inverse_error)

    zero = np.zeros_like(G)
    return _blocks(G_inverse, zero, zero, G.T)


def bargmann0_map(n=1):
    """
    The canonical map (1/sqrt 2) [[1, -i], [-i, 1]] of the standard FBI-Bargmann
    transform.

    :rtype: CanonicalMap
    """
    identity = np.eye(n, dtype=complex) / np.sqrt(2.0)
    return _blocks(identity, -1j * identity, -1j * identity, identity)


def bargmann0_inverse_map(n=1):
    """
    Inverse of :func:`bargmann0_map`, (1/sqrt 2) [[1, i], [i, 1]].

    :rtype: CanonicalMap
    """
    identity = np.eye(n, dtype=complex) / np.sqrt(2.0)
    return _blocks(identity, 1j * identity, 1j * identity, identity)


def rotation_map(n=1):
    """
    The map R(y, eta) = i (eta, y).

    :rtype: CanonicalMap
    """
    identity = np.eye(n, dtype=complex)
    zero = np.zeros((n, n), dtype=complex)
    return _blocks(zero, 1j * identity, 1j * identity, zero)


def _a_phi_factored(L, P):
    n = L.shape[0]
    identity = np.eye(n, dtype=complex)
    zero = np.zeros((n, n), dtype=complex)

    K = np.block([[1j * L, zero], [1j * P, identity]])
    swap = np.block([[zero, identity], [identity, zero]])

    return Dense.inverse(K).conj() @ swap @ K


def _a_phi_expanded(L, P):
    L_bar_inv = Dense.inverse(L).conj()
    P_bar = P.conj()

    return np.block([
        [-L_bar_inv @ P, 1j * L_bar_inv],
        [1j * (L - P_bar @ L_bar_inv @ P), -P_bar @ L_bar_inv],
    ])


def _a_phi_generators(L, P):
    n = L.shape[0]
    product = skew_map(1j * P.conj()) @ rotation_map(n) @ scale_map(L).inverse() @ skew_map(1j * P)
    return product.matrix


def a_phi(weight, route_tol=Tolerances.ROUTE_AGREEMENT):
    """
    The canonical matrix A_Phi governing adjoints of phase-space shifts on
    H_Phi. It is built three ways: from the factored definition
    conj(K^-1) [[0, 1], [1, 0]] K with K = [[iL, 0], [iP, 1]], from its
    multiplied-out blocks, and as the generator product
    W_{i conj(P)} R V_L^-1 W_{iP}. All three must agree.

    :param QuadraticWeight weight: The weight Phi.
    :param float route_tol: Admitted relative disagreement between routes.

    :rtype: CanonicalMap
    """
    L = np.array(weight.L)
    P = np.array(weight.P)

    factored = _a_phi_factored(L, P)
    expanded = _a_phi_expanded(L, P)
    generated = _a_phi_generators(L, P)

    scale = max(1.0, np.linalg.norm(expanded))
    for name, route in (("factored", factored), ("generator", generated)):
        if np.linalg.norm(route - expanded) > route_tol * scale:
            raise CanonicalMapError("The {} construction of A_Phi disagrees with the expanded one.".format(name))

    return CanonicalMap(expanded)


def bargmann_map(weight):
    """
    Canonical map B = W_{-iP} V_{L^(1/2)} B_0 of the unitary FBI-Bargmann
    transform L^2(R^n) -> H_Phi. It carries R^2n onto Lambda_Phi and
    A_Phi = conj(B) B^-1.

    :param QuadraticWeight weight: The weight Phi.

    :rtype: CanonicalMap
    """
    root = Dense.hermitian_sqrt_pd(weight.L)
    return skew_map(-1j * np.array(weight.P)) @ scale_map(root) @ bargmann0_map(weight.n)


def adjoint_shift_vector(weight, Y):
    """
    Shift vector Z with S_Y* = S_Z on H_Phi, namely Z = -conj(A_Phi Y).

    :param QuadraticWeight weight: The weight Phi.
    :param PhasePoint Y: Shift vector.

    :rtype: PhasePoint
    """
    return -(a_phi(weight).apply(Y).conjugate())


def pair_positivity_defect(weight1, weight2):
    """
    Least eigenvalue of the Hermitian form
    -i (sigma(A_Phi2 X, conj X) - sigma(A_Phi1 X, conj X)), which is
    non-negative exactly when Phi2 >= Phi1 and positive definite when the
    inequality is strict.

    :rtype: float
    """
    if weight1.n != weight2.n:
        raise CanonicalMapError("Weights have different dimensions ({} != {}).".format(weight1.n, weight2.n))

    J = symplectic_matrix(weight1.n)
    H = 1j * J @ (a_phi(weight2).matrix - a_phi(weight1).matrix)

    if Dense.hermitian_defect(H) > 1e-9:
        raise CanonicalMapError("Pair positivity form is not Hermitian.")

    values, _ = Dense.eig_hermitian(0.5 * (H + H.conj().T))
    return float(values[0])
