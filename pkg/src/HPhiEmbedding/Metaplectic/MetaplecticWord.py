#         Python H_Phi Embedding Library
#      Released under the MIT license
#

"""
Words in the generators of the metaplectic semigroup, and their action on
Gaussian wave packets. A packet amplitude * S_Y g_T is carried by the canonical
map M = [[A, B], [C, D]] of an atom to

    amplitude * det(A + BT)^(-1/2) * S_(MY) g_T',  T' = (C + DT)(A + BT)^-1,

with det(A + BT)^(-1/2) taken as the product of the principal inverse square
roots of the eigenvalues of A + BT.
"""

import logging
from abc import ABC, abstractmethod

import numpy as np

from ..LinearAlgebra import Dense
from ..PhaseSpace import Generators
from ..PhaseSpace.CanonicalMap import CanonicalMap
from ..Tolerances import Tolerances
from .GaussianPacket import GaussianPacket, MetaplecticError


class Atom(ABC):
    """
    A single generator of a metaplectic word.
    """

    NAME = ""

    @abstractmethod
    def canonical_map(self, n):
        """
        Canonical map quantized by this atom in dimension n.

        :rtype: CanonicalMap
        """
        pass

    def scalar(self):
        """
        Extra constant factor of the atom on top of the metaplectic rule.
        """
        return 1.0

    def __repr__(self):
        return self.NAME


class Skew(Atom):
    """
    Multiplication by the Gaussian g_T.
    """

    NAME = "SKEW"

    def __init__(self, T):
        self.T = Dense.as_complex_matrix(T)

    def canonical_map(self, n):
        return Generators.skew_map(self.T)


class Scale(Atom):
    """
    The change of variables f -> (det G)^(1/2) f(G x).
    """

    NAME = "SCALE"

    def __init__(self, G):
        self.G = Dense.as_complex_matrix(G)

    def canonical_map(self, n):
        return Generators.scale_map(self.G)


class Barg0(Atom):
    """
    The metaplectically normalized standard FBI-Bargmann transform.
    """

    NAME = "BARG0"

    def canonical_map(self, n):
        return Generators.bargmann0_map(n)


class Barg0Inverse(Atom):
    NAME = "BARG0_INV"

    def canonical_map(self, n):
        return Generators.bargmann0_inverse_map(n)


class Scalar(Atom):
    """
    Multiplication by a constant.
    """

    NAME = "SCALAR"

    def __init__(self, c):
        self.c = complex(c)

    def canonical_map(self, n):
        return CanonicalMap.identity(n)

    def scalar(self):
        return self.c


def metaplectic_factor(A, B, T, condition_max=Tolerances.CONDITION_MAX):
    """
    Evaluates det(A + BT)^(-1/2) eigenvalue by eigenvalue, together with its
    sign relative to the principal square root of the determinant.

    :rtype: (complex, int, numpy.ndarray)
    :return: The factor, the relative sign and the matrix A + BT.
    """
    S = A + B @ T

    algebra = Dense.basic_algebra(S, condition_max=condition_max)
    if algebra.condition > condition_max:
        raise Dense.LinearAlgebraError("A + BT is singular to tolerance (condition {:.3e}).".format(algebra.condition))

    values = Dense.eig_general(S, residual_tol=1e-8).values
    factor = complex(np.prod(1.0 / np.sqrt(values.astype(complex))))

    principal = 1.0 / np.sqrt(complex(np.prod(values)))
    sign = 1 if abs(factor - principal) <= abs(factor + principal) else -1

    return factor, sign, S


class MetaplecticWord:
    """
    An ordered word of metaplectic generators, stored in application order:
    the first atom acts first. The accumulated canonical map is therefore
    M_k ... M_2 M_1.
    """

    def __init__(self, n, atoms=None):
        self.n = n
        self.atoms = list(atoms or [])

    def append(self, atom):
        """
        Returns a new word with the atom acting last.

        :rtype: MetaplecticWord
        """
        return MetaplecticWord(self.n, self.atoms + [atom])

    def then(self, other):
        """
        Returns the word applying this word first and then the other one.

        :rtype: MetaplecticWord
        """
        if other.n != self.n:
            raise MetaplecticError("Cannot concatenate words of dimension {} and {}.".format(self.n, other.n))

        return MetaplecticWord(self.n, self.atoms + other.atoms)

    def canonical_map(self):
        """
        Accumulated canonical map of the word.

        :rtype: CanonicalMap
        """
        accumulated = CanonicalMap.identity(self.n)
        for atom in self.atoms:
            accumulated = atom.canonical_map(self.n) @ accumulated

        return accumulated

    def apply(self, packet, sym_tol=Tolerances.SYMMETRIC_T):
        """
        Applies the word atom by atom.

        :param GaussianPacket packet: Packet to transform.

        :rtype: (GaussianPacket, list(int))
        :return: The transformed packet and the sign of each atom's factor
                 relative to the principal root of its determinant.
        """
        if packet.n != self.n:
            raise MetaplecticError("Word of dimension {} cannot act on a packet of dimension {}.".format(self.n, packet.n))

        signs = []
        for index, atom in enumerate(self.atoms):
            M = atom.canonical_map(self.n)
            T = np.array(packet.T)

            try:
                factor, sign, S = metaplectic_factor(M.A, M.B, T)
                T_next = (M.C + M.D @ T) @ Dense.inverse(S)
            except Dense.LinearAlgebraError as algebra_error:
                raise MetaplecticError("A + BT is singular at atom {} ({}).".format(index, atom.NAME), algebra_error)

            if Dense.symmetric_defect(T_next) > sym_tol:
                raise MetaplecticError("Transformed T lost symmetry at atom {} ({}).".format(index, atom.NAME))

            if sign < 0:
                logging.debug("Atom %d (%s) takes the non-principal determinant root", index, atom.NAME)

            signs.append(sign)
            packet = GaussianPacket(T_next, M.apply(packet.center), packet.amplitude * factor * atom.scalar())

        return packet, signs

    def __repr__(self):
        return "MetaplecticWord({})".format(" -> ".join(repr(atom) for atom in self.atoms))


def apply_word(word, packet):
    """
    Applies a metaplectic word to a Gaussian packet.

    :rtype: GaussianPacket
    """
    return word.apply(packet)[0]


def unitary_scale_factor(G):
    """
    Constant (det conj(G))^(1/2) turning the metaplectic change of variables
    V_G into the unitary map H_Phi -> H_Phi_G.

    :rtype: complex
    """
    values = Dense.eig_general(np.asarray(G, dtype=complex).conj(), residual_tol=1e-8).values
    return complex(np.prod(np.sqrt(values.astype(complex))))


def bargmann_word(weight, unitary_normalization=True):
    """
    The FBI-Bargmann transform L^2(R^n) -> H_Phi as the word
    BARG0, SCALE(L^(1/2)), SKEW(-iP), followed by SCALAR(2^(n/2) (det L)^(1/4))
    for the unitary normalization.

    :param QuadraticWeight weight: Target weight.
    :param bool unitary_normalization: Whether to append the unitary scalar.

    :rtype: MetaplecticWord
    """
    n = weight.n
    root = Dense.hermitian_sqrt_pd(weight.L)

    word = MetaplecticWord(n, [Barg0(), Scale(root), Skew(-1j * np.array(weight.P))])

    if unitary_normalization:
        det_L = np.prod(np.linalg.eigvalsh(np.array(weight.L)))
        word = word.append(Scalar(2.0 ** (n / 2.0) * det_L ** 0.25))

    return word


def bargmann_transform_gaussian(weight, packet, unitary_normalization=True):
    """
    Transforms a square-integrable Gaussian packet on R^n into H_Phi.

    :param QuadraticWeight weight: Target weight.
    :param GaussianPacket packet: Packet with Im T positive definite.
    :param bool unitary_normalization: Unitary rather than metaplectic scaling.

    :rtype: GaussianPacket
    """
    if packet.n != weight.n:
        raise MetaplecticError("Packet of dimension {} does not match the weight dimension {}.".format(packet.n, weight.n))

    imag = np.array(packet.T).imag
    if np.linalg.eigvalsh(0.5 * (imag + imag.T))[0] <= 0:
        raise MetaplecticError("Packet is not square integrable on R^n (Im T is not positive definite).")

    return apply_word(bargmann_word(weight, unitary_normalization), packet)
