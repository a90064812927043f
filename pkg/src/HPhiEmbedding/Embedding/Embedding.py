#         Python H_Phi Embedding Library
#      Released under the MIT license
#

"""
Norm of the embedding H_Phi1 -> H_Phi2 from the spectrum of
A_Phi2^-1 A_Phi1, the Gaussian attaining it for strictly ordered weights,
and an explicit non-embedded Gaussian for incomparable ones.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import scipy.linalg

from ..LinearAlgebra import Dense
from ..Metaplectic.GaussianPacket import GaussianPacket
from ..Metaplectic.Norms import hphi_integrand, in_space
from ..Oracle import Oracle
from ..PhaseSpace import Generators
from ..Tolerances import Defaults, Tolerances
from ..Weights.Ordering import Ordering, compare, reduce_to_standard
from ..Weights.QuadraticWeight import QuadraticWeight


class EmbeddingError(Exception):
    """
    Exception thrown when the embedding computation hits an inconsistency: an
    unpaired spectrum, a stable subspace that is not a graph, an asymmetric
    witness, a witness that disagrees with the independent ratio, or an
    incomparable pair for which no non-embedded Gaussian could be found.
    """

    pass


class Verdict(Enum):
    """
    Boundedness of the embedding H_Phi1 -> H_Phi2.
    """

    BOUNDED_STRICT = 1
    BOUNDED_NONSTRICT = 2
    UNBOUNDED = 3


@dataclass
class Spectrum:
    """
    Spectrum of A_Phi2^-1 A_Phi1: the full eigenvalue list (after snapping
    clusters at 1), the representatives mu_j <= 1 of each reciprocal pair, and
    the residuals of both checks.
    """

    mus: list
    eigenvalues: list
    eigenvectors: np.ndarray
    imag_residual: float
    pairing_residual: float
    snapped: int
    worst_condition: float


@dataclass
class EmbeddingResult:
    """
    Outcome of :func:`embedding_norm`. ``norm`` is None exactly for unbounded
    embeddings and ``witness_T`` is present exactly for strictly ordered
    weights.
    """

    verdict: Verdict
    mus: list
    norm: float = None
    witness_T: np.ndarray = None
    diagnostics: dict = field(default_factory=dict)


@dataclass
class UnboundednessWitness:
    """
    A Gaussian packet in H_Phi1 but not in H_Phi2, with the rung delta and the
    unit direction x0 (in reduced coordinates) it was built from.
    """

    packet: GaussianPacket
    delta: float
    x0: np.ndarray
    margin1: float
    margin2: float


def _transfer_matrix(weight1, weight2):
    return Dense.inverse(Generators.a_phi(weight2).matrix) @ Generators.a_phi(weight1).matrix


def _check_pair(weight1, weight2):
    if weight1.n != weight2.n:
        raise EmbeddingError("Weights have different dimensions ({} != {}).".format(weight1.n, weight2.n))


def embedding_spectrum(weight1, weight2, ordering=None,
                       imag_tol=Tolerances.SPECTRUM_IMAG, pairing_tol=Tolerances.SPECTRUM_PAIRING, snap_tol=Tolerances.JORDAN_SNAP):
    """
    Eigenvalues of M = A_Phi2^-1 A_Phi1 split into reciprocal pairs
    {mu_j, 1/mu_j}, with mu_j <= 1.

    Eigenvalues within ``snap_tol`` of 1 are set to 1, since Jordan blocks at 1
    split into clusters of that size under rounding.

    :param QuadraticWeight weight1: Source weight Phi1.
    :param QuadraticWeight weight2: Target weight Phi2.

    :rtype: Spectrum
    """
    _check_pair(weight1, weight2)

    ordering = ordering or compare(weight1, weight2)
    if ordering.ordering == Ordering.INCOMPARABLE:
        raise EmbeddingError("Spectrum pairing requires ordered weights (margin {:.3e}).".format(ordering.margin))

    system = Dense.eig_general(_transfer_matrix(weight1, weight2), residual_tol=1e-9)
    values = np.array(system.values, dtype=complex)

    near_one = np.abs(values - 1.0) <= snap_tol
    snapped = int(np.count_nonzero(near_one & (values != 1.0)))
    if snapped:
        logging.info("Snapped %d eigenvalue(s) within %.1e of 1 (worst condition %.3e)", snapped, snap_tol, system.worst_condition())
    values[near_one] = 1.0

    imag_residual = float(np.max(np.abs(values.imag) / np.maximum(1.0, np.abs(values)), initial=0.0))
    if imag_residual > imag_tol:
        raise EmbeddingError("Spectrum is not real (imaginary residue {:.3e}).".format(imag_residual))

    reals = values.real
    if np.any(reals <= 0):
        raise EmbeddingError("Spectrum has non-positive eigenvalues {}.".format(reals[reals <= 0]))

    remaining = sorted(reals.tolist())
    mus = []
    pairing_residual = 0.0

    while remaining:
        smallest = remaining.pop(0)
        target = 1.0 / smallest

        if not remaining:
            raise EmbeddingError("Eigenvalue {:.12g} has no reciprocal partner.".format(smallest))

        index = int(np.argmin([abs(value - target) for value in remaining]))
        residual = abs(remaining[index] - target) / max(1.0, target)

        if residual > pairing_tol:
            raise EmbeddingError("Eigenvalue {:.12g} has no partner near {:.12g} (residual {:.3e}).".format(smallest, target, residual))

        remaining.pop(index)
        pairing_residual = max(pairing_residual, residual)
        mus.append(smallest)

    return Spectrum(
        mus=sorted(mus),
        eigenvalues=values.real.tolist(),
        eigenvectors=system.vectors,
        imag_residual=imag_residual,
        pairing_residual=pairing_residual,
        snapped=snapped,
        worst_condition=system.worst_condition(),
    )


def levi_determinant_ratio(weight1, weight2):
    """
    det L1 / det L2, asserted real and positive.

    :rtype: float
    """
    ratio = Dense.determinant(weight1.L) / Dense.determinant(weight2.L)

    if ratio.real <= 0 or abs(ratio.imag) > 1e-10 * abs(ratio):
        raise EmbeddingError("Levi determinant ratio {} is not a positive real number.".format(ratio))

    return float(ratio.real)


@dataclass
class StableSubspace:
    T: np.ndarray
    condition: float
    determinant: complex
    low_confidence: bool


def stable_subspace(weight1, weight2, condition_warn=Tolerances.WITNESS_CONDITION_WARN, sym_tol=Tolerances.WITNESS_SYMMETRY):
    """
    Graph matrix T of the stable subspace E_s of M = A_Phi2^-1 A_Phi1, found
    from a complex Schur form ordered to put the eigenvalues inside the unit
    circle first, together with det(M restricted to E_s).

    :rtype: StableSubspace
    """
    n = weight1.n
    M = _transfer_matrix(weight1, weight2)

    schur_form, vectors, stable_count = scipy.linalg.schur(M, output='complex', sort='iuc')
    if stable_count != n:
        raise EmbeddingError("Stable subspace has dimension {}, expected {}.".format(stable_count, n))

    X = vectors[:n, :n]
    Xi = vectors[n:, :n]

    condition = float(np.linalg.cond(X))
    if not np.isfinite(condition) or condition > Tolerances.CONDITION_MAX:
        raise EmbeddingError("Stable subspace is not a graph over the x-coordinates (condition {:.3e}).".format(condition))

    low_confidence = condition > condition_warn
    if low_confidence:
        logging.warning("Stable subspace graph is ill-conditioned (condition %.3e), witness is low-confidence", condition)

    T = Dense.solve(X.T, Xi.T).T

    if Dense.symmetric_defect(T) > sym_tol:
        raise EmbeddingError("Witness matrix is not symmetric (defect {:.3e}).".format(Dense.symmetric_defect(T)))

    return StableSubspace(
        T=0.5 * (T + T.T),
        condition=condition,
        determinant=complex(np.prod(np.diag(schur_form)[:n])),
        low_confidence=low_confidence,
    )


def witness_gaussian(weight1, weight2, check_ratio=True):
    """
    Symmetric matrix T whose Gaussian g_T(x) = exp(pi i T x . x) attains the
    norm of the embedding, for strictly ordered weights.

    :param QuadraticWeight weight1: Source weight Phi1.
    :param QuadraticWeight weight2: Target weight Phi2.
    :param bool check_ratio: Compare the norm ratio of g_T with the spectral
                             norm formula.

    :rtype: numpy.ndarray
    """
    return _witness(weight1, weight2, check_ratio=check_ratio)[0]


def _witness(weight1, weight2, ordering=None, norm=None, check_ratio=True):
    _check_pair(weight1, weight2)

    ordering = ordering or compare(weight1, weight2)
    if ordering.ordering != Ordering.STRICT:
        raise EmbeddingError("A witness Gaussian exists only for strictly ordered weights, got {}.".format(ordering.ordering.name))

    subspace = stable_subspace(weight1, weight2)

    witness = GaussianPacket(subspace.T)
    if not in_space(witness, weight1):
        raise EmbeddingError("Witness Gaussian is not in H_Phi1.")

    sample = None
    if check_ratio:
        if norm is None:
            norm = _spectral_norm(weight1, weight2, embedding_spectrum(weight1, weight2, ordering).mus)

        sample = Oracle.ratio(subspace.T, weight1, weight2)
        if sample.ratio is None or abs(sample.ratio - norm) > Tolerances.WITNESS_ORACLE * norm:
            raise EmbeddingError("Witness ratio {} disagrees with the norm {:.15g}.".format(sample.ratio, norm))

    return subspace.T, subspace, sample


def _spectral_norm(weight1, weight2, mus):
    return float((levi_determinant_ratio(weight1, weight2) * np.prod(mus)) ** 0.25)


def embedding_norm(weight1, weight2, with_witness=True, crosscheck_eps=True, eps_ladder=Defaults.EPS_LADDER):
    """
    Norm of the embedding H_Phi1 -> H_Phi2,
    (det L1 / det L2 * prod mu_j)^(1/4), with verdict and diagnostics.

    Strictly ordered pairs also carry the witness Gaussian matrix; weakly
    ordered pairs carry the regularized limit as a cross-check.

    :param QuadraticWeight weight1: Source weight Phi1.
    :param QuadraticWeight weight2: Target weight Phi2.
    :param bool with_witness: Compute the witness for strict pairs.
    :param bool crosscheck_eps: Cross-check weakly ordered pairs against the
                                regularized limit.
    :param eps_ladder: Regularization values for the cross-check.

    :rtype: EmbeddingResult
    """
    _check_pair(weight1, weight2)

    ordering = compare(weight1, weight2)
    diagnostics = {
        "ordering_margin": ordering.margin,
        "ordering_tolerance": ordering.pd_tol,
        "reduced_norm": ordering.reduced_norm,
    }

    if ordering.ordering == Ordering.INCOMPARABLE:
        return EmbeddingResult(verdict=Verdict.UNBOUNDED, mus=[], diagnostics=diagnostics)

    spectrum = embedding_spectrum(weight1, weight2, ordering)
    det_ratio = levi_determinant_ratio(weight1, weight2)
    norm = float((det_ratio * np.prod(spectrum.mus)) ** 0.25)

    diagnostics.update({
        "spectrum": spectrum.eigenvalues,
        "imag_residual": spectrum.imag_residual,
        "pairing_residual": spectrum.pairing_residual,
        "spectrum_product": float(np.prod(spectrum.eigenvalues)),
        "snapped": spectrum.snapped,
        "eigen_condition": spectrum.worst_condition,
        "det_ratio": det_ratio,
    })

    if ordering.ordering == Ordering.STRICT:
        if with_witness:
            T, subspace, sample = _witness(weight1, weight2, ordering=ordering, norm=norm)

            stable_norm = abs(det_ratio * subspace.determinant) ** 0.25
            diagnostics.update({
                "stable_condition": subspace.condition,
                "stable_determinant": [subspace.determinant.real, subspace.determinant.imag],
                "stable_norm": stable_norm,
                "low_confidence": subspace.low_confidence,
                "witness_ratio": sample.ratio,
            })

            return EmbeddingResult(verdict=Verdict.BOUNDED_STRICT, mus=spectrum.mus, norm=norm, witness_T=T, diagnostics=diagnostics)

        return EmbeddingResult(verdict=Verdict.BOUNDED_STRICT, mus=spectrum.mus, norm=norm, diagnostics=diagnostics)

    if crosscheck_eps:
        limit = epsilon_limit_norm(weight1, weight2, eps_ladder)[-1]
        diagnostics["epsilon_limit"] = limit

        if abs(limit - norm) > 1e-5:
            raise EmbeddingError("Regularized limit {:.12g} disagrees with the norm {:.12g}.".format(limit, norm))

    return EmbeddingResult(verdict=Verdict.BOUNDED_NONSTRICT, mus=spectrum.mus, norm=norm, diagnostics=diagnostics)


def epsilon_limit_norm(weight1, weight2, eps_ladder=Defaults.EPS_LADDER, slack=1e-9):
    """
    Norms of the embeddings H_Phi1 -> H_Phi2_eps with
    Phi2_eps(x) = Phi2(x) + 1/2 eps |x|^2, along a decreasing ladder of eps.
    The sequence increases towards the norm of H_Phi1 -> H_Phi2.

    :rtype: list(float)
    """
    _check_pair(weight1, weight2)

    if compare(weight1, weight2).ordering == Ordering.INCOMPARABLE:
        raise EmbeddingError("The regularized limit needs ordered weights.")

    ladder = sorted(eps_ladder, reverse=True)
    norms = []

    for eps in ladder:
        result = embedding_norm(weight1, weight2.regularized(eps), with_witness=False, crosscheck_eps=False)
        if result.norm is None:
            raise EmbeddingError("Regularized pair at eps={:g} is unbounded.".format(eps))

        logging.debug("eps=%g norm=%.15g", eps, result.norm)

        if norms and result.norm < norms[-1] - slack:
            raise EmbeddingError("Regularized norms are not monotone at eps={:g}.".format(eps))

        norms.append(result.norm)

    return norms


def unboundedness_witness(weight1, weight2, rungs=Defaults.DELTA_LADDER_RUNGS):
    """
    For incomparable weights, a Gaussian in H_Phi1 that is not in H_Phi2.

    After reducing Phi1 to Phi0, x0 is the unit direction where Phi0 - Phi2
    is largest and the candidate is h_delta(x) = exp(pi delta (conj(x0) . x)^2),
    tried for delta = 0.9, 0.99, 0.999, ... and pulled back to the original
    coordinates.

    :param QuadraticWeight weight1: Source weight Phi1.
    :param QuadraticWeight weight2: Target weight Phi2.

    :rtype: UnboundednessWitness
    """
    _check_pair(weight1, weight2)

    if compare(weight1, weight2).ordering != Ordering.INCOMPARABLE:
        raise EmbeddingError("An unboundedness witness exists only for incomparable weights.")

    n = weight1.n
    reduced, reduction = reduce_to_standard(weight1, weight2)
    standard = QuadraticWeight.standard(n)

    values, vectors = np.linalg.eigh((reduced.real_form() - standard.real_form()).Q)
    direction = vectors[:, 0]
    x0 = direction[:n] + 1j * direction[n:]
    x0 = x0 / np.linalg.norm(x0)

    for rung in range(1, rungs + 1):
        delta = 1.0 - 10.0 ** (-rung)
        T_reduced = -1j * delta * np.outer(x0.conj(), x0.conj())

        candidate = GaussianPacket(reduction.pull_back_T(T_reduced))
        margin1 = candidate_margin(candidate, weight1)
        margin2 = candidate_margin(candidate, weight2)

        logging.debug("delta=%.12f margins %.3e / %.3e", delta, margin1, margin2)

        if in_space(candidate, weight1) and not in_space(candidate, weight2):
            logging.info("Unboundedness witness found at delta=%.12f", delta)
            return UnboundednessWitness(packet=candidate, delta=delta, x0=x0, margin1=margin1, margin2=margin2)

    raise EmbeddingError("No delta rung produced a Gaussian separating the spaces (least difference eigenvalue {:.3e}).".format(values[0]))


def candidate_margin(packet, weight):
    """
    Least eigenvalue of the decay form of |packet|^2 exp(-4 pi Phi).

    :rtype: float
    """
    return hphi_integrand(packet, packet, weight).decay_margin()


def embedding_canonical_map(weight1, weight2):
    """
    The canonical map B2^-1 B1 quantized by the embedding conjugated with the
    unitary Bargmann transforms of both weights. It is positive exactly when
    Phi2 >= Phi1.

    :rtype: CanonicalMap
    """
    _check_pair(weight1, weight2)
    return Generators.bargmann_map(weight2).inverse() @ Generators.bargmann_map(weight1)
