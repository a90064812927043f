#         Python H_Phi Embedding Library
#      Released under the MIT license
#


class Tolerances:
    """
    Numerical tolerances shared by the library. Every public function that
    consumes one of these accepts a keyword override.
    """

    # Relative Hermitian/symmetric defect admitted on user supplied matrices.
    HERMITIAN_REL = 1e-10

    # Condition number above which inverse() and solve() refuse to answer.
    CONDITION_MAX = 1e12

    # Eigenvalue condition number above which a spectrum is flagged.
    EIGEN_CONDITION_WARN = 1e8

    # Ordering band: pd_tol = PD_REL * (1 + |Q2| + |Q1|).
    PD_REL = 1e-9

    # Real-form versus operator-norm criterion comparison band.
    ORDERING_CROSSCHECK = 1e-6

    # Canonical and positivity checks.
    CANONICAL_DEFECT = 1e-9
    POSITIVITY = 1e-9

    # Construction routes of A_Phi must agree to this (relative).
    ROUTE_AGREEMENT = 1e-11

    # Integrability: min eigenvalue of the real exponent form over its scale.
    INTEGRABLE_REL = 1e-10

    # Symmetry of Gaussian matrices T.
    SYMMETRIC_T = 1e-10

    # Spectrum of A_Phi2^-1 A_Phi1: imaginary residue, reciprocal pairing and
    # the radius around 1 inside which split Jordan clusters are snapped.
    SPECTRUM_IMAG = 1e-8
    SPECTRUM_PAIRING = 1e-7
    JORDAN_SNAP = 1e-7

    # Witness extraction.
    WITNESS_SYMMETRY = 1e-8
    WITNESS_CONDITION_WARN = 1e8
    WITNESS_ORACLE = 1e-8

    # Upper-bound slack used when comparing sampled ratios with the norm.
    RATIO_UPPER = 1e-8


class Defaults:
    """
    Default run parameters, overridable from a problem document or the command
    line.
    """

    SEED = 0
    TRIALS = 2000
    EPS_LADDER = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10)
    DELTA_LADDER_RUNGS = 12
    QUADRATURE_ORDER = 80
    THREADS_ENV = "HPHI_EMBED_THREADS"
    INTEGRATOR_ENV = "HPHI_EMBED_INTEGRATOR"
