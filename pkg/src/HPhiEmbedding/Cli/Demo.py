#         Python H_Phi Embedding Library
#      Released under the MIT license
#

"""
Worked examples with known answers, each checked against the library and
reported as PASS or FAIL:

  - Levi-only pairs, whose norm is sqrt(det L1 / det L2), attained by the
    constant function.
  - The one dimensional family Phi0 -> 1/2 a |x|^2 + 1/2 Re(b x^2), whose
    norm and witness exponent tau have closed forms.
  - Its boundary a - |b| = 1, with norm a^(-1/4), reached only in the limit
    by regularization and by the Gaussians g_(delta tau).
"""

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from ..Embedding.Embedding import Verdict, embedding_norm, epsilon_limit_norm
from ..Oracle import Oracle
from ..Weights.QuadraticWeight import QuadraticWeight


@dataclass
class Claim:
    name: str
    passed: bool
    expected: float
    computed: float

    def status(self):
        return "PASS" if self.passed else "FAIL"


def _relative(computed, expected):
    return abs(computed - expected) / max(abs(expected), np.finfo(float).tiny)


def scalar_norm(a, b):
    """
    Closed-form norm of H_Phi0 -> H_Phi for Phi = 1/2 a |x|^2 + 1/2 Re(b x^2)
    with a - |b| >= 1.
    """
    s = 1.0 + a * a - abs(b) ** 2
    return ((s - math.sqrt(max(s * s - 4.0 * a * a, 0.0))) / (2.0 * a * a)) ** 0.25


def scalar_tau(a, b):
    """
    Closed-form witness exponent of the same family for a - |b| > 1, b != 0.
    Levi-only weights (b = 0) are attained by the constant, tau = 0.
    """
    b = complex(b)
    if b == 0:
        return 0j

    s = 1.0 + a * a - abs(b) ** 2
    return -1j * (1.0 - a * a + abs(b) ** 2 + math.sqrt(s * s - 4.0 * a * a)) / (2.0 * b.conjugate())


def levi_claims():
    claims = []

    for L2 in ([[4.0]], [[2.0, 0.5], [0.5, 3.0]], np.diag([1.5, 2.0, 4.0]).tolist()):
        n = len(L2)
        weight1 = QuadraticWeight.standard(n)
        weight2 = QuadraticWeight(L2)
        expected = math.sqrt(1.0 / np.linalg.det(np.array(L2)))

        result = embedding_norm(weight1, weight2)
        claims.append(Claim("levi norm n={}".format(n), _relative(result.norm, expected) <= 1e-9, expected, result.norm))

        witness_size = float(np.max(np.abs(result.witness_T)))
        claims.append(Claim("levi witness n={} is constant".format(n), witness_size <= 1e-8, 0.0, witness_size))

    return claims


def scalar_claims(a_values=(1.5, 2.0, 3.0, 5.0), phases=(0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0)):
    claims = []
    weight1 = QuadraticWeight.standard(1)

    for a in a_values:
        for modulus in (0.0, 0.2, a - 1.2):
            for phase in (phases if modulus else (0.0,)):
                b = modulus * cmath.exp(1j * phase)
                result = embedding_norm(weight1, QuadraticWeight.scalar(a, b))

                label = "a={:g} |b|={:g} arg={:.3f}".format(a, modulus, phase)

                expected = scalar_norm(a, b)
                claims.append(Claim("norm " + label, _relative(result.norm, expected) <= 1e-9, expected, result.norm))

                tau = scalar_tau(a, b)
                error = abs(complex(result.witness_T[0, 0]) - tau)
                claims.append(Claim("tau " + label, error <= 1e-8, abs(tau), abs(complex(result.witness_T[0, 0]))))

    return claims


def boundary_claims(a=2.0, b=1.0, deltas=(0.5, 0.9, 0.99)):
    claims = []
    weight1 = QuadraticWeight.standard(1)
    weight2 = QuadraticWeight.scalar(a, b)
    expected = a ** -0.25

    result = embedding_norm(weight1, weight2, crosscheck_eps=False)
    claims.append(Claim("boundary verdict", result.verdict == Verdict.BOUNDED_NONSTRICT, 0.0, 0.0))
    claims.append(Claim("boundary norm", _relative(result.norm, expected) <= 1e-9, expected, result.norm))

    limit = epsilon_limit_norm(weight1, weight2)[-1]
    claims.append(Claim("boundary regularized limit", abs(limit - expected) <= 1e-5, expected, limit))

    samples = Oracle.delta_sequence(a, b, deltas)
    for sample in samples:
        claims.append(Claim("delta={:g} ratio".format(sample.delta), abs(sample.integral - sample.closed_form) <= 1e-6, sample.closed_form, sample.integral))

    gaps = [abs(sample.closed_form - expected) for sample in samples]
    claims.append(Claim("delta ratios approach a^(-1/4)", all(later < earlier for earlier, later in zip(gaps, gaps[1:])), expected, samples[-1].closed_form))

    return claims


def run_demo():
    """
    Checks every worked example.

    :rtype: list(Claim)
    """
    claims = levi_claims() + scalar_claims() + boundary_claims()

    for claim in claims:
        log = logging.info if claim.passed else logging.error
        log("%s: %s (expected %.15g, computed %.15g)", claim.status(), claim.name, claim.expected, claim.computed)

    return claims
