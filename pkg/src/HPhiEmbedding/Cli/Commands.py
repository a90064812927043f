#         Python H_Phi Embedding Library
#      Released under the MIT license
#

"""
The ``hphi-embed`` command line tool. Each command reads a problem document
(except ``demo`` and ``sweep``), computes and writes a JSON report, and exits
with

    0  success
    1  the embedding is unbounded (``norm``, ``witness`` and ``verify``)
    2  malformed input
    3  an internal cross-check failed
"""

import argparse
import logging
import sys

import numpy as np

from ..Embedding.Embedding import EmbeddingError, Verdict, embedding_norm, embedding_spectrum, unboundedness_witness
from ..Integrators.Integrator import IntegratorError
from ..LinearAlgebra.Dense import LinearAlgebraError
from ..Metaplectic.GaussianPacket import GaussianPacket, MetaplecticError, NotInSpaceError
from ..Metaplectic.Norms import in_space
from ..Oracle import Oracle
from ..PhaseSpace.CanonicalMap import CanonicalMapError
from ..Tolerances import Defaults, Tolerances
from ..Weights.Ordering import Ordering, OrderingError, compare
from ..Weights.QuadraticWeight import WeightError
from . import Demo, ProblemSpec, Sweep
from .Report import Report


EXIT_OK = 0
EXIT_UNBOUNDED = 1
EXIT_INPUT = 2
EXIT_CROSSCHECK = 3

COMMANDS = ("check", "spectrum", "norm", "witness", "verify", "demo", "sweep")

# Least relative agreement required between quadrature and the closed form.
QUADRATURE_AGREEMENT = 1e-6

# Fraction of the norm the random search must reach on strict pairs.
SEARCH_REACH = 1e-3


class CrossCheckError(Exception):
    """
    Exception thrown when a verification step disagrees with the computed
    norm.
    """

    pass


def _attach_result(report, result):
    report["verdict"] = result.verdict
    report["mus"] = result.mus
    report["norm"] = result.norm
    report["witness_T"] = result.witness_T
    report["diagnostics"] = result.diagnostics


def _attach_unbounded(report, spec):
    witness = unboundedness_witness(spec.weight1, spec.weight2)
    report["unboundedness_witness"] = {
        "T": witness.packet.T,
        "delta": witness.delta,
        "x0": witness.x0,
        "margin1": witness.margin1,
        "margin2": witness.margin2,
    }
    return witness


def command_check(report, spec, args):
    ordering = compare(spec.weight1, spec.weight2)

    report["verdict"] = ordering.ordering
    report["margin"] = ordering.margin
    report["tolerance"] = ordering.pd_tol
    report["reduced_norm"] = ordering.reduced_norm

    return EXIT_OK


def command_spectrum(report, spec, args):
    ordering = compare(spec.weight1, spec.weight2)
    report["ordering"] = ordering.ordering

    if ordering.ordering == Ordering.INCOMPARABLE:
        report["verdict"] = Verdict.UNBOUNDED
        report["mus"] = []
        return EXIT_OK

    spectrum = embedding_spectrum(spec.weight1, spec.weight2, ordering)

    report["mus"] = spectrum.mus
    report["eigenvalues"] = spectrum.eigenvalues
    report["diagnostics"] = {
        "imag_residual": spectrum.imag_residual,
        "pairing_residual": spectrum.pairing_residual,
        "snapped": spectrum.snapped,
        "eigen_condition": spectrum.worst_condition,
    }

    return EXIT_OK


def command_norm(report, spec, args):
    result = embedding_norm(spec.weight1, spec.weight2, eps_ladder=spec.eps_ladder)
    _attach_result(report, result)

    if result.verdict == Verdict.UNBOUNDED:
        _attach_unbounded(report, spec)
        return EXIT_UNBOUNDED

    return EXIT_OK


def command_witness(report, spec, args):
    result = embedding_norm(spec.weight1, spec.weight2, eps_ladder=spec.eps_ladder)

    report["verdict"] = result.verdict
    report["norm"] = result.norm
    report["witness_T"] = result.witness_T

    if result.verdict == Verdict.UNBOUNDED:
        _attach_unbounded(report, spec)
        return EXIT_UNBOUNDED

    if result.verdict == Verdict.BOUNDED_NONSTRICT:
        report["note"] = "No Gaussian attains the norm of a weakly ordered pair; see diagnostics.epsilon_limit."
        report["diagnostics"] = result.diagnostics

    return EXIT_OK


def _quadrature_errors(packet, spec):
    errors = []
    for weight in (spec.weight1, spec.weight2):
        try:
            errors.append(Oracle.quadrature_check(packet, weight)[2])
        except IntegratorError as quadrature_error:
            logging.info("Skipping quadrature cross-check: %s", quadrature_error)
            return None

    return max(errors)


def command_verify(report, spec, args):
    tol = spec.option("tol", Tolerances.WITNESS_ORACLE)

    result = embedding_norm(spec.weight1, spec.weight2, eps_ladder=spec.eps_ladder)
    _attach_result(report, result)

    checks = {}
    oracle = {}
    report["checks"] = checks
    report["oracle"] = oracle

    if result.verdict == Verdict.UNBOUNDED:
        witness = _attach_unbounded(report, spec)
        checks["witness_in_space1"] = in_space(witness.packet, spec.weight1)
        checks["witness_outside_space2"] = not in_space(witness.packet, spec.weight2)

        if not all(checks.values()):
            raise CrossCheckError("Unboundedness witness does not separate the spaces.")

        return EXIT_UNBOUNDED

    norm = result.norm

    if result.witness_T is not None:
        sample = Oracle.ratio(result.witness_T, spec.weight1, spec.weight2)
        oracle["witness_ratio"] = sample.ratio
        checks["witness_ratio"] = sample.ratio is not None and abs(sample.ratio - norm) <= tol * norm

    best_ratio, best_T = Oracle.random_search_norm(spec.weight1, spec.weight2, trials=spec.trials, seed=spec.seed)
    oracle["best_random_ratio"] = best_ratio
    oracle["best_random_T"] = best_T

    if best_ratio is not None:
        checks["random_below_norm"] = best_ratio <= norm * (1.0 + Tolerances.RATIO_UPPER)

        if result.verdict == Verdict.BOUNDED_STRICT and spec.trials >= Defaults.TRIALS:
            checks["random_reaches_norm"] = best_ratio >= norm * (1.0 - SEARCH_REACH)

    if spec.n == 1:
        T = result.witness_T if result.witness_T is not None else -1j * np.array(spec.weight1.P)
        rel_err = _quadrature_errors(GaussianPacket(T), spec)
        oracle["quadrature_rel_err"] = rel_err

        if rel_err is not None:
            checks["quadrature"] = rel_err <= QUADRATURE_AGREEMENT

    failed = [name for name, passed in checks.items() if not passed]
    if failed:
        raise CrossCheckError("Verification failed: {}.".format(", ".join(failed)))

    return EXIT_OK


def command_demo(report, spec, args):
    claims = Demo.run_demo()

    report["claims"] = [
        {"name": claim.name, "status": claim.status(), "expected": claim.expected, "computed": claim.computed}
        for claim in claims
    ]
    report["passed"] = all(claim.passed for claim in claims)

    return EXIT_OK if report["passed"] else EXIT_CROSSCHECK


def command_sweep(report, spec, args):
    a_values = args.a_values or Sweep.DEFAULT_A_VALUES
    b_values = args.b_values or Sweep.DEFAULT_B_VALUES

    rows = Sweep.run_sweep(a_values, b_values)

    report["table"] = [point.row() for row in rows for point in row]

    if args.csv:
        Sweep.write_csv(args.csv, rows)

    if args.image:
        Sweep.write_image(args.image, rows)

    return EXIT_OK


HANDLERS = {
    "check": command_check,
    "spectrum": command_spectrum,
    "norm": command_norm,
    "witness": command_witness,
    "verify": command_verify,
    "demo": command_demo,
    "sweep": command_sweep,
}


def _float_list(text):
    try:
        values = [float(entry) for entry in text.split(",") if entry.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated numbers, got {!r}".format(text))

    if not values:
        raise argparse.ArgumentTypeError("expected at least one number")

    return values


def build_parser():
    parser = argparse.ArgumentParser(prog="hphi-embed", description="Norm of the embedding between Gaussian-weighted spaces of entire functions.")
    parser.add_argument("command", choices=COMMANDS, help="Command to run")
    parser.add_argument("--input", help="Problem document (JSON)")
    parser.add_argument("--output", help="Report file, standard output if omitted")
    parser.add_argument("--seed", type=int, help="Random search seed")
    parser.add_argument("--trials", type=int, help="Random search trials")
    parser.add_argument("--eps-ladder", type=_float_list, help="Regularization values, comma separated")
    parser.add_argument("--tol", type=float, help="Relative agreement required by verify")
    parser.add_argument("--csv", help="Sweep table output (CSV)")
    parser.add_argument("--image", help="Sweep heat map output (PNG)")
    parser.add_argument("--a-values", type=_float_list, help="Sweep values of a, comma separated")
    parser.add_argument("--b-values", type=_float_list, help="Sweep values of b, comma separated")
    parser.add_argument("--quiet", action="store_true", help="Only log warnings and errors")
    parser.add_argument("--verbose", action="store_true", help="Log debug output")
    return parser


def _load_spec(args):
    if args.command in ("demo", "sweep"):
        return None

    if not args.input:
        raise ProblemSpec.ProblemSpecError("$: the {} command needs --input.".format(args.command))

    spec = ProblemSpec.load(args.input)
    return spec.with_options(seed=args.seed, trials=args.trials, eps_ladder=args.eps_ladder, tol=args.tol)


def run(command, args):
    """
    Runs one command.

    :param str command: One of :data:`COMMANDS`.
    :param argparse.Namespace args: Parsed arguments.

    :rtype: (int, Report)
    :return: The exit code and the report.
    """
    report = Report(command)

    try:
        spec = _load_spec(args)
        report.spec = spec
        code = HANDLERS[command](report, spec, args)
    except (ProblemSpec.ProblemSpecError, WeightError) as input_error:
        logging.error("Input error: %s", input_error.args[0])
        report["error"] = str(input_error.args[0])
        code = EXIT_INPUT
    except (CrossCheckError, OrderingError, CanonicalMapError, EmbeddingError, MetaplecticError,
            NotInSpaceError, IntegratorError, LinearAlgebraError) as check_error:
        logging.error("Cross-check failed: %s", check_error.args[0])
        report["error"] = str(check_error.args[0])
        code = EXIT_CROSSCHECK

    report["exit_code"] = code
    return code, report


def main(argv=None):
    args = build_parser().parse_args(argv)

    level = logging.INFO
    if args.quiet:
        level = logging.WARNING
    elif args.verbose:
        level = logging.DEBUG

    logging.basicConfig(level=level)

    code, report = run(args.command, args)

    if args.output:
        report.write(args.output)
        logging.info("Wrote report to %s", args.output)
    else:
        print(report.to_json())

    return code


if __name__ == "__main__":
    sys.exit(main())
