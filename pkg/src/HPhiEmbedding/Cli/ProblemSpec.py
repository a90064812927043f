#         Python H_Phi Embedding Library
#      Released under the MIT license
#

"""
Input documents of the command-line tool. A problem is a JSON object

    {
        "n": 1,
        "weight1": {"L": [[[1, 0]]], "P": [[[0, 0]]]},
        "weight2": {"L": [[[3, 0]]], "P": [[[1, 0]]]},
        "options": {"seed": 0, "trials": 2000, "eps_ladder": [0.1, 0.01], "tol": 1e-9}
    }

with every complex number written as a two-element [re, im] array and every
matrix as row-major nested arrays.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from ..Tolerances import Defaults
from ..Weights.QuadraticWeight import QuadraticWeight, WeightError


class ProblemSpecError(Exception):
    """
    Exception thrown when an input document is malformed. The message starts
    with the JSON path of the offending element.
    """

    pass


OPTION_KEYS = ("seed", "trials", "eps_ladder", "tol")


@dataclass
class ProblemSpec:
    """
    A pair of weights together with the run options.
    """

    weight1: QuadraticWeight
    weight2: QuadraticWeight
    options: dict = field(default_factory=dict)

    @property
    def n(self):
        return self.weight1.n

    def option(self, key, default=None):
        return self.options.get(key, default)

    @property
    def seed(self):
        return self.option("seed", Defaults.SEED)

    @property
    def trials(self):
        return self.option("trials", Defaults.TRIALS)

    @property
    def eps_ladder(self):
        return tuple(self.option("eps_ladder", Defaults.EPS_LADDER))

    def with_options(self, **overrides):
        """
        Returns a copy with the given options replaced, ignoring None values.

        :rtype: ProblemSpec
        """
        options = dict(self.options)
        options.update({key: value for key, value in overrides.items() if value is not None})
        return ProblemSpec(self.weight1, self.weight2, options)

    def to_document(self):
        return {
            "n": self.n,
            "weight1": _weight_to_document(self.weight1),
            "weight2": _weight_to_document(self.weight2),
            "options": dict(self.options),
        }

    def __eq__(self, other):
        if not isinstance(other, ProblemSpec):
            return NotImplemented

        return (self.weight1.is_close(other.weight1, tol=0)
                and self.weight2.is_close(other.weight2, tol=0)
                and self.options == other.options)


def _complex(value, path):
    if (not isinstance(value, list) or len(value) != 2
            or not all(isinstance(part, (int, float)) and not isinstance(part, bool) for part in value)):
        raise ProblemSpecError("{}: expected a [re, im] pair, got {!r}.".format(path, value))

    number = complex(value[0], value[1])
    if not np.isfinite(number):
        raise ProblemSpecError("{}: entry is not finite.".format(path))

    return number


def _matrix(value, n, path):
    if not isinstance(value, list) or len(value) != n:
        raise ProblemSpecError("{}: expected {} rows.".format(path, n))

    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != n:
            raise ProblemSpecError("{}[{}]: expected {} entries.".format(path, i, n))

        rows.append([_complex(entry, "{}[{}][{}]".format(path, i, j)) for j, entry in enumerate(row)])

    return np.array(rows, dtype=complex)


def _weight(value, n, path):
    if not isinstance(value, dict):
        raise ProblemSpecError("{}: expected an object with keys L and P.".format(path))

    unknown = set(value) - {"L", "P"}
    if unknown:
        raise ProblemSpecError("{}: unknown keys {}.".format(path, sorted(unknown)))

    if "L" not in value:
        raise ProblemSpecError("{}.L: missing.".format(path))

    L = _matrix(value["L"], n, path + ".L")
    P = _matrix(value["P"], n, path + ".P") if "P" in value else None

    try:
        return QuadraticWeight(L, P)
    except WeightError as weight_error:
        raise ProblemSpecError("{}: {}".format(path, weight_error.args[0]))


def _options(value, path):
    if not isinstance(value, dict):
        raise ProblemSpecError("{}: expected an object.".format(path))

    options = {}
    for key, entry in value.items():
        entry_path = "{}.{}".format(path, key)

        if key not in OPTION_KEYS:
            raise ProblemSpecError("{}: unknown option.".format(entry_path))

        if key in ("seed", "trials"):
            if not isinstance(entry, int) or isinstance(entry, bool) or entry < 0:
                raise ProblemSpecError("{}: expected a non-negative integer.".format(entry_path))
        elif key == "eps_ladder":
            if (not isinstance(entry, list) or not entry
                    or not all(isinstance(eps, (int, float)) and not isinstance(eps, bool) and eps > 0 for eps in entry)):
                raise ProblemSpecError("{}: expected a non-empty list of positive numbers.".format(entry_path))
            entry = [float(eps) for eps in entry]
        elif key == "tol":
            if not isinstance(entry, (int, float)) or isinstance(entry, bool) or entry <= 0:
                raise ProblemSpecError("{}: expected a positive number.".format(entry_path))
            entry = float(entry)

        options[key] = entry

    return options


def from_document(document):
    """
    Builds a problem from a decoded JSON document.

    :rtype: ProblemSpec
    """
    if not isinstance(document, dict):
        raise ProblemSpecError("$: expected an object.")

    unknown = set(document) - {"n", "weight1", "weight2", "options"}
    if unknown:
        raise ProblemSpecError("$: unknown keys {}.".format(sorted(unknown)))

    n = document.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ProblemSpecError("$.n: expected a positive integer, got {!r}.".format(n))

    for key in ("weight1", "weight2"):
        if key not in document:
            raise ProblemSpecError("$.{}: missing.".format(key))

    return ProblemSpec(
        weight1=_weight(document["weight1"], n, "$.weight1"),
        weight2=_weight(document["weight2"], n, "$.weight2"),
        options=_options(document.get("options", {}), "$.options"),
    )


def parse(text):
    """
    Parses a problem from JSON text.

    :param str text: JSON document.

    :rtype: ProblemSpec
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as decode_error:
        raise ProblemSpecError("$: invalid JSON at line {} column {} ({}).".format(decode_error.lineno, decode_error.colno, decode_error.msg))

    return from_document(document)


def load(path):
    try:
        with open(path, "r") as input_file:
            return parse(input_file.read())
    except OSError as io_error:
        raise ProblemSpecError("$: cannot read {} ({}).".format(path, io_error.strerror))


def complex_to_document(value):
    value = complex(value)
    return [value.real, value.imag]


def matrix_to_document(M):
    return [[complex_to_document(entry) for entry in row] for row in np.asarray(M)]


def _weight_to_document(weight):
    return {"L": matrix_to_document(weight.L), "P": matrix_to_document(weight.P)}


def serialize(spec):
    """
    Serializes a problem to JSON text. Floats are written in their shortest
    round-tripping form, so parse(serialize(spec)) reproduces spec exactly.

    :rtype: str
    """
    return json.dumps(spec.to_document(), indent=2, sort_keys=True)


def scalar_pair(a, b, a1=1.0, b1=0.0, **options):
    """
    Problem in the one dimensional family 1/2 a |x|^2 + 1/2 Re(b x^2).

    :rtype: ProblemSpec
    """
    return ProblemSpec(QuadraticWeight.scalar(a1, b1), QuadraticWeight.scalar(a, b), dict(options))
