#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import csv
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..Embedding.Embedding import EmbeddingError, embedding_norm
from ..ImageHelpers import PILHelper
from ..Integrators.Integrator import IntegratorError
from ..LinearAlgebra.Dense import LinearAlgebraError
from ..Metaplectic.GaussianPacket import MetaplecticError, NotInSpaceError
from ..PhaseSpace.CanonicalMap import CanonicalMapError
from ..Tolerances import Defaults
from ..Weights.Ordering import OrderingError
from ..Weights.QuadraticWeight import QuadraticWeight


DEFAULT_A_VALUES = tuple(np.round(np.linspace(0.5, 5.0, 19), 12).tolist())
DEFAULT_B_VALUES = tuple(np.round(np.linspace(-4.0, 4.0, 33), 12).tolist())

CSV_FIELDS = ("a", "b_re", "b_im", "verdict", "norm")

# Library failures that mark a single grid point as ERROR.
POINT_ERRORS = (EmbeddingError, OrderingError, CanonicalMapError, MetaplecticError, NotInSpaceError, IntegratorError,
                LinearAlgebraError)


@dataclass
class SweepPoint:
    a: float
    b: complex
    verdict: str
    norm: float = None

    def row(self):
        return {
            "a": repr(self.a),
            "b_re": repr(self.b.real),
            "b_im": repr(self.b.imag),
            "verdict": self.verdict,
            "norm": "" if self.norm is None else repr(self.norm),
        }


def worker_count(environ=None):
    """
    Number of sweep workers: the HPHI_EMBED_THREADS environment variable if
    set, otherwise the CPU count.

    :rtype: int
    """
    environ = os.environ if environ is None else environ
    cpus = os.cpu_count() or 1

    value = environ.get(Defaults.THREADS_ENV)
    if not value:
        return cpus

    try:
        count = int(value)
    except ValueError:
        logging.warning("Ignoring non-integer %s=%r", Defaults.THREADS_ENV, value)
        return cpus

    return max(1, count)


def evaluate_point(a, b):
    """
    Embedding H_Phi0 -> H_Phi for Phi = 1/2 a |x|^2 + 1/2 Re(b x^2).

    :rtype: SweepPoint
    """
    b = complex(b)
    try:
        result = embedding_norm(QuadraticWeight.standard(1), QuadraticWeight.scalar(a, b), with_witness=False)
    except POINT_ERRORS as point_error:
        logging.warning("Sweep point a=%g b=%s failed: %s", a, b, point_error)
        return SweepPoint(float(a), b, "ERROR")

    return SweepPoint(float(a), b, result.verdict.name, result.norm)


def run_sweep(a_values=DEFAULT_A_VALUES, b_values=DEFAULT_B_VALUES, workers=None):
    """
    Evaluates the one dimensional family over the grid a_values x b_values.
    Points are independent and evaluated on a thread pool; the result keeps
    grid order.

    :rtype: list(list(SweepPoint))
    """
    workers = workers or worker_count()
    grid = [(a, b) for a in a_values for b in b_values]

    logging.info("Sweeping %d points on %d worker(s)", len(grid), workers)

    with ThreadPoolExecutor(max_workers=workers) as executor:
        points = list(executor.map(lambda point: evaluate_point(*point), grid))

    columns = len(b_values)
    return [points[row * columns:(row + 1) * columns] for row in range(len(a_values))]


def write_csv(path, rows):
    with open(path, "w", newline="") as csv_file:
        writer = csv.DictWriter(csv_file, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for row in rows:
            for point in row:
                writer.writerow(point.row())

    logging.info("Wrote sweep table to %s", path)


def write_image(path, rows, cell_size=(12, 12)):
    norms = [[point.norm for point in row] for row in rows]
    image = PILHelper.create_heatmap_image(norms, cell_size)

    with open(path, "wb") as image_file:
        image_file.write(PILHelper.to_png(image))

    logging.info("Wrote sweep image to %s", path)
