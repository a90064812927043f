#!/usr/bin/env python3

#         Python H_Phi Embedding Library
#      Released under the MIT license
#

import argparse
import logging
import os
import sys

import pytest


TEST_DIR = os.path.dirname(os.path.abspath(__file__))

sys.path.insert(0, os.path.join(TEST_DIR, '../src'))

from HPhiEmbedding.Integrators.IntegratorManager import IntegratorManager, ProbeError  # noqa: E402
from HPhiEmbedding.Tolerances import Defaults  # noqa: E402


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)

    parser = argparse.ArgumentParser(description="H_Phi Embedding Library test.")
    parser.add_argument("--integrator", help="Integration back-end that must be available")
    parser.add_argument("--test", help="Test battery to run")
    parser.add_argument("pytest_args", nargs="*", help="Extra arguments passed on to pytest")
    args = parser.parse_args()

    try:
        manager = IntegratorManager(args.integrator)
    except ProbeError as probe_error:
        logging.error("Error: {} Known integrators: {}".format(probe_error.args[0], IntegratorManager.names()))
        sys.exit(1)

    logging.info("Using Integrator: {}".format(manager.integrator.name()))
    os.environ[Defaults.INTEGRATOR_ENV] = manager.integrator.name()

    tests = {
        "Linear Algebra": "test_linalg.py",
        "Weights": "test_weights.py",
        "Symplectic": "test_symplectic.py",
        "Integrators": "test_integrators.py",
        "Metaplectic": "test_metaplectic.py",
        "Embedding": "test_embedding.py",
        "Oracle": "test_oracle.py",
        "Command Line": "test_cli.py",
    }

    test_runners = tests
    if args.test:
        test_runners = {name: test for (name, test) in test_runners.items() if name == args.test}

    if len(test_runners) == 0:
        logging.error("Error: No tests to run. Known tests: {}".format([name for name, test in tests.items()]))
        sys.exit(1)

    failures = 0
    for name, test in test_runners.items():
        logging.info("Running Test: {}".format(name))
        result = pytest.main([os.path.join(TEST_DIR, test), "-q"] + args.pytest_args)
        logging.info("Finished Test: {} ({})".format(name, "passed" if result == 0 else "FAILED"))

        if result != 0:
            failures += 1

    sys.exit(1 if failures else 0)
