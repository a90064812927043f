#!/usr/bin/env python3

#         Python H_Phi Embedding Library
#      Released under the MIT license
#

# Example script that finds a Gaussian lying in H_Phi1 but not in H_Phi2 for
# a pair of weights that are not ordered, and renders a small sweep of the
# one dimensional family as a heat map.

import logging

from HPhiEmbedding.Cli import Sweep
from HPhiEmbedding.Embedding.Embedding import unboundedness_witness
from HPhiEmbedding.Weights.QuadraticWeight import QuadraticWeight


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)

    weight1 = QuadraticWeight.standard(1)
    weight2 = QuadraticWeight.scalar(1.5, 1.0)

    witness = unboundedness_witness(weight1, weight2)

    print("Gaussian T = {}".format(witness.packet.T.tolist()))
    print("\t - delta: {}".format(witness.delta))
    print("\t - direction x0: {}".format(witness.x0.tolist()))
    print("\t - decay margin in H_Phi1: {:.6g}".format(witness.margin1))
    print("\t - decay margin in H_Phi2: {:.6g}".format(witness.margin2))

    rows = Sweep.run_sweep(a_values=[0.5 + 0.25 * i for i in range(19)], b_values=[-2.0 + 0.25 * j for j in range(17)])
    Sweep.write_image("sweep.png", rows)
