#!/usr/bin/env python3

#         Python H_Phi Embedding Library
#      Released under the MIT license
#

# Example script that computes the norm of the embedding between two one
# dimensional weighted spaces, prints the witness Gaussian and checks it
# against the independent norm ratio.

from HPhiEmbedding.Embedding.Embedding import embedding_norm
from HPhiEmbedding.Oracle import Oracle
from HPhiEmbedding.Weights.QuadraticWeight import QuadraticWeight


# Prints the outcome of the embedding H_Phi1 -> H_Phi2.
def print_embedding(weight1, weight2):
    result = embedding_norm(weight1, weight2)

    print("Verdict: {}".format(result.verdict.name))
    if result.norm is None:
        return

    print("\t - Norm: {:.15g}".format(result.norm))
    print("\t - mu: {}".format(", ".join("{:.12g}".format(mu) for mu in result.mus)))

    if result.witness_T is not None:
        sample = Oracle.ratio(result.witness_T, weight1, weight2)
        print("\t - Witness T: {}".format(result.witness_T.tolist()))
        print("\t - Norm ratio at the witness: {:.15g}".format(sample.ratio))


if __name__ == "__main__":
    standard = QuadraticWeight.standard(1)

    for a, b in ((4.0, 0.0), (3.0, 1.0), (2.0, 1.0), (1.5, 1.0)):
        print("Phi2 = 1/2 {} |x|^2 + 1/2 Re({} x^2)".format(a, b))
        print_embedding(standard, QuadraticWeight.scalar(a, b))
        print()
