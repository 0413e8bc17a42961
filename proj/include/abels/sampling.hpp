#pragma once

// Seeded generators of random inputs for property checks. Every generator
// draws only from the engine it is given, so a seed fixes the whole sequence.

#include "abels/lattice.hpp"

#include <random>

namespace abels {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// A valid pair of length in [min_size, max_size] with entries in [-bound, bound].
VectorPair random_pair(Rng& rng, int min_size, int max_size, int bound = 3);

/// Uniform over labelings, normalized; not uniform over partitions.
Partition random_partition(Rng& rng, int size);

/// Nonzero unit * p^e with |unit| < p^2 and e in [lo, hi].
PScalar random_pscalar(Rng& rng, std::int64_t p, int lo, int hi, bool allow_zero = true);

/// Invertible matrix with entries of valuation in [lo, hi].
PMatrix random_invertible(Rng& rng, int dim, std::int64_t p, int lo = -1, int hi = 1);

/// Element of GL_dim(Z_p) with entries in Z: product of integral unipotent
/// lower and upper factors, a diagonal of units and a permutation.
PMatrix random_unimodular(Rng& rng, int dim, std::int64_t p);

/// Unipotent upper triangular over Z[1/p].
PMatrix random_unipotent(Rng& rng, int dim, std::int64_t p, int lo = -2, int hi = 2);

Lattice random_lattice(Rng& rng, int dim, std::int64_t p, int lo = -1, int hi = 1);

/// Every partition of {0, ..., size-1}.
std::vector<Partition> all_partitions(int size);

}  // namespace abels
