#pragma once

// Helpers for points of the geometric realization: the interval cover used to
// split a real coordinate into a vertex index and a barycentric weight, and
// the affine extension of epsilon.

#include "abels/lattice.hpp"

#include <utility>

namespace abels {

/// c_i = sum_{j=0}^{n-1} alpha_{(i+j) mod n} (i+j)/n
Rational cover_offset(const RationalVector& alpha, std::int64_t i);

struct IntervalCover {
  std::int64_t i = 0;
  Rational beta;
};

/// The unique i with alpha_{i mod n} > 0 and c_i < r <= c_i + alpha_{i mod n},
/// together with beta = 1 - (r - c_i) / alpha_{i mod n} in [0, 1).
/// Throws InvalidArgument unless alpha >= 0 and sum alpha = 1.
IntervalCover interval_cover(const RationalVector& alpha, const Rational& r);

/// beta alpha_i i/n + sum_{j=1}^{n-1} alpha_{i+j} (i+j)/n + (1-beta) alpha_{i+n} (i+n)/n,
/// indices taken mod n on alpha.
Rational cover_reconstruct(const RationalVector& alpha, std::int64_t i, const Rational& beta);

/// Convex combination sum_v t_v epsilon(v) over the vertices of a simplex.
/// Throws NotASimplex (vertices do not form a flag) or InvalidArgument
/// (negative weights or weights not summing to one).
Rational epsilon_affine(const std::vector<std::pair<Lattice, Rational>>& point);

}  // namespace abels
