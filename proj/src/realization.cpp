#include "abels/realization.hpp"

#include "abels/errors.hpp"

namespace abels {

namespace {

const Rational& alpha_at(const RationalVector& alpha, std::int64_t i) {
  const auto n = static_cast<std::int64_t>(alpha.size());
  return alpha(static_cast<Eigen::Index>(((i % n) + n) % n));
}

void validate_weights(const RationalVector& alpha) {
  if (alpha.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty weight vector");
  Rational sum = 0;
  for (Eigen::Index j = 0; j < alpha.size(); ++j) {
    if (alpha(j) < 0) throw Error(ErrorKind::InvalidArgument, "negative weight");
    sum += alpha(j);
  }
  if (sum != 1) throw Error(ErrorKind::InvalidArgument, "weights must sum to 1");
}

}  // namespace

Rational cover_offset(const RationalVector& alpha, std::int64_t i) {
  const auto n = static_cast<std::int64_t>(alpha.size());
  Rational c = 0;
  for (std::int64_t j = 0; j < n; ++j) c += alpha_at(alpha, i + j) * Rational(i + j, n);
  return c;
}

IntervalCover interval_cover(const RationalVector& alpha, const Rational& r) {
  validate_weights(alpha);
  const auto n = static_cast<std::int64_t>(alpha.size());
  // c_{i+n} = c_i + 1, so this start lies at least one full period below r.
  const Rational c0 = cover_offset(alpha, 0);
  const BigInt periods = floor(r - c0) - 1;
  if (periods > BigInt(std::numeric_limits<std::int64_t>::max() / (2 * n)) ||
      periods < BigInt(std::numeric_limits<std::int64_t>::min() / (2 * n))) {
    throw Error(ErrorKind::PrecisionExceeded, "point too far from the origin");
  }
  std::int64_t i = n * static_cast<std::int64_t>(periods);
  Rational c = c0 + Rational(periods);
  // Step through consecutive intervals (c_i, c_i + alpha_i].
  while (c + alpha_at(alpha, i) < r) {
    c += alpha_at(alpha, i);
    ++i;
  }
  IntervalCover out;
  out.i = i;
  out.beta = 1 - (r - c) / alpha_at(alpha, i);
  return out;
}

Rational cover_reconstruct(const RationalVector& alpha, std::int64_t i, const Rational& beta) {
  const auto n = static_cast<std::int64_t>(alpha.size());
  Rational r = beta * alpha_at(alpha, i) * Rational(i, n);
  for (std::int64_t j = 1; j < n; ++j) r += alpha_at(alpha, i + j) * Rational(i + j, n);
  r += (1 - beta) * alpha_at(alpha, i + n) * Rational(i + n, n);
  return r;
}

Rational epsilon_affine(const std::vector<std::pair<Lattice, Rational>>& point) {
  if (point.empty()) throw Error(ErrorKind::NotASimplex, "empty point");
  std::vector<Lattice> chain;
  Rational sum = 0;
  Rational value = 0;
  for (const auto& [v, t] : point) {
    if (t < 0) throw Error(ErrorKind::InvalidArgument, "negative barycentric weight");
    chain.push_back(v);
    sum += t;
    value += t * epsilon(v);
  }
  if (sum != 1) throw Error(ErrorKind::InvalidArgument, "barycentric weights must sum to 1");
  if (!chain_is_simplex(chain)) throw Error(ErrorKind::NotASimplex, "vertices do not form a flag");
  return value;
}

}  // namespace abels
