#include "abels/sampling.hpp"

#include "abels/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace abels {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

namespace {

VectorXl sorted_vector(Rng& rng, int size, int bound) {
  VectorXl v(size);
  for (int i = 0; i < size; ++i) v(i) = uniform(rng, -bound, bound);
  std::sort(v.data(), v.data() + size, std::greater<>());
  return v;
}

}  // namespace

VectorPair random_pair(Rng& rng, int min_size, int max_size, int bound) {
  const int size = static_cast<int>(uniform(rng, min_size, max_size));
  for (;;) {
    VectorXl w1 = sorted_vector(rng, size, bound);
    VectorXl w2 = sorted_vector(rng, size, bound);
    if (w1.sum() <= 0 || w2.sum() > 0 || w2.isZero()) continue;
    try {
      return VectorPair::validate(w1, w2);
    } catch (const Error&) {
      // Degenerate draws (w2 proportional to w1) are simply redrawn.
    }
  }
}

Partition random_partition(Rng& rng, int size) {
  std::vector<int> labels(static_cast<std::size_t>(size));
  for (auto& l : labels) l = static_cast<int>(uniform(rng, 0, size - 1));
  return Partition::from_labels(labels);
}

PScalar random_pscalar(Rng& rng, std::int64_t p, int lo, int hi, bool allow_zero) {
  if (allow_zero && uniform(rng, 0, 3) == 0) return PScalar(0, p);
  std::int64_t unit = 0;
  while (unit == 0) unit = uniform(rng, -p * p + 1, p * p - 1);
  return PScalar::from_parts(unit, static_cast<int>(uniform(rng, lo, hi)), p);
}

PMatrix random_invertible(Rng& rng, int dim, std::int64_t p, int lo, int hi) {
  for (;;) {
    PMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = random_pscalar(rng, p, lo, hi);
    if (determinant(g) != 0) return g;
  }
}

PMatrix random_unimodular(Rng& rng, int dim, std::int64_t p) {
  PMatrix lower = identity_matrix(dim, p);
  PMatrix upper = identity_matrix(dim, p);
  PMatrix diag = identity_matrix(dim, p);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (i > j) lower(i, j) = PScalar(uniform(rng, -2 * p, 2 * p), p);
      if (i < j) upper(i, j) = PScalar(uniform(rng, -2 * p, 2 * p), p);
    }
    std::int64_t unit = 0;
    while (unit == 0 || unit % p == 0) unit = uniform(rng, -p * p, p * p);
    diag(i, i) = PScalar(unit, p);
  }
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  PMatrix pm = PMatrix::Constant(dim, dim, PScalar(0, p));
  for (int i = 0; i < dim; ++i) pm(i, perm[static_cast<std::size_t>(i)]) = PScalar(1, p);
  return PMatrix(lower * upper * diag * pm);
}

PMatrix random_unipotent(Rng& rng, int dim, std::int64_t p, int lo, int hi) {
  PMatrix u = identity_matrix(dim, p);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) u(i, j) = random_pscalar(rng, p, lo, hi);
  }
  return u;
}

Lattice random_lattice(Rng& rng, int dim, std::int64_t p, int lo, int hi) {
  return Lattice::span(random_invertible(rng, dim, p, lo, hi), p);
}

std::vector<Partition> all_partitions(int size) {
  std::vector<Partition> out;
  std::vector<int> labels(static_cast<std::size_t>(size), 0);
  // Restricted growth strings in lexicographic order.
  std::function<void(int, int)> rec = [&](int pos, int max_label) {
    if (pos == size) {
      out.push_back(Partition::from_labels(labels));
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      labels[static_cast<std::size_t>(pos)] = l;
      rec(pos + 1, std::max(max_label, l));
    }
  };
  if (size > 0) {
    labels[0] = 0;
    rec(1, 0);
  }
  return out;
}

}  // namespace abels
