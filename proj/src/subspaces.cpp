#include "abels/subspaces.hpp"

#include <algorithm>
#include <utility>

namespace abels {

namespace {

// Free positions of an echelon form with the given pivot columns: (row, column)
// pairs right of the row's pivot that are not pivot columns themselves.
std::vector<std::pair<int, int>> free_positions(int dim, const std::vector<int>& pivots) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (int c = pivots[r] + 1; c < dim; ++c) {
      if (!is_pivot[static_cast<std::size_t>(c)]) out.emplace_back(static_cast<int>(r), c);
    }
  }
  return out;
}

void for_each_pivot_set(int dim, int k, int start, std::vector<int>& current,
                        const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(current.size()) == k) {
    visit(current);
    return;
  }
  int remaining = k - static_cast<int>(current.size());
  for (int c = start; c <= dim - remaining; ++c) {
    current.push_back(c);
    for_each_pivot_set(dim, k, c + 1, current, visit);
    current.pop_back();
  }
}

}  // namespace

void for_each_subspace(int dim, int k, std::int64_t p,
                       const std::function<void(const EchelonBasis&)>& visit) {
  if (k < 0 || k > dim) return;
  std::vector<int> current;
  for_each_pivot_set(dim, k, 0, current, [&](const std::vector<int>& pivots) {
    EchelonBasis basis(static_cast<std::size_t>(k),
                       std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0));
    for (int r = 0; r < k; ++r) basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
    auto positions = free_positions(dim, pivots);
    // Odometer over all assignments of F_p values to the free positions.
    std::vector<std::int64_t> digits(positions.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < positions.size(); ++i) {
        basis[static_cast<std::size_t>(positions[i].first)][static_cast<std::size_t>(positions[i].second)] = digits[i];
      }
      visit(basis);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  });
}

void for_each_subspace(int dim, std::int64_t p,
                       const std::function<void(const EchelonBasis&)>& visit) {
  for (int k = 0; k <= dim; ++k) for_each_subspace(dim, k, p, visit);
}

std::int64_t gaussian_binomial(int n, int k, std::int64_t q) {
  if (k < 0 || k > n) return 0;
  // q-Pascal rule: [n, k] = [n-1, k-1] + q^k [n-1, k].
  std::vector<std::int64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      std::int64_t qj = 1;
      for (int t = 0; t < j; ++t) qj *= q;
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + qj * row[static_cast<std::size_t>(j)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace abels
