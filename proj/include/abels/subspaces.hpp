#pragma once

// Enumeration of subspaces of F_p^dim by reduced row echelon form.

#include <cstdint>
#include <functional>
#include <vector>

namespace abels {

/// Basis of a subspace as rows of a reduced row echelon matrix over F_p.
/// Entries are in [0, p).
using EchelonBasis = std::vector<std::vector<std::int64_t>>;

/// Calls `visit` once for every k-dimensional subspace of F_p^dim.
void for_each_subspace(int dim, int k, std::int64_t p,
                       const std::function<void(const EchelonBasis&)>& visit);

/// Calls `visit` for every subspace of F_p^dim, all dimensions 0..dim.
void for_each_subspace(int dim, std::int64_t p,
                       const std::function<void(const EchelonBasis&)>& visit);

/// Gaussian binomial [n choose k]_q.
std::int64_t gaussian_binomial(int n, int k, std::int64_t q);

}  // namespace abels
