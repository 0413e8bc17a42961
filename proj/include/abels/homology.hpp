#pragma once

// Integral simplicial homology of finite complexes.

#include "abels/integer_matrix.hpp"
#include "abels/simplicial.hpp"

#include <Eigen/SparseCore>

#include <string_view>

namespace abels {

using SparseIntMatrix = Eigen::SparseMatrix<std::int64_t>;

/// boundary[k] : C_k -> C_{k-1} for k >= 1 in the sorted simplex bases;
/// boundary[0] is the augmentation C_0 -> Z.
struct ChainComplex {
  std::vector<SparseIntMatrix> boundary;
  std::vector<std::size_t> ranks;  // number of k-simplices
};

ChainComplex boundary_matrices(const SimplicialComplex& x);

struct SmithSummary {
  int rank = 0;
  /// Elementary divisors greater than one.
  std::vector<BigInt> torsion;
};

/// Rank and torsion divisors of a sparse integer matrix. Unit pivots are
/// eliminated sparsely; whatever remains goes through a dense Smith form.
SmithSummary smith_summary(const SparseIntMatrix& m);

struct DegreeHomology {
  int k = 0;
  std::int64_t betti = 0;
  std::vector<BigInt> torsion;

  bool is_zero() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

/// Reduced homology in degrees 0..dim. Throws EmptyComplex.
std::vector<DegreeHomology> reduced_homology(const SimplicialComplex& x);

enum class MapClass { Zero, Injective, NonInjectiveNonzero };
std::string_view map_class_name(MapClass c);

struct InducedMap {
  MapClass kind = MapClass::Zero;
  /// Rank of the source group and of the image (torsion-free parts).
  std::int64_t source_rank = 0;
  std::int64_t image_rank = 0;
};

/// Classifies H~_k(sub) -> H~_k(sup). A trivial source counts as Zero.
/// Throws NotSubcomplex or EmptyComplex.
InducedMap induced_map_class(const SimplicialComplex& sub, const SimplicialComplex& sup, int k);

/// Number of connected components.
std::size_t component_count(const SimplicialComplex& x);

}  // namespace abels
