#pragma once

// Finite abstract simplicial complexes over integer vertex ids.

#include <cstdint>
#include <vector>

namespace abels {

/// Sorted, duplicate free vertex ids.
using Simplex = std::vector<int>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of `simplices` under taking faces. Each input is sorted first.
  static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

  /// Takes per-dimension simplex lists that are already face closed; sorts
  /// them. Used by builders that generate every face themselves.
  static SimplicialComplex from_closed(std::vector<std::vector<Simplex>> by_dimension);

  bool empty() const { return by_dim_.empty(); }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Simplices of dimension k in lexicographic order (empty if k is out of range).
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  std::size_t total_count() const;
  /// Vertex ids in increasing order.
  std::vector<int> vertices() const;

  bool contains(const Simplex& s) const;
  /// Every simplex of *this is a simplex of `other`.
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  bool is_face_closed() const;

  /// Full subcomplex on the given vertex ids.
  SimplicialComplex induced(const std::vector<int>& vertices) const;
  /// Cone with apex `apex`, which must not already be a vertex.
  SimplicialComplex cone(int apex) const;

  std::int64_t euler_characteristic() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
};

/// Fixtures with known homology.
namespace fixtures {
SimplicialComplex points(int count);
/// Boundary of the (k+1)-simplex, a k-sphere.
SimplicialComplex sphere(int k);
/// The full k-simplex.
SimplicialComplex simplex(int k);
/// Six vertex triangulation of the real projective plane.
SimplicialComplex projective_plane();
}  // namespace fixtures

}  // namespace abels
