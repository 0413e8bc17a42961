#pragma once

// Finite truncations of the building and extended building in the lattice
// model, plus the subcomplexes cut out by heights and involutions.

#include "abels/lattice.hpp"
#include "abels/simplicial.hpp"

#include <chrono>
#include <optional>
#include <unordered_map>
#include <variant>

namespace abels {

/// Resource limits for enumeration. Exceeding them throws CapExceeded or
/// TimeLimitExceeded.
struct Budget {
  std::size_t cap = 50000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget with_time_limit(std::size_t cap, std::chrono::milliseconds limit) {
    return {cap, std::chrono::steady_clock::now() + limit};
  }
  void check(std::size_t count) const;
};

struct Ball {
  Model model = Model::Extended;
  Lattice center;
  int radius = 0;
  /// Sorted by distance, then canonical lattice order. The vertex id is the
  /// position in this list.
  std::vector<Lattice> vertices;
  std::vector<int> distance;

  /// Vertices at distance <= radius - 1; their full links lie in the ball.
  std::vector<Lattice> deep_vertices() const;
};

/// Every vertex within `radius` edges of `center`. In the quotient model the
/// center is replaced by its normalized class representative.
Ball ball(const Lattice& center, int radius, Model model, const Budget& budget = {});

/// Flag complex on a vertex set, with vertex ids given by position.
struct BuildingComplex {
  Model model = Model::Extended;
  std::int64_t p = 0;
  int dim = 0;
  std::vector<Lattice> vertices;
  SimplicialComplex complex;

  /// -1 when absent.
  int id_of(const Lattice& v) const;
  /// Refreshes the lookup behind id_of after `vertices` changes.
  void rebuild_index();

 private:
  std::unordered_map<Lattice, int, LatticeHash> ids_;
};

/// Clique complex of the adjacency graph. Quotient vertices are normalized.
BuildingComplex build_complex(std::vector<Lattice> vertices, Model model, const Budget& budget = {});

/// The same simplices, found by testing every candidate vertex set with the
/// chain condition directly (no adjacency graph). Quadratic and slow; meant
/// for cross-checking small instances.
SimplicialComplex flag_complex_direct(const std::vector<Lattice>& vertices, Model model);

class VertexPredicate {
 public:
  /// height in [lower, upper]; throws InvalidArgument if lower > upper.
  static VertexPredicate height_interval(HeightFunction h, Rational lower, Rational upper);
  /// Fixed by every diag(s), s in `signs`.
  static VertexPredicate fixed_by(std::vector<SignVector> signs);
  static VertexPredicate all_of(std::vector<VertexPredicate> parts);

  /// Throws ClassModelMismatch for a height with nonzero weight sum on the
  /// quotient model.
  void check_model(Model model) const;
  bool operator()(const Lattice& v, Model model) const;

 private:
  struct Height {
    HeightFunction h;
    Rational lower;
    Rational upper;
  };
  struct Fixed {
    std::vector<SignVector> signs;
  };
  struct All {
    std::vector<VertexPredicate> parts;
  };
  explicit VertexPredicate(std::variant<Height, Fixed, All> kind) : kind_(std::move(kind)) {}
  std::variant<Height, Fixed, All> kind_;
};

/// Vertex ids of `x` satisfying the predicate.
std::vector<int> select_vertices(const BuildingComplex& x, const VertexPredicate& pred);

/// Full subcomplex of `x` on the vertices satisfying the predicate.
SimplicialComplex full_subcomplex(const BuildingComplex& x, const VertexPredicate& pred);

/// True when the lattice equals the direct sum of its intersections with the
/// coordinate subspaces of the blocks.
bool is_block_sum(const Lattice& v, const Partition& blocks);

struct ProductCheck {
  bool holds = false;
  std::size_t fixed = 0;
  std::size_t block_sums = 0;
  /// Vertices in exactly one of the two sets.
  std::size_t mismatches = 0;
  Partition partition = Partition::trivial(1);
};

/// Compares the fixed vertex set of F with the set of block sums for the
/// partition of F (or the given override), on extended-model vertices.
ProductCheck product_check(const std::vector<Lattice>& vertices, Model model,
                           const std::vector<SignVector>& signs,
                           const std::optional<Partition>& partition = std::nullopt);

}  // namespace abels
