#pragma once

// Z_p-lattices in Q_p^dim, represented exactly by a canonical upper triangular
// basis over Z[1/p].

#include "abels/invariants.hpp"
#include "abels/pscalar.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace abels {

enum class Model { Extended, Quotient };
enum class Containment { Equal, Subset, Superset, Incomparable };

std::string_view model_name(Model model);
Model parse_model(std::string_view text);
std::string_view containment_name(Containment c);

/// A lattice stored in Hermite form: H is upper triangular, H(i,i) = p^{e_i},
/// and every entry right of the diagonal in row i lies in [0, p^{e_i}).
/// Two lattices are equal exactly when their stored forms are equal.
class Lattice {
 public:
  /// The zero-dimensional lattice.
  Lattice() = default;
  /// Z_p-span of the columns of `generators` (at least dim columns).
  /// Throws SingularBasis if they do not span Q_p^dim.
  static Lattice span(const PMatrix& generators, std::int64_t p);
  static Lattice standard(int dim, std::int64_t p);
  static Lattice diagonal(const std::vector<int>& exponents, std::int64_t p);

  std::int64_t prime() const { return p_; }
  int dim() const { return static_cast<int>(exps_.size()); }
  const PMatrix& basis() const { return basis_; }
  const std::vector<int>& exponents() const { return exps_; }
  /// Valuation of the determinant of any basis.
  int det_valuation() const;

  /// p^k * this
  Lattice scaled(int k) const;

  bool contains(const PVector& v) const;
  bool contains(const Lattice& other) const;

  std::size_t hash() const;

  friend bool operator==(const Lattice& a, const Lattice& b);
  /// Arbitrary but fixed total order, used for deterministic output.
  friend bool operator<(const Lattice& a, const Lattice& b);

 private:
  Lattice(std::int64_t p, PMatrix basis, std::vector<int> exps)
      : p_(p), basis_(std::move(basis)), exps_(std::move(exps)) {}

  std::int64_t p_ = 0;
  PMatrix basis_;
  std::vector<int> exps_;
};

struct LatticeHash {
  std::size_t operator()(const Lattice& l) const { return l.hash(); }
};

/// Homothety class, held through its representative with
/// det_valuation in [0, dim-1] (equivalently epsilon in (-1, 0]).
class LatticeClass {
 public:
  explicit LatticeClass(const Lattice& any);
  const Lattice& representative() const { return rep_; }
  friend bool operator==(const LatticeClass&, const LatticeClass&) = default;

 private:
  Lattice rep_;
};

/// Normalized class representative of `l`.
Lattice class_representative(const Lattice& l);

/// Dominant integer weight defining a height <w, retraction(.)>.
class HeightFunction {
 public:
  /// Throws ZeroVector or NotMonotone.
  explicit HeightFunction(VectorXl w);
  const VectorXl& weights() const { return w_; }
  std::int64_t weight_sum() const { return w_.sum(); }
  bool descends_to_classes() const { return weight_sum() == 0; }

 private:
  VectorXl w_;
};

inline Lattice canonicalize(const PMatrix& basis, std::int64_t p) { return Lattice::span(basis, p); }
inline Lattice diagonal_lattice(const std::vector<int>& e, std::int64_t p) {
  return Lattice::diagonal(e, p);
}

Containment lattice_order(const Lattice& a, const Lattice& b);

/// g * A. Throws SingularMatrix.
Lattice act(const PMatrix& g, const Lattice& a);

/// ind(A, B) = length(A / L) - length(B / L) for any common sublattice L.
int index(const Lattice& a, const Lattice& b);

/// ind(A, standard) / dim.
Rational epsilon(const Lattice& a);

/// Extended model: every B != A with pA <= B <= A or pB <= A <= B.
/// Quotient model: normalized representatives of the neighboring classes.
/// Output is in canonical order.
std::vector<Lattice> neighbors(const Lattice& a, Model model);

/// Expected neighbor count from subspace counting.
std::int64_t neighbor_count(int dim, std::int64_t p, Model model);

/// True iff the lattices (as a set) can be ordered L_0 <= ... <= L_k with
/// p L_k <= L_0.
bool chain_is_simplex(const std::vector<Lattice>& chain);

/// Same test for homothety classes given by normalized representatives.
bool classes_form_simplex(const std::vector<Lattice>& representatives);

/// Vertices adjacent in the given model.
bool adjacent(const Lattice& a, const Lattice& b, Model model);

std::vector<int> retraction(const Lattice& a);

std::int64_t height(const Lattice& a, const HeightFunction& h);
/// Throws ClassModelMismatch unless the weights sum to zero.
std::int64_t height(const LatticeClass& a, const HeightFunction& h);

/// Every lattice L with lower <= L <= upper, in canonical order.
std::vector<Lattice> lattices_between(const Lattice& lower, const Lattice& upper);

/// A intersected with the coordinate subspace spanned by `coords` (sorted),
/// as a lattice in those coordinates.
Lattice coordinate_sublattice(const Lattice& a, const std::vector<int>& coords);

struct InvolutionAnalysis {
  bool fixed = false;
  /// A intersected with the coordinate subspaces of the +1 and -1 entries,
  /// as lattices in those subspaces (coordinates kept in increasing order).
  Lattice plus;
  Lattice minus;
  bool splits = false;
};

InvolutionAnalysis involution_analysis(const SignVector& s, const Lattice& a);

PMatrix sign_matrix(const SignVector& s, std::int64_t p);

struct Diagonalization {
  PMatrix u;
  SignVector d;
};

/// For an upper triangular involution g over Z[1/p], p odd: a unipotent upper
/// triangular u with u^{-1} g u = diag(d).
/// Throws NotTriangular, EvenPrime, NotInvolution or NotDiagonalizable.
Diagonalization diagonalize_involution(const PMatrix& g, std::int64_t p);

/// Upper triangular b over Z[1/p] with act(b, standard) = A.
PMatrix borel_reduce(const Lattice& a);

}  // namespace abels

template <>
struct std::hash<abels::Lattice> {
  std::size_t operator()(const abels::Lattice& l) const { return l.hash(); }
};
