#pragma once

// Combinatorics of the defining vectors: admissible partitions, essential
// dimension, and the two finiteness lengths they determine.

#include "abels/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace abels {

/// Validated defining data (w1, w2). Indices are 0-based internally; all text
/// output is 1-based.
class VectorPair {
 public:
  /// Throws ZeroVector, NotMonotone, SumSignViolation, LengthMismatch or
  /// DegenerateDerivedVector (w2 a multiple of w1, so the derived vector vanishes).
  static VectorPair validate(const VectorXl& w1, const VectorXl& w2);

  int n() const { return static_cast<int>(w1_.size()) - 1; }
  int size() const { return static_cast<int>(w1_.size()); }
  const VectorXl& w1() const { return w1_; }
  const VectorXl& w2() const { return w2_; }
  VectorPair doubled() const;

 private:
  VectorPair(VectorXl w1, VectorXl w2) : w1_(std::move(w1)), w2_(std::move(w2)) {}
  VectorXl w1_;
  VectorXl w2_;
};

inline VectorPair validate_pair(const VectorXl& w1, const VectorXl& w2) {
  return VectorPair::validate(w1, w2);
}

/// w = w2 - (sum w2 / sum w1) w1, exact.
RationalVector derived_vector(const VectorPair& pair);

/// A diagonal +-1 pattern, stored as the bitmask of its -1 positions.
class SignVector {
 public:
  SignVector(int size, std::uint32_t minus_mask);
  /// Parses "+-+-".
  static SignVector parse(const std::string& text);
  static SignVector identity(int size) { return SignVector(size, 0); }

  int size() const { return size_; }
  std::uint32_t minus_mask() const { return mask_; }
  int operator[](int i) const { return (mask_ >> i) & 1U ? -1 : 1; }
  SignVector operator*(const SignVector& other) const;
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector& a, const SignVector& b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  int size_;
  std::uint32_t mask_;
};

/// Partition of {0, ..., size-1}. Stored as a restricted growth string, so
/// equal partitions compare equal.
class Partition {
 public:
  static Partition trivial(int size);
  static Partition discrete(int size);
  /// Blocks given with 0-based indices; throws InvalidArgument if they do not
  /// disjointly cover the index set.
  static Partition from_blocks(int size, const std::vector<std::vector<int>>& blocks);
  static Partition from_labels(const std::vector<int>& labels);

  int size() const { return static_cast<int>(labels_.size()); }
  int block_count() const { return block_count_; }
  int block_of(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& labels() const { return labels_; }
  /// Blocks of sorted 0-based indices, ordered by their minimum.
  std::vector<std::vector<int>> blocks() const;
  std::uint32_t block_mask(int block) const;

  /// True when every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  /// "[[1,5],[2,4],[3]]"
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.labels_ == b.labels_; }
  /// Lexicographic order on the sorted block lists.
  friend bool operator<(const Partition& a, const Partition& b);

 private:
  explicit Partition(std::vector<int> labels);
  std::vector<int> labels_;
  int block_count_ = 0;
};

Partition parse_partition(int size, const std::string& text);

bool is_elementary_admissible(const Partition& partition, const VectorPair& pair);

/// All diagonal involutions in the group: sign vectors whose -1 positions have
/// even w1-sum and even w2-sum. Sorted by mask.
std::vector<SignVector> sign_group(const VectorPair& pair);

/// An F_2 basis of sign_group(pair) (as masks).
std::vector<SignVector> sign_group_basis(const VectorPair& pair);

Partition partition_from_signs(int size, const std::vector<SignVector>& signs);

Partition common_refinement(const std::vector<Partition>& partitions);

bool is_admissible(const Partition& partition, const VectorPair& pair);

bool is_partition_of(const Partition& partition, const RationalVector& v);

/// Sum of (|J| - 1) over blocks on which v is not identically zero.
/// Throws NotPartitionOfV.
int essential_dimension(const Partition& partition, const RationalVector& v);

enum class Engine { Search, Oracle };

struct EssentialDimension {
  int m = 0;
  Partition witness = Partition::trivial(1);
};

/// Every admissible partition, sorted. The search engine explores the
/// partition lattice from {I}; the oracle enumerates all subgroups of the
/// sign group.
std::vector<Partition> admissible_partitions(const VectorPair& pair, Engine engine);

/// m together with the lexicographically smallest witness.
EssentialDimension minimal_essential_dimension(const VectorPair& pair, Engine engine);

struct FinitenessLengths {
  int classical = 0;
  int bredon = 0;
};

FinitenessLengths finiteness_lengths(const VectorPair& pair);

}  // namespace abels
