#include "abels/invariants.hpp"

#include "abels/errors.hpp"
#include "abels/subspaces.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace abels {

namespace {

constexpr int kMaxIndices = 31;

bool is_non_increasing(const VectorXl& w) {
  for (Eigen::Index i = 0; i + 1 < w.size(); ++i) {
    if (w(i) < w(i + 1)) return false;
  }
  return true;
}

std::uint32_t odd_mask(const VectorXl& w) {
  std::uint32_t mask = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) % 2 != 0) mask |= 1U << i;
  }
  return mask;
}

int parity(std::uint32_t mask) { return std::popcount(mask) & 1; }

// Kernel of an F_2 matrix given by row bitmasks over `cols` columns.
std::vector<std::uint32_t> f2_kernel(std::vector<std::uint32_t> rows, int cols) {
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && !((rows[sel] >> c) & 1U)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r] >> c) & 1U)) rows[r] ^= rows[rank];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::uint32_t> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::uint32_t v = 1U << f;
    for (std::size_t r = 0; r < rank; ++r) {
      if ((rows[r] >> f) & 1U) v |= 1U << pivot_col[r];
    }
    basis.push_back(v);
  }
  return basis;
}

Partition refine_by_mask(const Partition& partition, std::uint32_t mask) {
  std::vector<int> labels(static_cast<std::size_t>(partition.size()));
  for (int i = 0; i < partition.size(); ++i) {
    labels[static_cast<std::size_t>(i)] = 2 * partition.block_of(i) + static_cast<int>((mask >> i) & 1U);
  }
  return Partition::from_labels(labels);
}

std::vector<std::uint32_t> span_of(const std::vector<std::uint32_t>& basis) {
  std::vector<std::uint32_t> out{0};
  for (std::uint32_t b : basis) {
    std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> sign_group_basis_masks(const VectorPair& pair) {
  return f2_kernel({odd_mask(pair.w1()), odd_mask(pair.w2())}, pair.size());
}

}  // namespace

// ---------------------------------------------------------------------------
// VectorPair

VectorPair VectorPair::validate(const VectorXl& w1, const VectorXl& w2) {
  if (w1.size() != w2.size() || w1.size() < 2) {
    throw Error(ErrorKind::LengthMismatch, "w1 and w2 must have equal length >= 2");
  }
  if (w1.size() > kMaxIndices) {
    throw Error(ErrorKind::InvalidArgument, "at most 31 coordinates are supported");
  }
  if (w1.isZero()) throw Error(ErrorKind::ZeroVector, "w1 is the zero vector");
  if (w2.isZero()) throw Error(ErrorKind::ZeroVector, "w2 is the zero vector");
  if (!is_non_increasing(w1)) throw Error(ErrorKind::NotMonotone, "w1 is not monotonically non-increasing");
  if (!is_non_increasing(w2)) throw Error(ErrorKind::NotMonotone, "w2 is not monotonically non-increasing");
  if (w1.sum() <= 0) throw Error(ErrorKind::SumSignViolation, "sum of w1 must be positive");
  if (w2.sum() > 0) throw Error(ErrorKind::SumSignViolation, "sum of w2 must be non-positive");
  VectorPair pair(w1, w2);
  if (derived_vector(pair).isZero()) {
    throw Error(ErrorKind::DegenerateDerivedVector, "w2 is a multiple of w1, the derived vector vanishes");
  }
  return pair;
}

VectorPair VectorPair::doubled() const { return VectorPair(2 * w1_, 2 * w2_); }

RationalVector derived_vector(const VectorPair& pair) {
  Rational ratio(pair.w2().sum(), pair.w1().sum());
  RationalVector v(pair.size());
  for (int i = 0; i < pair.size(); ++i) {
    v(i) = Rational(pair.w2()(i)) - ratio * Rational(pair.w1()(i));
  }
  return v;
}

// ---------------------------------------------------------------------------
// SignVector

SignVector::SignVector(int size, std::uint32_t minus_mask) : size_(size), mask_(minus_mask) {
  if (size < 0 || size > kMaxIndices || (size < 32 && (minus_mask >> size) != 0)) {
    throw Error(ErrorKind::InvalidArgument, "sign vector mask out of range");
  }
}

SignVector SignVector::parse(const std::string& text) {
  std::uint32_t mask = 0;
  int size = 0;
  for (char c : text) {
    if (c == '-') {
      mask |= 1U << size;
    } else if (c != '+') {
      throw Error(ErrorKind::InvalidArgument, "sign vector must consist of '+' and '-': " + text);
    }
    ++size;
  }
  if (size == 0) throw Error(ErrorKind::InvalidArgument, "empty sign vector");
  return SignVector(size, mask);
}

SignVector SignVector::operator*(const SignVector& other) const {
  if (size_ != other.size_) throw Error(ErrorKind::LengthMismatch, "sign vectors of different length");
  return SignVector(size_, mask_ ^ other.mask_);
}

std::string SignVector::to_string() const {
  std::string out;
  for (int i = 0; i < size_; ++i) out.push_back((*this)[i] < 0 ? '-' : '+');
  return out;
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> labels) : labels_(std::move(labels)) {
  // Relabel into restricted growth form.
  std::map<int, int> relabel;
  for (int& l : labels_) {
    auto [it, inserted] = relabel.try_emplace(l, static_cast<int>(relabel.size()));
    l = it->second;
  }
  block_count_ = static_cast<int>(relabel.size());
}

Partition Partition::trivial(int size) { return Partition(std::vector<int>(static_cast<std::size_t>(size), 0)); }

Partition Partition::discrete(int size) {
  std::vector<int> labels(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) labels[static_cast<std::size_t>(i)] = i;
  return Partition(std::move(labels));
}

Partition Partition::from_labels(const std::vector<int>& labels) { return Partition(labels); }

Partition Partition::from_blocks(int size, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(static_cast<std::size_t>(size), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw Error(ErrorKind::InvalidArgument, "partition has an empty block");
    for (int i : blocks[b]) {
      if (i < 0 || i >= size) throw Error(ErrorKind::InvalidArgument, "partition index out of range");
      if (labels[static_cast<std::size_t>(i)] != -1) {
        throw Error(ErrorKind::InvalidArgument, "partition blocks are not disjoint");
      }
      labels[static_cast<std::size_t>(i)] = static_cast<int>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
    throw Error(ErrorKind::InvalidArgument, "partition blocks do not cover the index set");
  }
  return Partition(std::move(labels));
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count_));
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(block_of(i))].push_back(i);
  return out;
}

std::uint32_t Partition::block_mask(int block) const {
  std::uint32_t mask = 0;
  for (int i = 0; i < size(); ++i) {
    if (block_of(i) == block) mask |= 1U << i;
  }
  return mask;
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) return false;
  std::vector<int> image(static_cast<std::size_t>(block_count_), -1);
  for (int i = 0; i < size(); ++i) {
    int& target = image[static_cast<std::size_t>(block_of(i))];
    if (target == -1) target = coarser.block_of(i);
    if (target != coarser.block_of(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) out << ',';
    out << '[';
    for (std::size_t j = 0; j < bs[b].size(); ++j) {
      if (j) out << ',';
      out << bs[b][j] + 1;
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

bool operator<(const Partition& a, const Partition& b) { return a.blocks() < b.blocks(); }

Partition parse_partition(int size, const std::string& text) {
  // Accepts "[[1,3],[2]]" with 1-based indices; whitespace ignored.
  std::vector<std::vector<int>> blocks;
  int depth = 0;
  std::string number;
  auto flush = [&] {
    if (!number.empty()) {
      blocks.back().push_back(std::stoi(number) - 1);
      number.clear();
    }
  };
  for (char c : text) {
    if (c == '[') {
      ++depth;
      if (depth == 2) blocks.emplace_back();
    } else if (c == ']') {
      if (depth == 2) flush();
      --depth;
    } else if (c == ',') {
      if (depth == 2) flush();
    } else if (c >= '0' && c <= '9') {
      number.push_back(c);
    } else if (c != ' ') {
      throw Error(ErrorKind::InvalidArgument, "cannot parse partition '" + text + "'");
    }
  }
  if (depth != 0) throw Error(ErrorKind::InvalidArgument, "unbalanced brackets in '" + text + "'");
  return Partition::from_blocks(size, blocks);
}

// ---------------------------------------------------------------------------
// Admissibility

bool is_elementary_admissible(const Partition& partition, const VectorPair& pair) {
  if (partition.size() != pair.size()) throw Error(ErrorKind::LengthMismatch, "partition size differs from pair");
  if (partition.block_count() == 1) return true;
  if (partition.block_count() != 2) {
    throw Error(ErrorKind::WrongBlockCount, "elementary admissibility needs the trivial partition or two blocks");
  }
  std::uint32_t odd1 = odd_mask(pair.w1());
  std::uint32_t odd2 = odd_mask(pair.w2());
  // Either block may play the role of the -1 eigenspace.
  for (int b = 0; b < 2; ++b) {
    std::uint32_t m = partition.block_mask(b);
    if (parity(m & odd1) == 0 && parity(m & odd2) == 0) return true;
  }
  return false;
}

std::vector<SignVector> sign_group_basis(const VectorPair& pair) {
  std::vector<SignVector> out;
  for (std::uint32_t m : sign_group_basis_masks(pair)) out.emplace_back(pair.size(), m);
  return out;
}

std::vector<SignVector> sign_group(const VectorPair& pair) {
  std::vector<SignVector> out;
  for (std::uint32_t m : span_of(sign_group_basis_masks(pair))) out.emplace_back(pair.size(), m);
  return out;
}

Partition partition_from_signs(int size, const std::vector<SignVector>& signs) {
  Partition result = Partition::trivial(size);
  for (const SignVector& s : signs) {
    if (s.size() != size) throw Error(ErrorKind::LengthMismatch, "sign vector length differs");
    result = refine_by_mask(result, s.minus_mask());
  }
  return result;
}

Partition common_refinement(const std::vector<Partition>& partitions) {
  if (partitions.empty()) throw Error(ErrorKind::InvalidArgument, "common refinement of an empty list");
  const int size = partitions.front().size();
  std::map<std::vector<int>, int> profile_ids;
  std::vector<int> labels(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    std::vector<int> profile;
    for (const Partition& p : partitions) {
      if (p.size() != size) throw Error(ErrorKind::LengthMismatch, "partitions over different index sets");
      profile.push_back(p.block_of(i));
    }
    auto [it, inserted] = profile_ids.try_emplace(profile, static_cast<int>(profile_ids.size()));
    labels[static_cast<std::size_t>(i)] = it->second;
  }
  return Partition::from_labels(labels);
}

bool is_admissible(const Partition& partition, const VectorPair& pair) {
  if (partition.size() != pair.size()) throw Error(ErrorKind::LengthMismatch, "partition size differs from pair");
  // Sign vectors of the group that are constant on blocks: combinations of
  // block indicators whose -1 set has even w1- and w2-sums.
  const int blocks = partition.block_count();
  std::uint32_t odd1 = odd_mask(pair.w1());
  std::uint32_t odd2 = odd_mask(pair.w2());
  std::uint32_t row1 = 0, row2 = 0;
  std::vector<std::uint32_t> block_masks;
  for (int b = 0; b < blocks; ++b) {
    std::uint32_t m = partition.block_mask(b);
    block_masks.push_back(m);
    if (parity(m & odd1)) row1 |= 1U << b;
    if (parity(m & odd2)) row2 |= 1U << b;
  }
  std::vector<SignVector> signs;
  for (std::uint32_t c : f2_kernel({row1, row2}, blocks)) {
    std::uint32_t mask = 0;
    for (int b = 0; b < blocks; ++b) {
      if ((c >> b) & 1U) mask |= block_masks[static_cast<std::size_t>(b)];
    }
    signs.emplace_back(partition.size(), mask);
  }
  return partition_from_signs(partition.size(), signs) == partition;
}

bool is_partition_of(const Partition& partition, const RationalVector& v) {
  if (partition.size() != v.size()) throw Error(ErrorKind::LengthMismatch, "partition size differs from vector");
  std::vector<Rational> sums(static_cast<std::size_t>(partition.block_count()), Rational(0));
  for (int i = 0; i < partition.size(); ++i) sums[static_cast<std::size_t>(partition.block_of(i))] += v(i);
  return std::all_of(sums.begin(), sums.end(), [](const Rational& s) { return s == 0; });
}

int essential_dimension(const Partition& partition, const RationalVector& v) {
  if (!is_partition_of(partition, v)) {
    throw Error(ErrorKind::NotPartitionOfV, partition.to_string() + " has a block with nonzero sum");
  }
  int ed = 0;
  for (const auto& block : partition.blocks()) {
    bool essential = std::any_of(block.begin(), block.end(), [&](int i) { return v(i) != 0; });
    if (essential) ed += static_cast<int>(block.size()) - 1;
  }
  return ed;
}

// ---------------------------------------------------------------------------
// Engines

std::vector<Partition> admissible_partitions(const VectorPair& pair, Engine engine) {
  const int size = pair.size();
  std::vector<std::uint32_t> basis = sign_group_basis_masks(pair);
  std::set<std::vector<int>> seen;
  std::vector<Partition> found;
  auto record = [&](const Partition& p) {
    if (seen.insert(p.labels()).second) {
      found.push_back(p);
      return true;
    }
    return false;
  };

  if (engine == Engine::Search) {
    // Breadth-first refinement by one group element at a time.
    std::vector<std::uint32_t> elements = span_of(basis);
    std::deque<Partition> queue;
    record(Partition::trivial(size));
    queue.push_back(Partition::trivial(size));
    while (!queue.empty()) {
      Partition current = queue.front();
      queue.pop_front();
      for (std::uint32_t e : elements) {
        Partition next = refine_by_mask(current, e);
        if (next.block_count() == current.block_count()) continue;
        if (record(next)) queue.push_back(next);
      }
    }
  } else {
    // Every subgroup of the sign group, generated by an echelon basis over F_2
    // in the coordinates of `basis`.
    const int k = static_cast<int>(basis.size());
    for_each_subspace(k, 2, [&](const EchelonBasis& rows) {
      std::vector<SignVector> generators;
      for (const auto& row : rows) {
        std::uint32_t mask = 0;
        for (int j = 0; j < k; ++j) {
          if (row[static_cast<std::size_t>(j)]) mask ^= basis[static_cast<std::size_t>(j)];
        }
        generators.emplace_back(size, mask);
      }
      record(partition_from_signs(size, generators));
    });
  }
  std::sort(found.begin(), found.end());
  return found;
}

EssentialDimension minimal_essential_dimension(const VectorPair& pair, Engine engine) {
  RationalVector v = derived_vector(pair);
  std::optional<EssentialDimension> best;
  for (const Partition& p : admissible_partitions(pair, engine)) {
    if (!is_partition_of(p, v)) continue;
    int ed = essential_dimension(p, v);
    // Candidates arrive in lexicographic order, so strict improvement keeps
    // the smallest witness.
    if (!best || ed < best->m) best = EssentialDimension{ed, p};
  }
  return *best;  // the trivial partition is always admissible and a partition of v
}

FinitenessLengths finiteness_lengths(const VectorPair& pair) {
  EssentialDimension ed = minimal_essential_dimension(pair, Engine::Search);
  return FinitenessLengths{pair.n() - 1, ed.m - 1};
}

}  // namespace abels
