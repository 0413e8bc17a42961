#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abels/invariants.hpp"
#include "abels/verify.hpp"
#include "test_support.hpp"

#include <algorithm>

using namespace abels;
using test_support::error_kind;

namespace {

VectorPair pair_of(std::initializer_list<std::int64_t> a, std::initializer_list<std::int64_t> b) {
  VectorXl w1(static_cast<Eigen::Index>(a.size()));
  VectorXl w2(static_cast<Eigen::Index>(b.size()));
  Eigen::Index i = 0;
  for (auto x : a) w1(i++) = x;
  i = 0;
  for (auto x : b) w2(i++) = x;
  return validate_pair(w1, w2);
}

VectorPair example1(int n) {
  VectorXl w1 = VectorXl::Zero(n + 1);
  VectorXl w2 = VectorXl::Zero(n + 1);
  w1(0) = 1;
  w2(n) = -1;
  return validate_pair(w1, w2);
}

VectorPair example2(int m0, int n) {
  VectorXl w1 = VectorXl::Constant(n + 1, 2);
  VectorXl w2 = VectorXl::Zero(n + 1);
  for (int i = 0; i < m0; ++i) w2(i) = 1;
  w2(n) -= m0;
  return validate_pair(w1, w2);
}

// w1 = a_1 + ... + a_{k+1}, w2 = -(a_{k+1} + ... + a_{2k+1}).
VectorPair example3(int k) {
  VectorXl w1 = VectorXl::Zero(2 * k + 1);
  VectorXl w2 = VectorXl::Zero(2 * k + 1);
  for (int i = 0; i <= k; ++i) w1(i) = 1;
  for (int i = k; i <= 2 * k; ++i) w2(i) = -1;
  return validate_pair(w1, w2);
}

Partition blocks(int size, std::vector<std::vector<int>> one_based) {
  for (auto& b : one_based) {
    for (auto& i : b) --i;
  }
  return Partition::from_blocks(size, one_based);
}

RationalVector rationals(std::initializer_list<Rational> xs) {
  RationalVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("validate_pair accepts and rejects") {
  CHECK(pair_of({1, 0, 0}, {0, 0, -1}).n() == 2);
  CHECK(error_kind([] { pair_of({0, 1}, {0, -1}); }) == ErrorKind::NotMonotone);
  CHECK(error_kind([] { pair_of({-1, -2}, {0, -1}); }) == ErrorKind::SumSignViolation);
  CHECK(error_kind([] { pair_of({1, 0}, {1, 0}); }) == ErrorKind::SumSignViolation);
  CHECK(error_kind([] { pair_of({0, 0}, {0, -1}); }) == ErrorKind::ZeroVector);
  CHECK(error_kind([] { pair_of({1, 0}, {0, 0}); }) == ErrorKind::ZeroVector);
  CHECK(error_kind([] { pair_of({1, 0, 0}, {0, -1}); }) == ErrorKind::LengthMismatch);
  CHECK(error_kind([] { pair_of({1}, {-1}); }) == ErrorKind::LengthMismatch);
  CHECK(error_kind([] { pair_of({1, 1}, {-1, -1}); }) == ErrorKind::DegenerateDerivedVector);
}

TEST_CASE("derived vector") {
  CHECK(derived_vector(example1(2)) == rationals({1, 0, -1}));
  CHECK(derived_vector(pair_of({2, 2, 2, 2}, {1, 1, 0, -2})) == rationals({1, 1, 0, -2}));
  CHECK(derived_vector(example3(2)) == rationals({1, 1, 0, -1, -1}));
  CHECK(derived_vector(pair_of({3, -1}, {1, -2})) == rationals({Rational(5, 2), Rational(-5, 2)}));
}

TEST_CASE("elementary admissible partitions") {
  const auto p = example1(2);
  CHECK(is_elementary_admissible(blocks(3, {{2}, {1, 3}}), p));
  CHECK(is_elementary_admissible(Partition::trivial(3), p));
  CHECK_FALSE(is_elementary_admissible(blocks(3, {{1, 2}, {3}}), p));
  CHECK(error_kind([&] { is_elementary_admissible(Partition::discrete(3), p); }) == ErrorKind::WrongBlockCount);
}

TEST_CASE("sign group") {
  const auto e1 = sign_group(example1(2));
  REQUIRE(e1.size() == 2);
  CHECK(e1[0].to_string() == "+++");
  CHECK(e1[1].to_string() == "+-+");
  CHECK(sign_group(pair_of({2, 2}, {0, -2})).size() == 4);
  const auto e3 = sign_group(example3(2));
  CHECK(e3.size() == 8);
  CHECK(std::count(e3.begin(), e3.end(), SignVector::parse("--+--")) == 1);
  CHECK(std::count(e3.begin(), e3.end(), SignVector::parse("-+-+-")) == 1);
  CHECK(sign_group_basis(example3(2)).size() == 3);
}

TEST_CASE("partitions from sign vectors and refinements") {
  CHECK(partition_from_signs(5, {SignVector::parse("--+--"), SignVector::parse("-+-+-")}).to_string() ==
        "[[1,5],[2,4],[3]]");
  CHECK(partition_from_signs(3, {}) == Partition::trivial(3));
  CHECK(partition_from_signs(3, {SignVector::parse("+-+")}).to_string() == "[[1,3],[2]]");
  CHECK(common_refinement({blocks(5, {{1, 2, 4, 5}, {3}}), blocks(5, {{1, 3, 5}, {2, 4}})}).to_string() ==
        "[[1,5],[2,4],[3]]");
  CHECK(common_refinement({Partition::trivial(4)}) == Partition::trivial(4));
  const auto p = blocks(4, {{1, 4}, {2}, {3}});
  CHECK(common_refinement({p, p}) == p);
  CHECK(parse_partition(5, "[[1,5],[2,4],[3]]") == blocks(5, {{1, 5}, {2, 4}, {3}}));
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(blocks(3, {{2}, {1, 3}}), example1(2)));
  CHECK_FALSE(is_admissible(blocks(3, {{1, 2}, {3}}), example1(2)));
  CHECK(is_admissible(blocks(5, {{1, 5}, {2, 4}, {3}}), example3(2)));
  CHECK(is_admissible(Partition::trivial(4), example1(3)));
}

TEST_CASE("partitions of w and essential dimension") {
  const auto v = rationals({1, 0, -1});
  CHECK(is_partition_of(blocks(3, {{1, 3}, {2}}), v));
  CHECK_FALSE(is_partition_of(Partition::discrete(3), v));
  CHECK(is_partition_of(Partition::trivial(3), v));
  CHECK(essential_dimension(blocks(3, {{1, 3}, {2}}), v) == 1);
  CHECK(essential_dimension(blocks(5, {{1, 2, 4, 5}, {3}}), rationals({1, 1, 0, -1, -1})) == 3);
  CHECK(essential_dimension(Partition::trivial(4), rationals({1, 0, 0, -1})) == 3);
  CHECK(error_kind([&] { essential_dimension(Partition::discrete(3), v); }) == ErrorKind::NotPartitionOfV);
}

TEST_CASE("minimal essential dimension on the worked examples") {
  for (int n = 2; n <= 8; ++n) {
    for (auto engine : {Engine::Search, Engine::Oracle}) {
      const auto e = minimal_essential_dimension(example1(n), engine);
      CHECK(e.m == 1);
      std::vector<std::vector<int>> expected{{1, n + 1}};
      for (int i = 2; i <= n; ++i) expected.push_back({i});
      CHECK(e.witness == blocks(n + 1, expected));
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (int m0 = 1; m0 <= n; ++m0) CHECK(minimal_essential_dimension(example2(m0, n), Engine::Search).m == m0);
  }
  // Literal definitions give m = k for the third example; see the ledger.
  const auto e3 = minimal_essential_dimension(example3(2), Engine::Oracle);
  CHECK(e3.m == 2);
  // The lexicographic tie rule prefers [[1,4],[2,5],[3]]; the partition
  // [[1,5],[2,4],[3]] attains the same value.
  CHECK(e3.witness.to_string() == "[[1,4],[2,5],[3]]");
  const auto alt = blocks(5, {{1, 5}, {2, 4}, {3}});
  CHECK(is_admissible(alt, example3(2)));
  CHECK(essential_dimension(alt, derived_vector(example3(2))) == 2);
  CHECK(minimal_essential_dimension(example3(2), Engine::Search).witness == e3.witness);
}

TEST_CASE("finiteness lengths") {
  const auto f1 = finiteness_lengths(example1(4));
  CHECK(f1.classical == 3);
  CHECK(f1.bredon == 0);
  const auto f2 = finiteness_lengths(example2(2, 3));
  CHECK(f2.classical == 2);
  CHECK(f2.bredon == 1);
  const auto f3 = finiteness_lengths(pair_of({2, 0}, {1, -1}));
  CHECK(f3.classical == 0);
  CHECK(f3.bredon == 0);
}

TEST_CASE("oracle corpus agrees with both engines") {
  REQUIRE(invariants_corpus().size() == 100);
  for (const auto& entry : invariants_corpus()) {
    VectorXl w1(static_cast<Eigen::Index>(entry.w1.size()));
    VectorXl w2(static_cast<Eigen::Index>(entry.w2.size()));
    for (std::size_t i = 0; i < entry.w1.size(); ++i) {
      w1(static_cast<Eigen::Index>(i)) = entry.w1[i];
      w2(static_cast<Eigen::Index>(i)) = entry.w2[i];
    }
    const auto pair = validate_pair(w1, w2);
    for (auto engine : {Engine::Search, Engine::Oracle}) {
      const auto e = minimal_essential_dimension(pair, engine);
      CHECK(e.m == entry.m);
      CHECK(e.witness.to_string() == entry.witness);
      CHECK(admissible_partitions(pair, engine).size() == entry.admissible_count);
    }
  }
}

TEST_CASE("sign vector and partition text forms") {
  CHECK(SignVector::parse("+-+-").minus_mask() == 0b1010u);
  CHECK(error_kind([] { SignVector::parse("+x"); }) == ErrorKind::InvalidArgument);
  CHECK((SignVector::parse("+-") * SignVector::parse("--")).to_string() == "-+");
  CHECK(Partition::discrete(3).to_string() == "[[1],[2],[3]]");
  CHECK(error_kind([] { Partition::from_blocks(3, {{0, 1}}); }) == ErrorKind::InvalidArgument);
  CHECK(blocks(3, {{1, 2}, {3}}).refines(Partition::trivial(3)));
}
