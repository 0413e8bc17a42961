#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abels/building.hpp"
#include "abels/realization.hpp"
#include "abels/serialize.hpp"
#include "test_support.hpp"

#include <set>

using namespace abels;
using test_support::error_kind;

namespace {

BuildingComplex ball_complex(std::int64_t p, int dim, int radius, Model model) {
  return build_complex(ball(Lattice::standard(dim, p), radius, model).vertices, model);
}

RationalVector weights(std::initializer_list<Rational> xs) {
  RationalVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

bool is_diagonal(const Lattice& l) {
  for (int i = 0; i < l.dim(); ++i) {
    for (int j = i + 1; j < l.dim(); ++j) {
      if (!l.basis()(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("balls") {
  CHECK(ball(Lattice::standard(2, 3), 0, Model::Quotient).vertices.size() == 1);
  CHECK(ball(Lattice::standard(2, 3), 1, Model::Quotient).vertices.size() == 5);
  CHECK(ball(Lattice::standard(3, 2), 1, Model::Quotient).vertices.size() == 15);
  CHECK(ball(Lattice::standard(2, 2), 1, Model::Extended).vertices.size() == 9);
  const auto b = ball(Lattice::standard(2, 2), 3, Model::Quotient);
  CHECK(b.vertices.size() == 1 + 3 + 6 + 12);
  CHECK(b.deep_vertices().size() == 1 + 3 + 6);
  CHECK(std::is_sorted(b.distance.begin(), b.distance.end()));
  // A different center gives the same ordered output for the same class.
  CHECK(ball(Lattice::standard(2, 2).scaled(3), 3, Model::Quotient).vertices == b.vertices);
}

TEST_CASE("resource limits") {
  CHECK(error_kind([] { ball(Lattice::standard(3, 3), 3, Model::Quotient, Budget{100, std::nullopt}); }) ==
        ErrorKind::CapExceeded);
  const Budget expired{1000000, std::chrono::steady_clock::now() - std::chrono::seconds(1)};
  CHECK(error_kind([&] { ball(Lattice::standard(3, 3), 3, Model::Quotient, expired); }) ==
        ErrorKind::TimeLimitExceeded);
  CHECK(error_kind([] { ball(Lattice::standard(2, 3), -1, Model::Quotient); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("flag complexes") {
  const auto tree = ball_complex(3, 2, 1, Model::Quotient);
  CHECK(tree.complex.count(1) == 4);
  CHECK(tree.complex.count(2) == 0);
  const auto a2 = ball_complex(2, 3, 1, Model::Quotient);
  CHECK(a2.complex.count(2) == 21);
  CHECK(a2.complex.count(1) == 14 + 21);
  const auto single = build_complex({Lattice::standard(2, 5)}, Model::Quotient);
  CHECK(single.complex.count(0) == 1);
  CHECK(single.complex.dimension() == 0);
  for (const auto& x : {tree, a2, ball_complex(2, 2, 2, Model::Extended), ball_complex(3, 2, 1, Model::Extended)}) {
    CHECK(x.complex.is_face_closed());
    CHECK(flag_complex_direct(x.vertices, x.model) == x.complex);
  }
  // Triangles through L0: {pL0, M, L0} and {L0, M', p^-1 L0} for the three
  // index-2 neighbors on either side, and {M, L0, p^-1 M}.
  const auto ext = ball_complex(2, 2, 1, Model::Extended);
  CHECK(ext.complex.count(2) == 9);
  CHECK(ext.id_of(Lattice::standard(2, 2)) == 0);
  CHECK(ext.id_of(diagonal_lattice({5, 5}, 2)) == -1);
}

TEST_CASE("full subcomplexes") {
  const auto x = ball_complex(2, 3, 2, Model::Quotient);
  const HeightFunction h(VectorXl{{1, 0, -1}});
  const auto ids = select_vertices(x, VertexPredicate::height_interval(h, 0, 0));
  CHECK_FALSE(ids.empty());
  for (int id : ids) CHECK(height(LatticeClass(x.vertices[static_cast<std::size_t>(id)]), h) == 0);
  const auto sub = full_subcomplex(x, VertexPredicate::height_interval(h, 0, 0));
  CHECK(sub.vertices() == ids);
  CHECK(sub.is_subcomplex_of(x.complex));

  const auto ext = ball_complex(3, 2, 1, Model::Extended);
  const auto fixed = select_vertices(ext, VertexPredicate::fixed_by({SignVector::parse("+-")}));
  CHECK(fixed.size() == 7);
  for (int id : fixed) CHECK(is_diagonal(ext.vertices[static_cast<std::size_t>(id)]));

  CHECK(error_kind([&] { VertexPredicate::height_interval(h, 1, 0); }) == ErrorKind::InvalidArgument);
  const HeightFunction h1(VectorXl{{1, 0, 0}});
  CHECK(error_kind([&] { full_subcomplex(x, VertexPredicate::height_interval(h1, 0, 0)); }) ==
        ErrorKind::ClassModelMismatch);
  const auto both = VertexPredicate::all_of(
      {VertexPredicate::height_interval(h, -1, 1), VertexPredicate::fixed_by({SignVector::parse("+-+")})});
  for (int id : select_vertices(x, both)) {
    const auto& v = x.vertices[static_cast<std::size_t>(id)];
    CHECK(std::abs(height(LatticeClass(v), h)) <= 1);
  }
}

TEST_CASE("product structure of fixed sets") {
  const auto b = ball(Lattice::standard(4, 3), 1, Model::Extended);
  const auto r = product_check(b.vertices, Model::Extended, {SignVector::parse("++--")});
  CHECK(r.holds);
  CHECK(r.partition.to_string() == "[[1,2],[3,4]]");
  CHECK(r.fixed == r.block_sums);
  const auto all = product_check(b.vertices, Model::Extended, {});
  CHECK(all.holds);
  CHECK(all.fixed == b.vertices.size());
  const auto b2 = ball(Lattice::standard(2, 3), 2, Model::Extended);
  CHECK_FALSE(product_check(b2.vertices, Model::Extended, {SignVector::parse("+-")}, Partition::trivial(2)).holds);
  CHECK(error_kind([&] { product_check(b2.vertices, Model::Quotient, {}); }) == ErrorKind::ClassModelMismatch);
  const Lattice l = diagonal_lattice({1, 0, 2}, 3);
  CHECK(is_block_sum(l, Partition::discrete(3)));
}

TEST_CASE("interval cover") {
  const auto a = interval_cover(weights({Rational(1, 2), Rational(1, 2)}), Rational(3, 10));
  CHECK(a.i == 0);
  CHECK(a.beta == Rational(9, 10));
  const auto b = interval_cover(weights({Rational(1, 2), Rational(1, 2)}), Rational(1, 4));
  CHECK(b.i == -1);
  CHECK(b.beta == 0);
  const auto c = interval_cover(weights({Rational(1), Rational(0)}), Rational(1, 2));
  CHECK(c.i == 0);
  CHECK(c.beta == Rational(1, 2));
  const auto alpha = weights({Rational(1, 3), Rational(0), Rational(2, 3)});
  for (int num = -30; num <= 30; ++num) {
    const Rational r(num, 7);
    const auto cover = interval_cover(alpha, r);
    CHECK(cover_reconstruct(alpha, cover.i, cover.beta) == r);
  }
  CHECK(cover_offset(weights({Rational(1, 2), Rational(1, 2)}), 0) == Rational(1, 4));
  CHECK(error_kind([] { interval_cover(weights({Rational(1, 2)}), 0); }) == ErrorKind::InvalidArgument);
  CHECK(error_kind([] { interval_cover(weights({Rational(3, 2), Rational(-1, 2)}), 0); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("affine epsilon") {
  const Lattice l0 = Lattice::standard(2, 3);
  const Lattice mid = diagonal_lattice({0, 1}, 3);
  CHECK(epsilon_affine({{l0, Rational(1)}}) == 0);
  CHECK(epsilon_affine({{l0, Rational(1, 2)}, {l0.scaled(1), Rational(1, 2)}}) == Rational(-1, 2));
  CHECK(epsilon_affine({{l0, Rational(1, 3)}, {mid, Rational(1, 3)}, {l0.scaled(1), Rational(1, 3)}}) ==
        Rational(-1, 2));
  CHECK(error_kind([&] {
          epsilon_affine({{l0, Rational(1, 2)}, {diagonal_lattice({0, 2}, 3), Rational(1, 2)}});
        }) == ErrorKind::NotASimplex);
  CHECK(error_kind([&] { epsilon_affine({{l0, Rational(1, 2)}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("slices of the extended model match height annuli") {
  // The first defining vector of the first worked example has weight sum 1,
  // so each class has exactly one homothet on its horosphere.
  const HeightFunction h1(VectorXl{{1, 0, 0}});
  const HeightFunction hw(VectorXl{{1, 0, -1}});
  const auto ext = ball(Lattice::standard(3, 2), 3, Model::Extended);
  std::set<Lattice> classes;
  std::size_t slice = 0;
  for (const auto& v : ext.vertices) {
    if (height(v, h1) != 0 || height(v, hw) < -1 || height(v, hw) > 1) continue;
    ++slice;
    CHECK(classes.insert(class_representative(v)).second);
    CHECK(height(LatticeClass(class_representative(v)), hw) == height(v, hw));
  }
  CHECK(slice > 0);
}

TEST_CASE("complex serialization") {
  const auto x = ball_complex(3, 2, 1, Model::Quotient);
  const Json j = to_json(x);
  CHECK(j["model"] == "quotient");
  CHECK(j["p"] == 3);
  CHECK(j["dim"] == 2);
  CHECK(j["vertices"].size() == 5);
  CHECK(j["simplices"]["1"].size() == 4);
  CHECK(j["simplices"]["1"][0] == Json::array({0, 1}));
  const std::string dot = to_dot(x, HeightFunction(VectorXl{{1, -1}}));
  CHECK(dot.find("v0 -- v1;") != std::string::npos);
  CHECK(dot.find("height=") != std::string::npos);
  CHECK(dot.find("graph building {") == 0);
}
