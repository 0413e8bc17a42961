#include "abels/verify.hpp"

#include "abels/errors.hpp"
#include "abels/realization.hpp"
#include "abels/sampling.hpp"
#include "abels/subspaces.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace abels {

const std::vector<CorpusEntry>& invariants_corpus() {
  static const std::vector<CorpusEntry> corpus = {
#include "invariants_corpus.inc"
  };
  return corpus;
}

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.passed; });
}

Json SuiteReport::to_json() const {
  Json props = Json::array();
  for (const auto& p : properties) {
    Json j;
    j["module"] = p.module;
    j["name"] = p.name;
    j["cases"] = p.cases;
    j["passed"] = p.passed;
    if (!p.passed) j["counterexample"] = p.counterexample;
    props.push_back(std::move(j));
  }
  Json out;
  out["suite"] = suite;
  out["seed"] = seed;
  out["passed"] = passed();
  out["properties"] = std::move(props);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"invariants", "lattice", "complex", "homology", "all"};
  return names;
}

namespace {

class Check {
 public:
  Check(std::string module, std::string name, std::uint64_t seed) : rng(seed ^ std::hash<std::string>{}(name)) {
    result_.module = std::move(module);
    result_.name = std::move(name);
  }

  /// Counts one case; `describe` runs only for the first failure.
  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  bool failed() const { return !result_.passed; }
  PropertyResult take() { return std::move(result_); }

  Rng rng;

 private:
  PropertyResult result_;
};

std::string show(const VectorXl& v) {
  std::ostringstream out;
  out << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? "," : "") << v(i);
  out << ")";
  return out.str();
}

std::string show(const VectorPair& pair) { return "w1=" + show(pair.w1()) + " w2=" + show(pair.w2()); }

std::string show(const Lattice& l) { return to_json(l).dump(); }

std::string show(const PMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << (i ? "," : "") << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

VectorXl to_vector(const std::vector<std::int64_t>& v) {
  VectorXl out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

// Subgroup of {+-1}^size generated by `signs`, as masks.
std::vector<SignVector> generated_subgroup(int size, const std::vector<SignVector>& signs) {
  std::set<std::uint32_t> group{0};
  for (const auto& s : signs) {
    std::set<std::uint32_t> next = group;
    for (auto g : group) next.insert(g ^ s.minus_mask());
    group = std::move(next);
  }
  std::vector<SignVector> out;
  for (auto g : group) out.emplace_back(size, g);
  return out;
}

// ---------------------------------------------------------------------------
// invariants

PropertyResult sign_group_is_subgroup(std::uint64_t seed) {
  Check c("invariants", "sign_group_is_subgroup", seed);
  for (int t = 0; t < 150 && !c.failed(); ++t) {
    const auto pair = random_pair(c.rng, 2, 8);
    const auto e = sign_group(pair);
    std::set<std::uint32_t> masks;
    for (const auto& s : e) masks.insert(s.minus_mask());
    bool ok = masks.count(0) == 1;
    for (auto a : masks) {
      for (auto b : masks) ok = ok && masks.count(a ^ b);
    }
    c.expect(ok, [&] { return show(pair); });
  }
  return c.take();
}

PropertyResult signs_match_generated_subgroup(std::uint64_t seed) {
  Check c("invariants", "partition_from_signs_of_generated_subgroup", seed);
  for (int t = 0; t < 200 && !c.failed(); ++t) {
    const auto pair = random_pair(c.rng, 2, 7);
    const auto e = sign_group(pair);
    std::vector<SignVector> s;
    const auto picks = uniform(c.rng, 0, 3);
    for (int k = 0; k < picks; ++k) s.push_back(e[static_cast<std::size_t>(uniform(c.rng, 0, static_cast<std::int64_t>(e.size()) - 1))]);
    const auto a = partition_from_signs(pair.size(), s);
    const auto b = partition_from_signs(pair.size(), generated_subgroup(pair.size(), s));
    c.expect(a == b, [&] { return show(pair) + " gives " + a.to_string() + " vs " + b.to_string(); });
  }
  return c.take();
}

PropertyResult refinement_laws(std::uint64_t seed) {
  Check c("invariants", "common_refinement_laws", seed);
  for (int t = 0; t < 300 && !c.failed(); ++t) {
    const int size = static_cast<int>(uniform(c.rng, 1, 8));
    const auto p = random_partition(c.rng, size);
    const auto q = random_partition(c.rng, size);
    const auto r = random_partition(c.rng, size);
    const auto pq = common_refinement({p, q});
    const bool ok = common_refinement({pq, r}) == common_refinement({p, common_refinement({q, r})}) &&
                    pq == common_refinement({q, p}) && common_refinement({p, p}) == p &&
                    common_refinement({p}) == p && pq.refines(p) && pq.refines(q);
    c.expect(ok, [&] { return p.to_string() + " " + q.to_string() + " " + r.to_string(); });
  }
  return c.take();
}

PropertyResult essential_dimension_monotone(std::uint64_t seed) {
  Check c("invariants", "essential_dimension_monotone_under_refinement", seed);
  for (int t = 0; t < 40 && !c.failed(); ++t) {
    const auto pair = random_pair(c.rng, 2, 5);
    const auto v = derived_vector(pair);
    std::vector<Partition> feasible;
    for (const auto& p : all_partitions(pair.size())) {
      if (is_partition_of(p, v)) feasible.push_back(p);
    }
    for (const auto& fine : feasible) {
      for (const auto& coarse : feasible) {
        if (!fine.refines(coarse)) continue;
        c.expect(essential_dimension(fine, v) <= essential_dimension(coarse, v),
                 [&] { return show(pair) + " " + fine.to_string() + " vs " + coarse.to_string(); });
      }
    }
  }
  return c.take();
}

PropertyResult m_bounds(std::uint64_t seed) {
  Check c("invariants", "m_between_1_and_n", seed);
  for (int t = 0; t < 100 && !c.failed(); ++t) {
    const auto pair = random_pair(c.rng, 2, 7);
    const auto m = minimal_essential_dimension(pair, Engine::Search).m;
    c.expect(1 <= m && m <= pair.n(), [&] { return show(pair) + " m=" + std::to_string(m); });
  }
  return c.take();
}

PropertyResult even_pairs(std::uint64_t seed) {
  Check c("invariants", "even_pairs_every_partition_admissible", seed);
  for (int t = 0; t < 20 && !c.failed(); ++t) {
    const auto pair = random_pair(c.rng, 2, 8).doubled();
    for (int k = 0; k < 100 && !c.failed(); ++k) {
      const auto p = random_partition(c.rng, pair.size());
      c.expect(is_admissible(p, pair), [&] { return show(pair) + " " + p.to_string(); });
    }
  }
  return c.take();
}

PropertyResult engine_equivalence(std::uint64_t seed) {
  Check c("invariants", "engine_equivalence", seed);
  for (int t = 0; t < 100 && !c.failed(); ++t) {
    const auto pair = random_pair(c.rng, 2, 6);
    const auto a = minimal_essential_dimension(pair, Engine::Search);
    const auto b = minimal_essential_dimension(pair, Engine::Oracle);
    const bool ok = a.m == b.m && a.witness == b.witness &&
                    admissible_partitions(pair, Engine::Search) == admissible_partitions(pair, Engine::Oracle);
    c.expect(ok, [&] { return show(pair); });
  }
  return c.take();
}

PropertyResult doubling_feasibility(std::uint64_t seed) {
  Check c("invariants", "doubling_preserves_partitions_of_w", seed);
  for (int t = 0; t < 60 && !c.failed(); ++t) {
    const auto pair = random_pair(c.rng, 2, 5);
    const auto v = derived_vector(pair);
    const auto v2 = derived_vector(pair.doubled());
    for (const auto& p : all_partitions(pair.size())) {
      c.expect(is_partition_of(p, v) == is_partition_of(p, v2), [&] { return show(pair) + " " + p.to_string(); });
    }
  }
  return c.take();
}

PropertyResult corpus(std::uint64_t seed) {
  Check c("invariants", "oracle_corpus", seed);
  for (const auto& entry : invariants_corpus()) {
    const auto pair = VectorPair::validate(to_vector(entry.w1), to_vector(entry.w2));
    for (auto engine : {Engine::Search, Engine::Oracle}) {
      const auto e = minimal_essential_dimension(pair, engine);
      const auto count = admissible_partitions(pair, engine).size();
      c.expect(e.m == entry.m && e.witness.to_string() == entry.witness && count == entry.admissible_count, [&] {
        return show(pair) + " gives m=" + std::to_string(e.m) + " witness " + e.witness.to_string() +
               " count " + std::to_string(count);
      });
    }
  }
  return c.take();
}

// ---------------------------------------------------------------------------
// lattice

PropertyResult canonical_form(std::uint64_t seed) {
  Check c("lattice", "canonical_form_basis_independent", seed);
  const std::int64_t primes[] = {2, 3, 5};
  for (int t = 0; t < 500 && !c.failed(); ++t) {
    const std::int64_t p = primes[t % 3];
    const int dim = static_cast<int>(uniform(c.rng, 2, 3));
    const PMatrix b = random_invertible(c.rng, dim, p);
    const Lattice l = Lattice::span(b, p);
    const PMatrix u = random_unimodular(c.rng, dim, p);
    const Lattice changed = Lattice::span(PMatrix(b * u), p);
    const Lattice again = Lattice::span(l.basis(), p);
    c.expect(changed == l && again == l, [&] { return "basis " + show(b) + " change " + show(u); });
  }
  return c.take();
}

PropertyResult index_additive(std::uint64_t seed) {
  Check c("lattice", "index_additive_and_sublattice_independent", seed);
  for (int t = 0; t < 300 && !c.failed(); ++t) {
    const std::int64_t p = t % 2 ? 2 : 3;
    const Lattice a = random_lattice(c.rng, 3, p);
    const Lattice b = random_lattice(c.rng, 3, p);
    const Lattice d = random_lattice(c.rng, 3, p);
    // Two common sublattices: p^k L0 and p^k D for k large enough.
    int k = 0;
    while (!(a.contains(Lattice::standard(3, p).scaled(k)) && b.contains(Lattice::standard(3, p).scaled(k)) &&
             a.contains(d.scaled(k)) && b.contains(d.scaled(k)))) {
      ++k;
    }
    auto length = [](const Lattice& big, const Lattice& small) { return small.det_valuation() - big.det_valuation(); };
    const Lattice l1 = Lattice::standard(3, p).scaled(k);
    const Lattice l2 = d.scaled(k);
    const bool ok = length(a, l1) - length(b, l1) == length(a, l2) - length(b, l2) &&
                    index(a, b) == length(a, l1) - length(b, l1) && index(a, b) + index(b, d) == index(a, d);
    c.expect(ok, [&] { return show(a) + " " + show(b) + " " + show(d); });
  }
  return c.take();
}

PropertyResult epsilon_equivariance(std::uint64_t seed) {
  Check c("lattice", "epsilon_equivariance", seed);
  for (int t = 0; t < 1000 && !c.failed(); ++t) {
    const std::int64_t p = t % 2 ? 2 : 3;
    const int dim = static_cast<int>(uniform(c.rng, 2, 4));
    const Lattice a = random_lattice(c.rng, dim, p);
    const PMatrix g = random_invertible(c.rng, dim, p);
    const Rational expected = epsilon(a) - Rational(det_valuation(g)) / dim;
    c.expect(epsilon(act(g, a)) == expected, [&] { return "g=" + show(g) + " A=" + show(a); });
  }
  return c.take();
}

PropertyResult retraction_equivariance(std::uint64_t seed) {
  Check c("lattice", "retraction_equivariance", seed);
  for (int t = 0; t < 500 && !c.failed(); ++t) {
    const std::int64_t p = t % 2 ? 2 : 5;
    const int dim = static_cast<int>(uniform(c.rng, 2, 4));
    const Lattice a = random_lattice(c.rng, dim, p);
    const PMatrix u = random_unipotent(c.rng, dim, p);
    std::vector<PScalar> diag;
    std::vector<int> shift;
    for (int i = 0; i < dim; ++i) {
      diag.push_back(random_pscalar(c.rng, p, -2, 2, false));
      shift.push_back(diag.back().valuation());
    }
    auto expected = retraction(a);
    const bool unipotent_ok = retraction(act(u, a)) == expected;
    for (int i = 0; i < dim; ++i) expected[static_cast<std::size_t>(i)] += shift[static_cast<std::size_t>(i)];
    const bool diagonal_ok = retraction(act(diagonal_matrix(diag), a)) == expected;
    c.expect(unipotent_ok && diagonal_ok, [&] { return "u=" + show(u) + " A=" + show(a); });
  }
  return c.take();
}

PropertyResult neighbor_counts(std::uint64_t seed) {
  Check c("lattice", "neighbor_counts_match_subspace_counts", seed);
  for (std::int64_t p : {2, 3, 5}) {
    for (int dim : {2, 3}) {
      std::int64_t subspaces = 0;
      for (int k = 1; k < dim; ++k) subspaces += gaussian_binomial(dim, k, p);
      for (auto model : {Model::Extended, Model::Quotient}) {
        const std::int64_t expected = model == Model::Extended ? 2 * subspaces + 2 : subspaces;
        for (const Lattice& center : {Lattice::standard(dim, p), random_lattice(c.rng, dim, p)}) {
          const auto n = static_cast<std::int64_t>(neighbors(center, model).size());
          c.expect(n == expected && neighbor_count(dim, p, model) == expected, [&] {
            return "p=" + std::to_string(p) + " dim=" + std::to_string(dim) + " model=" +
                   std::string(model_name(model)) + " count " + std::to_string(n);
          });
        }
      }
    }
  }
  return c.take();
}

std::vector<Lattice> between_window(std::int64_t p) {
  const Lattice l0 = Lattice::standard(2, p);
  return lattices_between(l0.scaled(2), l0.scaled(-2));
}

PropertyResult involution_odd(std::uint64_t seed) {
  Check c("lattice", "involution_fixed_iff_split_p3", seed);
  for (const auto& l : between_window(3)) {
    for (const char* s : {"+-", "-+"}) {
      const auto r = involution_analysis(SignVector::parse(s), l);
      c.expect(r.fixed == r.splits, [&] { return std::string(s) + " " + show(l); });
    }
  }
  return c.take();
}

PropertyResult involution_even(std::uint64_t seed) {
  Check c("lattice", "involution_split_implies_fixed_p2", seed);
  std::size_t witnesses = 0;
  for (const auto& l : between_window(2)) {
    const auto r = involution_analysis(SignVector::parse("+-"), l);
    witnesses += r.fixed && !r.splits;
    c.expect(!r.splits || r.fixed, [&] { return show(l); });
  }
  c.expect(witnesses > 0, [] { return std::string("no fixed non-split lattice for p = 2"); });
  return c.take();
}

PropertyResult diagonalize_round_trip(std::uint64_t seed) {
  Check c("lattice", "diagonalize_involution_round_trip", seed);
  for (int t = 0; t < 500 && !c.failed(); ++t) {
    const std::int64_t p = t % 2 ? 3 : 5;
    const int dim = static_cast<int>(uniform(c.rng, 2, 4));
    const SignVector d(dim, static_cast<std::uint32_t>(uniform(c.rng, 0, (1 << dim) - 1)));
    const PMatrix v = random_unipotent(c.rng, dim, p, -1, 1);
    const PMatrix g = v * sign_matrix(d, p) * triangular_inverse(v);
    bool ok = false;
    try {
      const auto r = diagonalize_involution(g, p);
      const PMatrix conj = triangular_inverse(r.u) * g * r.u;
      ok = r.d == d && conj == sign_matrix(d, p) && is_upper_triangular(r.u);
      for (int i = 0; i < dim; ++i) ok = ok && r.u(i, i) == PScalar(1, p);
    } catch (const Error&) {
      ok = false;
    }
    c.expect(ok, [&] { return "g=" + show(g); });
  }
  return c.take();
}

PropertyResult borel_reduction(std::uint64_t seed) {
  Check c("lattice", "borel_reduce_on_ball", seed);
  const auto b = ball(Lattice::standard(3, 2), 2, Model::Extended);
  const Lattice l0 = Lattice::standard(3, 2);
  for (const auto& l : b.vertices) {
    const PMatrix m = borel_reduce(l);
    c.expect(is_upper_triangular(m) && act(m, l0) == l, [&] { return show(l); });
  }
  return c.take();
}

// ---------------------------------------------------------------------------
// complex

struct Sample {
  std::string label;
  BuildingComplex x;
};

std::vector<Sample> sample_complexes() {
  std::vector<Sample> out;
  auto add = [&](std::int64_t p, int dim, int radius, Model model) {
    const auto b = ball(Lattice::standard(dim, p), radius, model);
    out.push_back({"p=" + std::to_string(p) + " dim=" + std::to_string(dim) + " radius=" + std::to_string(radius) +
                       " " + std::string(model_name(model)),
                   build_complex(b.vertices, model)});
  };
  add(3, 2, 2, Model::Quotient);
  add(2, 2, 2, Model::Extended);
  add(3, 2, 1, Model::Extended);
  add(2, 3, 1, Model::Quotient);
  add(2, 3, 2, Model::Quotient);
  add(2, 3, 1, Model::Extended);
  return out;
}

PropertyResult face_closure(std::uint64_t seed, const std::vector<Sample>& samples) {
  Check c("complex", "face_closure", seed);
  for (const auto& s : samples) c.expect(s.x.complex.is_face_closed(), [&] { return s.label; });
  return c.take();
}

PropertyResult flag_consistency(std::uint64_t seed, const std::vector<Sample>& samples) {
  Check c("complex", "clique_complex_equals_flag_test", seed);
  for (const auto& s : samples) {
    c.expect(flag_complex_direct(s.x.vertices, s.x.model) == s.x.complex, [&] { return s.label; });
  }
  return c.take();
}

PropertyResult homogeneity(std::uint64_t seed) {
  Check c("complex", "ball_size_independent_of_center", seed);
  const std::size_t quotient = ball(Lattice::standard(3, 2), 2, Model::Quotient).vertices.size();
  const std::size_t extended = ball(Lattice::standard(2, 3), 2, Model::Extended).vertices.size();
  for (int t = 0; t < 10; ++t) {
    const Lattice a = random_lattice(c.rng, 3, 2);
    const Lattice b = random_lattice(c.rng, 2, 3);
    c.expect(ball(a, 2, Model::Quotient).vertices.size() == quotient, [&] { return show(a); });
    c.expect(ball(b, 2, Model::Extended).vertices.size() == extended, [&] { return show(b); });
  }
  return c.take();
}

RationalVector random_weights(Rng& rng) {
  const int n = static_cast<int>(uniform(rng, 1, 5));
  std::vector<std::int64_t> raw(static_cast<std::size_t>(n));
  std::int64_t total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : raw) {
      x = uniform(rng, 0, 3) == 0 ? 0 : uniform(rng, 1, 9);
      total += x;
    }
  }
  RationalVector alpha(n);
  for (int i = 0; i < n; ++i) alpha(i) = Rational(raw[static_cast<std::size_t>(i)], total);
  return alpha;
}

PropertyResult interval_cover_property(std::uint64_t seed) {
  Check c("complex", "interval_cover_unique_and_exact", seed);
  for (int t = 0; t < 1000 && !c.failed(); ++t) {
    const RationalVector alpha = random_weights(c.rng);
    const std::int64_t n = alpha.size();
    const Rational r(uniform(c.rng, -400, 400), uniform(c.rng, 1, 60));
    const auto cover = interval_cover(alpha, r);
    auto weight = [&](std::int64_t j) { return alpha(static_cast<Eigen::Index>(((j % n) + n) % n)); };
    const Rational ci = cover_offset(alpha, cover.i);
    bool ok = weight(cover.i) > 0 && ci < r && r <= ci + weight(cover.i) && cover.beta >= 0 && cover.beta < 1 &&
              cover_reconstruct(alpha, cover.i, cover.beta) == r;
    for (std::int64_t j = cover.i - 2 * n; j <= cover.i + 2 * n; ++j) {
      const Rational cj = cover_offset(alpha, j);
      ok = ok && cover_offset(alpha, j + 1) - cj == weight(j);
      if (j != cover.i && weight(j) > 0) ok = ok && !(cj < r && r <= cj + weight(j));
    }
    c.expect(ok, [&] {
      std::string s = "alpha=(";
      for (Eigen::Index i = 0; i < alpha.size(); ++i) s += (i ? "," : "") + format_rational(alpha(i));
      return s + ") r=" + format_rational(r);
    });
  }
  return c.take();
}

PropertyResult fixed_set_product(std::uint64_t seed) {
  Check c("complex", "fixed_set_product_structure", seed);
  struct Case {
    VectorXl w1, w2;
    int radius;
  };
  const std::vector<Case> cases = {
      {VectorXl{{1, 0, 0}}, VectorXl{{0, 0, -1}}, 2},
      {VectorXl{{1, 0, 0, 0}}, VectorXl{{0, 0, 0, -1}}, 2},
      {VectorXl{{2, 2, 2, 2}}, VectorXl{{1, 1, 0, -2}}, 2},
      {VectorXl{{1, 1, 1, 0, 0}}, VectorXl{{0, 0, -1, -1, -1}}, 1},
  };
  const std::int64_t p = 3;
  for (const auto& k : cases) {
    const auto pair = VectorPair::validate(k.w1, k.w2);
    const auto b = ball(Lattice::standard(pair.size(), p), k.radius, Model::Extended, Budget{200000, std::nullopt});
    for (const auto& s : sign_group(pair)) {
      if (s.minus_mask() == 0) continue;
      const auto r = product_check(b.vertices, Model::Extended, {s});
      c.expect(r.holds, [&] { return show(pair) + " sign " + s.to_string(); });
    }
  }
  // Negative control: the wrong partition must be detected.
  const auto b = ball(Lattice::standard(2, p), 2, Model::Extended);
  const auto wrong = product_check(b.vertices, Model::Extended, {SignVector::parse("+-")}, Partition::trivial(2));
  c.expect(!wrong.holds, [] { return std::string("wrong partition accepted"); });
  const auto empty = product_check(b.vertices, Model::Extended, {});
  c.expect(empty.holds && empty.fixed == b.vertices.size(), [] { return std::string("empty F"); });
  return c.take();
}

PropertyResult height_slices(std::uint64_t seed) {
  Check c("complex", "height_slice_compatibility", seed);
  const HeightFunction h1(VectorXl{{1, 0, 0}});
  const HeightFunction hw(VectorXl{{1, 0, -1}});
  const std::int64_t p = 2;
  const auto ext = ball(Lattice::standard(3, p), 3, Model::Extended);
  const auto quo = ball(Lattice::standard(3, p), 2, Model::Quotient);
  std::set<Lattice> quotient_ball(quo.vertices.begin(), quo.vertices.end());
  std::set<Lattice> extended_ball(ext.vertices.begin(), ext.vertices.end());
  for (std::int64_t lo = -2; lo <= 0; ++lo) {
    const std::int64_t hi = lo + 2;
    std::set<Lattice> slice;
    std::set<Lattice> projected;
    for (const auto& v : ext.vertices) {
      if (height(v, h1) != 0 || height(v, hw) < lo || height(v, hw) > hi) continue;
      slice.insert(v);
      const auto rep = class_representative(v);
      c.expect(projected.insert(rep).second, [&] { return "projection not injective at " + show(v); });
      if (quotient_ball.count(rep)) {
        c.expect(height(LatticeClass(rep), hw) == height(v, hw), [&] { return show(v); });
      }
    }
    for (const auto& q : quo.vertices) {
      const auto hq = height(LatticeClass(q), hw);
      if (hq < lo || hq > hi) continue;
      // Sum of w1 is 1, so exactly one homothet of q lies on the w1-horosphere.
      const Lattice lift = q.scaled(static_cast<int>(-height(q, h1)));
      c.expect(height(lift, h1) == 0 && class_representative(lift) == q, [&] { return show(q); });
      if (extended_ball.count(lift)) c.expect(slice.count(lift) == 1, [&] { return show(q); });
    }
  }
  return c.take();
}

PropertyResult complex_corpus(std::uint64_t seed) {
  Check c("complex", "building_corpus", seed);
  auto counts = [](std::int64_t p, int dim, int radius, Model model) {
    const auto b = ball(Lattice::standard(dim, p), radius, model);
    return build_complex(b.vertices, model).complex;
  };
  const auto tree = counts(3, 2, 1, Model::Quotient);
  c.expect(tree.count(0) == 5 && tree.count(1) == 4 && tree.count(2) == 0, [] { return std::string("p=3 tree ball"); });
  const auto a2 = counts(2, 3, 1, Model::Quotient);
  c.expect(a2.count(0) == 15 && a2.count(2) == 21, [] { return std::string("p=2 dim=3 ball"); });
  const auto point = counts(2, 2, 0, Model::Quotient);
  c.expect(point.count(0) == 1 && point.dimension() == 0, [] { return std::string("radius 0"); });
  const Lattice l0 = Lattice::standard(2, 3);
  c.expect(epsilon_affine({{l0, Rational(1)}}) == 0, [] { return std::string("epsilon at vertex"); });
  c.expect(epsilon_affine({{l0, Rational(1, 2)}, {l0.scaled(1), Rational(1, 2)}}) == Rational(-1, 2),
           [] { return std::string("epsilon at edge midpoint"); });
  return c.take();
}

// ---------------------------------------------------------------------------
// homology

std::vector<std::pair<std::string, SimplicialComplex>> homology_samples() {
  std::vector<std::pair<std::string, SimplicialComplex>> out = {
      {"S0", fixtures::sphere(0)},          {"S1", fixtures::sphere(1)},
      {"S2", fixtures::sphere(2)},          {"S3", fixtures::sphere(3)},
      {"RP2", fixtures::projective_plane()}, {"simplex3", fixtures::simplex(3)},
      {"points5", fixtures::points(5)},
  };
  for (const auto& s : sample_complexes()) out.emplace_back(s.label, s.x.complex);
  return out;
}

PropertyResult boundary_squared(std::uint64_t seed, const std::vector<std::pair<std::string, SimplicialComplex>>& xs) {
  Check c("homology", "boundary_squared_zero", seed);
  for (const auto& [label, x] : xs) {
    const auto cc = boundary_matrices(x);
    for (std::size_t k = 0; k + 1 < cc.boundary.size(); ++k) {
      SparseIntMatrix prod = cc.boundary[k] * cc.boundary[k + 1];
      prod.prune(std::int64_t{0});
      c.expect(prod.nonZeros() == 0, [&] { return label + " degree " + std::to_string(k); });
    }
  }
  return c.take();
}

bool same(const BigMatrix& a, const BigMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a.data()[i] != b.data()[i]) return false;
  }
  return true;
}

// Fraction-free determinant, independent of the Smith form code.
BigInt bareiss_determinant(BigMatrix a) {
  const Eigen::Index n = a.rows();
  BigInt sign(1), prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return BigInt(0);
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

PropertyResult smith_form(std::uint64_t seed) {
  Check c("homology", "smith_normal_form", seed);
  for (int t = 0; t < 300 && !c.failed(); ++t) {
    const int rows = static_cast<int>(uniform(c.rng, 1, 6));
    const int cols = t % 3 == 0 ? rows : static_cast<int>(uniform(c.rng, 1, 6));
    BigMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = BigInt(uniform(c.rng, -6, 6));
    const auto f = smith_normal_form(m, true);
    BigMatrix d = BigMatrix::Constant(rows, cols, BigInt(0));
    for (int i = 0; i < f.rank; ++i) d(i, i) = f.divisors[static_cast<std::size_t>(i)];
    BigMatrix id = BigMatrix::Constant(cols, cols, BigInt(0));
    for (int i = 0; i < cols; ++i) id(i, i) = 1;
    bool ok = same(multiply(multiply(*f.U, m), *f.V), d) && same(multiply(*f.V, *f.V_inverse), id);
    for (std::size_t i = 0; i + 1 < f.divisors.size(); ++i) ok = ok && f.divisors[i + 1] % f.divisors[i] == 0;
    if (rows == cols) {
      const BigInt det = bareiss_determinant(m);
      if (det != 0) {
        BigInt prod(1);
        for (const auto& x : f.divisors) prod *= x;
        ok = ok && prod == (det < 0 ? BigInt(-det) : det);
      }
    }
    c.expect(ok, [&] {
      std::ostringstream out;
      for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) out << m(i, j) << (j + 1 < cols ? " " : "");
        out << (i + 1 < rows ? "; " : "");
      }
      return out.str();
    });
  }
  return c.take();
}

PropertyResult euler_consistency(std::uint64_t seed, const std::vector<std::pair<std::string, SimplicialComplex>>& xs) {
  Check c("homology", "euler_characteristic_consistency", seed);
  for (const auto& [label, x] : xs) {
    std::int64_t alternating = 1;  // reduced homology drops one from degree 0
    for (const auto& h : reduced_homology(x)) alternating += (h.k % 2 ? -1 : 1) * h.betti;
    c.expect(alternating == x.euler_characteristic(), [&] { return label; });
  }
  return c.take();
}

PropertyResult cones_acyclic(std::uint64_t seed, const std::vector<std::pair<std::string, SimplicialComplex>>& xs) {
  Check c("homology", "cones_are_acyclic", seed);
  for (const auto& [label, x] : xs) {
    if (x.total_count() > 3000) continue;
    const auto verts = x.vertices();
    const auto cone = x.cone(verts.empty() ? 0 : verts.back() + 1);
    const auto h = reduced_homology(cone);
    c.expect(std::all_of(h.begin(), h.end(), [](const auto& d) { return d.is_zero(); }), [&] { return label; });
  }
  return c.take();
}

PropertyResult functoriality(std::uint64_t seed, const std::vector<std::pair<std::string, SimplicialComplex>>& xs) {
  Check c("homology", "identity_induces_injective", seed);
  for (const auto& [label, x] : xs) {
    const auto h = reduced_homology(x);
    for (const auto& d : h) {
      if (d.betti == 0) continue;
      c.expect(induced_map_class(x, x, d.k).kind == MapClass::Injective,
               [&] { return label + " degree " + std::to_string(d.k); });
    }
  }
  return c.take();
}

PropertyResult homology_fixtures(std::uint64_t seed) {
  Check c("homology", "fixture_homology", seed);
  auto degree = [](const SimplicialComplex& x, int k) {
    const auto h = reduced_homology(x);
    return k < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(k)] : DegreeHomology{k, 0, {}};
  };
  for (int k = 0; k <= 3; ++k) {
    const auto s = fixtures::sphere(k);
    for (int j = 0; j <= k; ++j) {
      const auto h = degree(s, j);
      c.expect(h.betti == (j == k ? 1 : 0) && h.torsion.empty(),
               [&] { return "S" + std::to_string(k) + " degree " + std::to_string(j); });
    }
  }
  const auto rp2 = fixtures::projective_plane();
  c.expect(degree(rp2, 0).is_zero() && degree(rp2, 1).betti == 0 && degree(rp2, 1).torsion == std::vector<BigInt>{2} &&
               degree(rp2, 2).is_zero(),
           [] { return std::string("RP2"); });
  c.expect(degree(fixtures::points(2), 0).betti == 1, [] { return std::string("two points"); });
  const auto two = fixtures::points(2);
  const auto path = SimplicialComplex::from_simplices({{0, 2}, {2, 1}});
  c.expect(induced_map_class(two, path, 0).kind == MapClass::Zero, [] { return std::string("points into path"); });
  return c.take();
}

void run_invariants(std::uint64_t seed, std::vector<PropertyResult>& out) {
  out.push_back(sign_group_is_subgroup(seed));
  out.push_back(signs_match_generated_subgroup(seed));
  out.push_back(refinement_laws(seed));
  out.push_back(essential_dimension_monotone(seed));
  out.push_back(m_bounds(seed));
  out.push_back(even_pairs(seed));
  out.push_back(engine_equivalence(seed));
  out.push_back(doubling_feasibility(seed));
  out.push_back(corpus(seed));
}

void run_lattice(std::uint64_t seed, std::vector<PropertyResult>& out) {
  out.push_back(canonical_form(seed));
  out.push_back(index_additive(seed));
  out.push_back(epsilon_equivariance(seed));
  out.push_back(retraction_equivariance(seed));
  out.push_back(neighbor_counts(seed));
  out.push_back(involution_odd(seed));
  out.push_back(involution_even(seed));
  out.push_back(diagonalize_round_trip(seed));
  out.push_back(borel_reduction(seed));
}

void run_complex(std::uint64_t seed, std::vector<PropertyResult>& out) {
  const auto samples = sample_complexes();
  out.push_back(face_closure(seed, samples));
  out.push_back(flag_consistency(seed, samples));
  out.push_back(homogeneity(seed));
  out.push_back(interval_cover_property(seed));
  out.push_back(fixed_set_product(seed));
  out.push_back(height_slices(seed));
  out.push_back(complex_corpus(seed));
}

void run_homology(std::uint64_t seed, std::vector<PropertyResult>& out) {
  const auto xs = homology_samples();
  out.push_back(boundary_squared(seed, xs));
  out.push_back(smith_form(seed));
  out.push_back(euler_consistency(seed, xs));
  out.push_back(cones_acyclic(seed, xs));
  out.push_back(functoriality(seed, xs));
  out.push_back(homology_fixtures(seed));
}

}  // namespace

SuiteReport run_suite(std::string_view suite, std::uint64_t seed) {
  SuiteReport report;
  report.suite = std::string(suite);
  report.seed = seed;
  const bool all = suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
  }
  if (all || suite == "invariants") run_invariants(seed, report.properties);
  if (all || suite == "lattice") run_lattice(seed, report.properties);
  if (all || suite == "complex") run_complex(seed, report.properties);
  if (all || suite == "homology") run_homology(seed, report.properties);
  return report;
}

}  // namespace abels
