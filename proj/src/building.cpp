#include "abels/building.hpp"

#include "abels/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace abels {

void Budget::check(std::size_t count) const {
  if (count > cap) {
    throw Error(ErrorKind::CapExceeded, "vertex count " + std::to_string(count) + " exceeds cap " + std::to_string(cap));
  }
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw Error(ErrorKind::TimeLimitExceeded, "time limit exceeded");
  }
}

std::vector<Lattice> Ball::deep_vertices() const {
  std::vector<Lattice> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (distance[i] <= radius - 1) out.push_back(vertices[i]);
  }
  return out;
}

Ball ball(const Lattice& center, int radius, Model model, const Budget& budget) {
  if (radius < 0) throw Error(ErrorKind::InvalidArgument, "radius must be non-negative");
  Ball out;
  out.model = model;
  out.center = model == Model::Quotient ? class_representative(center) : center;
  out.radius = radius;

  std::unordered_set<Lattice, LatticeHash> seen{out.center};
  std::vector<Lattice> layer{out.center};
  for (int r = 0; r <= radius; ++r) {
    std::sort(layer.begin(), layer.end());
    for (const auto& v : layer) {
      out.vertices.push_back(v);
      out.distance.push_back(r);
    }
    if (r == radius) break;
    std::vector<Lattice> next;
    for (const auto& v : layer) {
      budget.check(seen.size());
      for (auto& n : neighbors(v, model)) {
        if (seen.insert(n).second) next.push_back(std::move(n));
      }
    }
    budget.check(seen.size());
    layer = std::move(next);
  }
  return out;
}

// ---------------------------------------------------------------------------

int BuildingComplex::id_of(const Lattice& v) const {
  auto it = ids_.find(v);
  return it == ids_.end() ? -1 : it->second;
}

void BuildingComplex::rebuild_index() {
  ids_.clear();
  for (std::size_t i = 0; i < vertices.size(); ++i) ids_.emplace(vertices[i], static_cast<int>(i));
}

namespace {

void extend_cliques(const std::vector<std::vector<int>>& adj, Simplex& current, const std::vector<int>& candidates,
                    std::vector<std::vector<Simplex>>& out) {
  const std::size_t k = current.size();
  if (out.size() < k) out.resize(k);
  out[k - 1].push_back(current);
  for (int c : candidates) {
    std::vector<int> next;
    const auto& nc = adj[static_cast<std::size_t>(c)];
    std::set_intersection(candidates.begin(), candidates.end(), nc.begin(), nc.end(), std::back_inserter(next));
    next.erase(next.begin(), std::upper_bound(next.begin(), next.end(), c));
    current.push_back(c);
    extend_cliques(adj, current, next, out);
    current.pop_back();
  }
}

}  // namespace

BuildingComplex build_complex(std::vector<Lattice> vertices, Model model, const Budget& budget) {
  BuildingComplex x;
  x.model = model;
  if (model == Model::Quotient) {
    for (auto& v : vertices) v = class_representative(v);
  }
  std::vector<Lattice> unique_vertices;
  {
    std::unordered_set<Lattice, LatticeHash> seen;
    for (auto& v : vertices) {
      if (seen.insert(v).second) unique_vertices.push_back(std::move(v));
    }
  }
  x.vertices = std::move(unique_vertices);
  if (!x.vertices.empty()) {
    x.p = x.vertices.front().prime();
    x.dim = x.vertices.front().dim();
  }
  x.rebuild_index();

  const std::size_t n = x.vertices.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i % 64 == 0) budget.check(n);
    for (const auto& nb : neighbors(x.vertices[i], model)) {
      int j = x.id_of(nb);
      if (j >= 0) adj[i].push_back(j);
    }
    std::sort(adj[i].begin(), adj[i].end());
  }

  std::vector<std::vector<Simplex>> levels;
  for (std::size_t i = 0; i < n; ++i) {
    Simplex current{static_cast<int>(i)};
    std::vector<int> candidates(std::upper_bound(adj[i].begin(), adj[i].end(), static_cast<int>(i)), adj[i].end());
    extend_cliques(adj, current, candidates, levels);
  }
  x.complex = SimplicialComplex::from_closed(std::move(levels));
  return x;
}

SimplicialComplex flag_complex_direct(const std::vector<Lattice>& vertices, Model model) {
  auto test = [model](const std::vector<Lattice>& s) {
    return model == Model::Extended ? chain_is_simplex(s) : classes_form_simplex(s);
  };
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<Simplex>> levels(1);
  for (int i = 0; i < n; ++i) levels[0].push_back({i});
  // A face of a flag is a flag, so growing level by level finds everything.
  while (!levels.back().empty()) {
    std::vector<Simplex> next;
    for (const auto& s : levels.back()) {
      for (int v = s.back() + 1; v < n; ++v) {
        std::vector<Lattice> chain;
        for (int id : s) chain.push_back(vertices[static_cast<std::size_t>(id)]);
        chain.push_back(vertices[static_cast<std::size_t>(v)]);
        if (test(chain)) {
          Simplex t = s;
          t.push_back(v);
          next.push_back(std::move(t));
        }
      }
    }
    levels.push_back(std::move(next));
  }
  return SimplicialComplex::from_closed(std::move(levels));
}

// ---------------------------------------------------------------------------

VertexPredicate VertexPredicate::height_interval(HeightFunction h, Rational lower, Rational upper) {
  if (lower > upper) {
    throw Error(ErrorKind::InvalidArgument,
                "empty height interval [" + format_rational(lower) + ", " + format_rational(upper) + "]");
  }
  return VertexPredicate(Height{std::move(h), std::move(lower), std::move(upper)});
}

VertexPredicate VertexPredicate::fixed_by(std::vector<SignVector> signs) {
  return VertexPredicate(Fixed{std::move(signs)});
}

VertexPredicate VertexPredicate::all_of(std::vector<VertexPredicate> parts) {
  return VertexPredicate(All{std::move(parts)});
}

void VertexPredicate::check_model(Model model) const {
  if (const auto* h = std::get_if<Height>(&kind_)) {
    if (model == Model::Quotient && !h->h.descends_to_classes()) {
      throw Error(ErrorKind::ClassModelMismatch,
                  "height with nonzero weight sum needs the extended model");
    }
  } else if (const auto* all = std::get_if<All>(&kind_)) {
    for (const auto& part : all->parts) part.check_model(model);
  }
}

bool VertexPredicate::operator()(const Lattice& v, Model model) const {
  if (const auto* h = std::get_if<Height>(&kind_)) {
    Rational value = model == Model::Quotient ? Rational(height(LatticeClass(v), h->h)) : Rational(height(v, h->h));
    return h->lower <= value && value <= h->upper;
  }
  if (const auto* f = std::get_if<Fixed>(&kind_)) {
    for (const auto& s : f->signs) {
      Lattice image = act(sign_matrix(s, v.prime()), v);
      if (model == Model::Quotient) image = class_representative(image);
      if (!(image == v)) return false;
    }
    return true;
  }
  for (const auto& part : std::get<All>(kind_).parts) {
    if (!part(v, model)) return false;
  }
  return true;
}

std::vector<int> select_vertices(const BuildingComplex& x, const VertexPredicate& pred) {
  pred.check_model(x.model);
  std::vector<int> out;
  for (std::size_t i = 0; i < x.vertices.size(); ++i) {
    if (pred(x.vertices[i], x.model)) out.push_back(static_cast<int>(i));
  }
  return out;
}

SimplicialComplex full_subcomplex(const BuildingComplex& x, const VertexPredicate& pred) {
  return x.complex.induced(select_vertices(x, pred));
}

bool is_block_sum(const Lattice& v, const Partition& blocks) {
  if (blocks.size() != v.dim()) throw Error(ErrorKind::LengthMismatch, "partition size differs from dimension");
  int total = 0;
  for (const auto& block : blocks.blocks()) total += coordinate_sublattice(v, block).det_valuation();
  return total == v.det_valuation();
}

ProductCheck product_check(const std::vector<Lattice>& vertices, Model model, const std::vector<SignVector>& signs,
                           const std::optional<Partition>& partition) {
  if (model != Model::Extended) {
    throw Error(ErrorKind::ClassModelMismatch, "product check runs on the extended model");
  }
  ProductCheck out;
  if (vertices.empty()) {
    out.holds = true;
    return out;
  }
  const int dim = vertices.front().dim();
  out.partition = partition ? *partition : partition_from_signs(dim, signs);
  const auto fixed = VertexPredicate::fixed_by(signs);
  for (const auto& v : vertices) {
    const bool f = fixed(v, model);
    const bool b = is_block_sum(v, out.partition);
    out.fixed += f;
    out.block_sums += b;
    out.mismatches += f != b;
  }
  out.holds = out.mismatches == 0;
  return out;
}

}  // namespace abels
