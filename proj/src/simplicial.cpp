#include "abels/simplicial.hpp"

#include "abels/errors.hpp"

#include <algorithm>
#include <set>

namespace abels {

namespace {

const std::vector<Simplex> kNone;

void add_faces(const Simplex& s, std::vector<std::set<Simplex>>& out) {
  const std::size_t k = s.size();
  if (k == 0) return;
  if (out.size() < k) out.resize(k);
  // Every nonempty subset, via bitmasks; simplices here are small.
  if (k > 20) throw Error(ErrorKind::InvalidArgument, "simplex too large for face closure");
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) face.push_back(s[i]);
    }
    out[face.size() - 1].insert(std::move(face));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
  std::vector<std::set<Simplex>> sets;
  for (Simplex s : simplices) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(ErrorKind::InvalidArgument, "simplex with a repeated vertex");
    }
    add_faces(s, sets);
  }
  SimplicialComplex out;
  for (auto& set : sets) out.by_dim_.emplace_back(set.begin(), set.end());
  return out;
}

SimplicialComplex SimplicialComplex::from_closed(std::vector<std::vector<Simplex>> by_dimension) {
  while (!by_dimension.empty() && by_dimension.back().empty()) by_dimension.pop_back();
  for (auto& level : by_dimension) {
    for (auto& s : level) std::sort(s.begin(), s.end());
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  SimplicialComplex out;
  out.by_dim_ = std::move(by_dimension);
  return out;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return kNone;
  return by_dim_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::total_count() const {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const auto& s : simplices(0)) out.push_back(s[0]);
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return false;
  const auto& level = simplices(static_cast<int>(s.size()) - 1);
  return std::binary_search(level.begin(), level.end(), s);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& level : by_dim_) {
    for (const auto& s : level) {
      if (!other.contains(s)) return false;
    }
  }
  return true;
}

bool SimplicialComplex::is_face_closed() const {
  for (std::size_t k = 1; k < by_dim_.size(); ++k) {
    for (const auto& s : by_dim_[k]) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != drop) face.push_back(s[i]);
        }
        if (!contains(face)) return false;
      }
    }
  }
  return true;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& vertices) const {
  std::vector<int> keep = vertices;
  std::sort(keep.begin(), keep.end());
  std::vector<std::vector<Simplex>> levels;
  for (const auto& level : by_dim_) {
    std::vector<Simplex> kept;
    for (const auto& s : level) {
      bool all = std::all_of(s.begin(), s.end(), [&](int v) { return std::binary_search(keep.begin(), keep.end(), v); });
      if (all) kept.push_back(s);
    }
    levels.push_back(std::move(kept));
  }
  return from_closed(std::move(levels));
}

SimplicialComplex SimplicialComplex::cone(int apex) const {
  if (contains({apex})) throw Error(ErrorKind::InvalidArgument, "cone apex is already a vertex");
  std::vector<std::vector<Simplex>> levels = by_dim_;
  levels.resize(by_dim_.size() + 1);
  if (levels.empty()) levels.resize(1);
  levels[0].push_back({apex});
  for (std::size_t k = 0; k < by_dim_.size(); ++k) {
    for (const auto& s : by_dim_[k]) {
      Simplex t = s;
      t.push_back(apex);
      levels[k + 1].push_back(std::move(t));
    }
  }
  return from_closed(std::move(levels));
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < by_dim_.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(by_dim_[k].size());
  }
  return chi;
}

namespace fixtures {

SimplicialComplex points(int count) {
  std::vector<Simplex> s;
  for (int i = 0; i < count; ++i) s.push_back({i});
  return SimplicialComplex::from_simplices(s);
}

SimplicialComplex sphere(int k) {
  std::vector<Simplex> facets;
  for (int drop = 0; drop <= k + 1; ++drop) {
    Simplex f;
    for (int v = 0; v <= k + 1; ++v) {
      if (v != drop) f.push_back(v);
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_simplices(facets);
}

SimplicialComplex simplex(int k) {
  Simplex s;
  for (int v = 0; v <= k; ++v) s.push_back(v);
  return SimplicialComplex::from_simplices({s});
}

SimplicialComplex projective_plane() {
  return SimplicialComplex::from_simplices({{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                            {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

}  // namespace fixtures

}  // namespace abels
