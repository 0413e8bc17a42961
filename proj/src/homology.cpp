#include "abels/homology.hpp"

#include "abels/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace abels {

namespace {

std::size_t position(const std::vector<Simplex>& level, const Simplex& s) {
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) throw Error(ErrorKind::InvalidArgument, "complex is not face closed");
  return static_cast<std::size_t>(it - level.begin());
}

std::int64_t checked_fma(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_add_overflow(a, prod, &sum)) {
    throw Error(ErrorKind::PrecisionExceeded, "integer overflow during sparse elimination");
  }
  return sum;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

BigMatrix dense(const SparseIntMatrix& m) {
  BigMatrix out = BigMatrix::Constant(m.rows(), m.cols(), BigInt(0));
  for (int c = 0; c < m.outerSize(); ++c) {
    for (SparseIntMatrix::InnerIterator it(m, c); it; ++it) out(it.row(), it.col()) = BigInt(it.value());
  }
  return out;
}

}  // namespace

ChainComplex boundary_matrices(const SimplicialComplex& x) {
  ChainComplex out;
  const int top = x.dimension();
  for (int k = 0; k <= top; ++k) out.ranks.push_back(x.count(k));
  if (top < 0) return out;

  SparseIntMatrix aug(1, static_cast<Eigen::Index>(x.count(0)));
  std::vector<Eigen::Triplet<std::int64_t>> trips;
  for (std::size_t j = 0; j < x.count(0); ++j) trips.emplace_back(0, static_cast<int>(j), 1);
  aug.setFromTriplets(trips.begin(), trips.end());
  out.boundary.push_back(std::move(aug));

  for (int k = 1; k <= top; ++k) {
    const auto& faces = x.simplices(k - 1);
    const auto& cells = x.simplices(k);
    trips.clear();
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const Simplex& s = cells[j];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != drop) face.push_back(s[i]);
        }
        trips.emplace_back(static_cast<int>(position(faces, face)), static_cast<int>(j), drop % 2 == 0 ? 1 : -1);
      }
    }
    SparseIntMatrix d(static_cast<Eigen::Index>(faces.size()), static_cast<Eigen::Index>(cells.size()));
    d.setFromTriplets(trips.begin(), trips.end());
    out.boundary.push_back(std::move(d));
  }
  return out;
}

SmithSummary smith_summary(const SparseIntMatrix& m) {
  const auto ncols = static_cast<std::size_t>(m.cols());
  const auto nrows = static_cast<std::size_t>(m.rows());
  std::vector<std::map<int, std::int64_t>> col(ncols);
  std::vector<std::set<int>> row_cols(nrows);
  for (int c = 0; c < m.outerSize(); ++c) {
    for (SparseIntMatrix::InnerIterator it(m, c); it; ++it) {
      if (it.value() == 0) continue;
      col[static_cast<std::size_t>(c)][static_cast<int>(it.row())] = it.value();
      row_cols[static_cast<std::size_t>(it.row())].insert(c);
    }
  }

  SmithSummary out;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (col[c].empty()) continue;
      // Unit entry in the sparsest row.
      int pivot_row = -1;
      std::size_t best = 0;
      for (const auto& [r, val] : col[c]) {
        if (val != 1 && val != -1) continue;
        std::size_t fill = row_cols[static_cast<std::size_t>(r)].size();
        if (pivot_row < 0 || fill < best) {
          pivot_row = r;
          best = fill;
        }
      }
      if (pivot_row < 0) continue;
      const std::int64_t pv = col[c][pivot_row];
      const std::vector<int> others(row_cols[static_cast<std::size_t>(pivot_row)].begin(),
                                    row_cols[static_cast<std::size_t>(pivot_row)].end());
      for (int c2 : others) {
        if (static_cast<std::size_t>(c2) == c) continue;
        auto& target = col[static_cast<std::size_t>(c2)];
        const std::int64_t f = -target[pivot_row] * pv;
        for (const auto& [r, val] : col[c]) {
          auto it = target.find(r);
          std::int64_t nv = checked_fma(it == target.end() ? 0 : it->second, f, val);
          if (nv == 0) {
            if (it != target.end()) target.erase(it);
            row_cols[static_cast<std::size_t>(r)].erase(c2);
          } else {
            target[r] = nv;
            row_cols[static_cast<std::size_t>(r)].insert(c2);
          }
        }
      }
      for (const auto& entry : col[c]) row_cols[static_cast<std::size_t>(entry.first)].erase(static_cast<int>(c));
      col[c].clear();
      ++out.rank;
      progress = true;
    }
  }

  // Dense remainder.
  std::vector<int> rows_left;
  std::vector<std::size_t> cols_left;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (!row_cols[r].empty()) rows_left.push_back(static_cast<int>(r));
  }
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!col[c].empty()) cols_left.push_back(c);
  }
  if (cols_left.empty()) return out;
  std::map<int, Eigen::Index> row_pos;
  for (std::size_t i = 0; i < rows_left.size(); ++i) row_pos[rows_left[i]] = static_cast<Eigen::Index>(i);
  BigMatrix rest = BigMatrix::Constant(static_cast<Eigen::Index>(rows_left.size()),
                                       static_cast<Eigen::Index>(cols_left.size()), BigInt(0));
  for (std::size_t j = 0; j < cols_left.size(); ++j) {
    for (const auto& [r, val] : col[cols_left[j]]) rest(row_pos[r], static_cast<Eigen::Index>(j)) = BigInt(val);
  }
  auto snf = smith_normal_form(rest);
  out.rank += snf.rank;
  for (const auto& d : snf.divisors) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

std::vector<DegreeHomology> reduced_homology(const SimplicialComplex& x) {
  if (x.empty()) throw Error(ErrorKind::EmptyComplex, "reduced homology of the empty complex");
  ChainComplex cc = boundary_matrices(x);
  const int top = x.dimension();
  std::vector<SmithSummary> summaries;
  for (int k = 0; k <= top; ++k) summaries.push_back(smith_summary(cc.boundary[static_cast<std::size_t>(k)]));
  std::vector<DegreeHomology> out;
  for (int k = 0; k <= top; ++k) {
    DegreeHomology h;
    h.k = k;
    const int rank_in = k < top ? summaries[static_cast<std::size_t>(k) + 1].rank : 0;
    h.betti = static_cast<std::int64_t>(cc.ranks[static_cast<std::size_t>(k)]) - summaries[static_cast<std::size_t>(k)].rank - rank_in;
    if (k < top) h.torsion = summaries[static_cast<std::size_t>(k) + 1].torsion;
    out.push_back(std::move(h));
  }
  return out;
}

std::string_view map_class_name(MapClass c) {
  switch (c) {
    case MapClass::Zero: return "zero";
    case MapClass::Injective: return "injective";
    case MapClass::NonInjectiveNonzero: return "non-injective-nonzero";
  }
  return "?";
}

std::size_t component_count(const SimplicialComplex& x) {
  const auto& verts = x.simplices(0);
  UnionFind uf(verts.size());
  for (const auto& e : x.simplices(1)) {
    uf.unite(static_cast<int>(position(verts, {e[0]})), static_cast<int>(position(verts, {e[1]})));
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) n += uf.find(static_cast<int>(i)) == static_cast<int>(i);
  return n;
}

namespace {

InducedMap classify(std::int64_t source_rank, std::int64_t image_rank, bool trivial_source, bool kernel_is_all,
                    bool kernel_is_boundaries) {
  InducedMap out;
  out.source_rank = source_rank;
  out.image_rank = image_rank;
  if (trivial_source || kernel_is_all) {
    out.kind = MapClass::Zero;
  } else if (kernel_is_boundaries) {
    out.kind = MapClass::Injective;
  } else {
    out.kind = MapClass::NonInjectiveNonzero;
  }
  return out;
}

InducedMap induced_map_degree0(const SimplicialComplex& sub, const SimplicialComplex& sup) {
  const auto& sup_verts = sup.simplices(0);
  UnionFind uf(sup_verts.size());
  for (const auto& e : sup.simplices(1)) {
    uf.unite(static_cast<int>(position(sup_verts, {e[0]})), static_cast<int>(position(sup_verts, {e[1]})));
  }
  const std::size_t sub_components = component_count(sub);
  std::set<int> hit;
  for (const auto& v : sub.simplices(0)) hit.insert(uf.find(static_cast<int>(position(sup_verts, v))));
  const auto source = static_cast<std::int64_t>(sub_components) - 1;
  const auto image = static_cast<std::int64_t>(hit.size()) - 1;
  return classify(source, image, source == 0, image == 0, image == source);
}

}  // namespace

InducedMap induced_map_class(const SimplicialComplex& sub, const SimplicialComplex& sup, int k) {
  if (sub.empty() || sup.empty()) throw Error(ErrorKind::EmptyComplex, "induced map on an empty complex");
  if (!sub.is_subcomplex_of(sup)) throw Error(ErrorKind::NotSubcomplex, "first complex is not a subcomplex of the second");
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  if (k == 0) return induced_map_degree0(sub, sup);

  const auto& sub_cells = sub.simplices(k);
  const auto& sup_cells = sup.simplices(k);
  if (sub_cells.empty()) return classify(0, 0, true, true, true);

  ChainComplex csub = boundary_matrices(sub);
  ChainComplex csup = boundary_matrices(sup);
  const auto g_dim = static_cast<Eigen::Index>(sub_cells.size());

  // Cycles of sub: with U d V = D, the last columns of V span ker d.
  SmithForm<BigInt> fsub = smith_normal_form(dense(csub.boundary[static_cast<std::size_t>(k)]), true);
  const Eigen::Index g = g_dim - fsub.rank;
  if (g == 0) return classify(0, 0, true, true, true);
  const BigMatrix z = fsub.V->rightCols(g);

  // Boundaries of sub in cycle coordinates: the last g rows of V^{-1} b.
  BigMatrix bsub(g, 0);
  if (k + 1 <= sub.dimension()) {
    BigMatrix coords = multiply(*fsub.V_inverse, dense(csub.boundary[static_cast<std::size_t>(k) + 1]));
    bsub = coords.bottomRows(g);
  }
  const auto [bsub_rank, bsub_det] = lattice_invariants(bsub);
  const std::int64_t source_rank = g - bsub_rank;

  // Embed cycles into sup's k-cells.
  const auto n = static_cast<Eigen::Index>(sup_cells.size());
  BigMatrix zsup = BigMatrix::Constant(n, g, BigInt(0));
  for (Eigen::Index i = 0; i < g_dim; ++i) {
    const auto row = static_cast<Eigen::Index>(position(sup_cells, sub_cells[static_cast<std::size_t>(i)]));
    zsup.row(row) = z.row(i);
  }

  // Classes in H_k(sup) sit injectively in coker(boundary) = (+) Z/d_i (+) Z^free.
  BigMatrix y = zsup;
  std::vector<BigInt> divisors;
  if (k + 1 <= sup.dimension()) {
    SmithForm<BigInt> f = smith_normal_form(dense(csup.boundary[static_cast<std::size_t>(k) + 1]), true);
    y = multiply(*f.U, zsup);
    divisors = f.divisors;
  }
  const auto r = static_cast<Eigen::Index>(divisors.size());
  // Kernel of x -> (y x mod d, y_free x): solve [y_t D; y_f 0] (x, s) = 0.
  BigMatrix system = BigMatrix::Constant(n, g + r, BigInt(0));
  system.leftCols(g) = y;
  for (Eigen::Index i = 0; i < r; ++i) system(i, g + i) = divisors[static_cast<std::size_t>(i)];
  BigMatrix ker = integer_kernel(system);
  BigMatrix kphi = ker.topRows(g);
  const auto [kphi_rank, kphi_det] = lattice_invariants(kphi);

  const bool kernel_is_all = kphi_rank == g && kphi_det == 1;
  const bool kernel_is_boundaries = kphi_rank == bsub_rank && kphi_det == bsub_det;
  const std::int64_t image_rank = g - kphi_rank;
  const bool trivial_source = source_rank == 0 && bsub_det == 1;
  return classify(source_rank, image_rank, trivial_source, kernel_is_all, kernel_is_boundaries);
}

}  // namespace abels
