#include "abels/lattice.hpp"

#include "abels/errors.hpp"
#include "abels/subspaces.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace abels {

namespace {

using i128 = __int128;

// Arithmetic modulo P = p^K with K as large as fits comfortably in 62 bits.
struct Modulus {
  std::int64_t p = 0;
  int K = 0;
  std::int64_t P = 1;
  std::vector<std::int64_t> powers;  // p^0 .. p^K

  explicit Modulus(std::int64_t prime) : p(prime) {
    const i128 limit = static_cast<i128>(1) << 62;
    powers.push_back(1);
    while (static_cast<i128>(P) * p <= limit) {
      P *= p;
      ++K;
      powers.push_back(P);
    }
  }

  std::int64_t reduce(i128 x) const {
    auto r = static_cast<std::int64_t>(x % P);
    return r < 0 ? r + P : r;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(static_cast<i128>(a) * b); }

  int valuation(std::int64_t x) const {
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  }

  std::int64_t inverse(std::int64_t u) const {
    i128 r0 = P, r1 = reduce(u), s0 = 0, s1 = 1;
    while (r1 != 0) {
      i128 q = r0 / r1;
      i128 tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = s0 - q * s1;
      s0 = s1;
      s1 = tmp;
    }
    return reduce(s0);
  }

  // x * p^shift as an integer, reduced mod P. Requires exponent + shift >= 0.
  std::int64_t lift(const PScalar& x, int shift) const {
    if (x.is_zero()) return 0;
    int e = x.exponent() + shift;
    if (e >= K) return 0;
    return mul(reduce(x.unit()), powers[static_cast<std::size_t>(e)]);
  }
};

const Modulus& modulus_for(std::int64_t p) {
  thread_local std::vector<Modulus> cache;
  for (const auto& m : cache) {
    if (m.p == p) return m;
  }
  cache.emplace_back(p);
  return cache.back();
}

int rational_rank(const PMatrix& m) {
  MatrixX<Rational> a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).to_rational();
  }
  int rank = 0;
  for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Eigen::Index r = rank;
    while (r < a.rows() && a(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    a.row(r).swap(a.row(rank));
    for (Eigen::Index k = rank + 1; k < a.rows(); ++k) {
      if (a(k, c) == 0) continue;
      Rational f = a(k, c) / a(rank, c);
      for (Eigen::Index j = c; j < a.cols(); ++j) a(k, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

void require_compatible(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::LengthMismatch, "lattices of different dimension");
  if (a.prime() != b.prime() && a.dim() > 0) {
    throw Error(ErrorKind::PrimeMismatch, "lattices over different primes");
  }
}

// Preimage in A of the subspace of A/pA spanned by the echelon rows.
Lattice lower_neighbor(const Lattice& a, const EchelonBasis& rows) {
  const int d = a.dim();
  const std::int64_t p = a.prime();
  const PMatrix& h = a.basis();
  PMatrix gens(d, d);
  std::vector<bool> pivot(static_cast<std::size_t>(d), false);
  int col = 0;
  for (const auto& row : rows) {
    PVector w(d);
    for (int j = 0; j < d; ++j) w(j) = PScalar(row[static_cast<std::size_t>(j)], p);
    gens.col(col++) = h * w;
    auto lead = std::find_if(row.begin(), row.end(), [](std::int64_t x) { return x != 0; });
    pivot[static_cast<std::size_t>(lead - row.begin())] = true;
  }
  const PScalar pp(p, p);
  for (int j = 0; j < d; ++j) {
    if (!pivot[static_cast<std::size_t>(j)]) gens.col(col++) = h.col(j) * pp;
  }
  return Lattice::span(gens, p);
}

void sort_unique(std::vector<Lattice>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string_view model_name(Model model) { return model == Model::Extended ? "extended" : "quotient"; }

Model parse_model(std::string_view text) {
  if (text == "extended") return Model::Extended;
  if (text == "quotient") return Model::Quotient;
  throw Error(ErrorKind::InvalidArgument, "model must be 'extended' or 'quotient'");
}

std::string_view containment_name(Containment c) {
  switch (c) {
    case Containment::Equal: return "equal";
    case Containment::Subset: return "subset";
    case Containment::Superset: return "superset";
    case Containment::Incomparable: return "incomparable";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Canonical form

Lattice Lattice::span(const PMatrix& generators, std::int64_t p) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "prime must be at least 2");
  const int d = static_cast<int>(generators.rows());
  if (d == 0) return Lattice(p, PMatrix(0, 0), {});
  if (generators.cols() < d) {
    throw Error(ErrorKind::SingularBasis, "fewer generators than the dimension");
  }
  const Modulus& mod = modulus_for(p);

  // Clear denominators: p^t * generators is integral.
  int t = 0;
  for (Eigen::Index i = 0; i < generators.size(); ++i) {
    const PScalar& x = generators.data()[i];
    if (x.has_prime() && x.prime() != p) throw Error(ErrorKind::PrimeMismatch, "generator entry over another prime");
    if (!x.is_zero()) t = std::max(t, -x.exponent());
  }

  using Column = std::vector<std::int64_t>;
  std::vector<Column> active;
  for (Eigen::Index j = 0; j < generators.cols(); ++j) {
    Column c(static_cast<std::size_t>(d));
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      c[static_cast<std::size_t>(i)] = mod.lift(generators(i, j), t);
      nonzero = nonzero || c[static_cast<std::size_t>(i)] != 0;
    }
    if (nonzero) active.push_back(std::move(c));
  }

  // Column Hermite form of (p^t L + P Z^d) over Z/P, last row first.
  std::vector<Column> h(static_cast<std::size_t>(d));
  std::vector<int> e(static_cast<std::size_t>(d), 0);
  int total = 0;
  bool ok = true;
  for (int i = d - 1; i >= 0 && ok; --i) {
    const auto row = static_cast<std::size_t>(i);
    int best = -1;
    int best_v = mod.K;
    for (std::size_t c = 0; c < active.size(); ++c) {
      if (active[c][row] == 0) continue;
      int v = mod.valuation(active[c][row]);
      if (v < best_v) {
        best_v = v;
        best = static_cast<int>(c);
      }
    }
    if (best < 0) {
      ok = false;
      break;
    }
    Column pivot = std::move(active[static_cast<std::size_t>(best)]);
    active.erase(active.begin() + best);
    const std::int64_t pv = mod.powers[static_cast<std::size_t>(best_v)];
    const std::int64_t unit_inv = mod.inverse(pivot[row] / pv);
    for (auto& x : pivot) x = mod.mul(x, unit_inv);
    std::vector<Column> next;
    next.reserve(active.size());
    for (auto& c : active) {
      const std::int64_t q = c[row] / pv;
      bool nonzero = false;
      for (int k = 0; k <= i; ++k) {
        auto& x = c[static_cast<std::size_t>(k)];
        x = mod.reduce(static_cast<i128>(x) - static_cast<i128>(q) * pivot[static_cast<std::size_t>(k)]);
        nonzero = nonzero || x != 0;
      }
      if (nonzero) next.push_back(std::move(c));
    }
    active = std::move(next);
    h[row] = std::move(pivot);
    e[row] = best_v;
    total += best_v;
  }
  if (!ok || total >= mod.K) {
    // Either singular, or the elementary divisors are too large for the modulus.
    if (rational_rank(generators) < d) throw Error(ErrorKind::SingularBasis, "generators do not span Q_p^dim");
    throw Error(ErrorKind::PrecisionExceeded, "lattice index exceeds the modular working precision");
  }

  // Reduce entries right of the diagonal into [0, p^{e_i}).
  for (int j = 0; j < d; ++j) {
    auto& cj = h[static_cast<std::size_t>(j)];
    for (int i = j - 1; i >= 0; --i) {
      const auto& ci = h[static_cast<std::size_t>(i)];
      const std::int64_t m = mod.powers[static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
      const std::int64_t q = cj[static_cast<std::size_t>(i)] / m;
      if (q == 0) continue;
      for (int k = 0; k <= i; ++k) {
        auto& x = cj[static_cast<std::size_t>(k)];
        x = mod.reduce(static_cast<i128>(x) - static_cast<i128>(q) * ci[static_cast<std::size_t>(k)]);
      }
    }
  }

  PMatrix basis(d, d);
  std::vector<int> exps(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      basis(i, j) = PScalar::from_parts(i <= j ? h[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] : 0, -t, p);
    }
    exps[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j)] - t;
  }
  return Lattice(p, std::move(basis), std::move(exps));
}

Lattice Lattice::standard(int dim, std::int64_t p) { return diagonal(std::vector<int>(static_cast<std::size_t>(dim), 0), p); }

Lattice Lattice::diagonal(const std::vector<int>& exponents, std::int64_t p) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "prime must be at least 2");
  const auto d = static_cast<Eigen::Index>(exponents.size());
  PMatrix basis = PMatrix::Constant(d, d, PScalar(0, p));
  for (Eigen::Index i = 0; i < d; ++i) basis(i, i) = PScalar::power(p, exponents[static_cast<std::size_t>(i)]);
  return Lattice(p, std::move(basis), exponents);
}

int Lattice::det_valuation() const {
  int s = 0;
  for (int e : exps_) s += e;
  return s;
}

Lattice Lattice::scaled(int k) const {
  PMatrix b = basis_;
  for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = b.data()[i].shifted(k);
  std::vector<int> e = exps_;
  for (int& x : e) x += k;
  return Lattice(p_, std::move(b), std::move(e));
}

bool Lattice::contains(const PVector& v) const {
  if (v.size() != dim()) throw Error(ErrorKind::LengthMismatch, "vector length differs from lattice dimension");
  const int d = dim();
  std::vector<PScalar> x(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    PScalar r = v(i);
    for (int k = i + 1; k < d; ++k) r -= basis_(i, k) * x[static_cast<std::size_t>(k)];
    PScalar xi = r.shifted(-exps_[static_cast<std::size_t>(i)]);
    if (!xi.is_integral()) return false;
    x[static_cast<std::size_t>(i)] = xi;
  }
  return true;
}

bool Lattice::contains(const Lattice& other) const {
  require_compatible(*this, other);
  for (int j = 0; j < other.dim(); ++j) {
    if (!contains(PVector(other.basis_.col(j)))) return false;
  }
  return true;
}

std::size_t Lattice::hash() const {
  std::size_t h = std::hash<std::int64_t>{}(p_);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (int e : exps_) mix(std::hash<int>{}(e));
  for (Eigen::Index i = 0; i < basis_.size(); ++i) {
    mix(std::hash<std::int64_t>{}(basis_.data()[i].unit()));
    mix(std::hash<int>{}(basis_.data()[i].exponent()));
  }
  return h;
}

bool operator==(const Lattice& a, const Lattice& b) {
  if (a.p_ != b.p_ || a.exps_ != b.exps_) return false;
  for (Eigen::Index i = 0; i < a.basis_.size(); ++i) {
    if (!(a.basis_.data()[i] == b.basis_.data()[i])) return false;
  }
  return true;
}

bool operator<(const Lattice& a, const Lattice& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.exps_ != b.exps_) return a.exps_ < b.exps_;
  // Column-major walk over the strictly upper part, last column first so
  // that neighbors of a common vertex group naturally.
  for (Eigen::Index j = a.basis_.cols() - 1; j >= 0; --j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      const PScalar& x = a.basis_(i, j);
      const PScalar& y = b.basis_(i, j);
      if (x == y) continue;
      return PScalar::representation_less(x, y);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

Lattice class_representative(const Lattice& l) {
  if (l.dim() == 0) return l;
  return l.scaled(-static_cast<int>(floor_div(l.det_valuation(), l.dim())));
}

LatticeClass::LatticeClass(const Lattice& any) : rep_(class_representative(any)) {}

HeightFunction::HeightFunction(VectorXl w) : w_(std::move(w)) {
  if (w_.size() == 0 || (w_.array() == 0).all()) throw Error(ErrorKind::ZeroVector, "height weight is zero");
  for (Eigen::Index i = 0; i + 1 < w_.size(); ++i) {
    if (w_(i) < w_(i + 1)) throw Error(ErrorKind::NotMonotone, "height weight must be non-increasing");
  }
}

Containment lattice_order(const Lattice& a, const Lattice& b) {
  const bool ab = b.contains(a);
  const bool ba = a.contains(b);
  if (ab && ba) return Containment::Equal;
  if (ab) return Containment::Subset;
  if (ba) return Containment::Superset;
  return Containment::Incomparable;
}

Lattice act(const PMatrix& g, const Lattice& a) {
  if (g.rows() != a.dim() || g.cols() != a.dim()) {
    throw Error(ErrorKind::LengthMismatch, "matrix size differs from lattice dimension");
  }
  try {
    return Lattice::span(g * a.basis(), a.prime());
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::SingularBasis) throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    throw;
  }
}

int index(const Lattice& a, const Lattice& b) {
  require_compatible(a, b);
  // With L = p^N * standard inside both, length(X / L) = N*dim - det_valuation(X);
  // N cancels.
  return b.det_valuation() - a.det_valuation();
}

Rational epsilon(const Lattice& a) {
  if (a.dim() == 0) return Rational(0);
  return Rational(index(a, Lattice::standard(a.dim(), a.prime()))) / a.dim();
}

std::vector<Lattice> neighbors(const Lattice& a, Model model) {
  const int d = a.dim();
  std::vector<Lattice> out;
  for (int k = 1; k < d; ++k) {
    for_each_subspace(d, k, a.prime(), [&](const EchelonBasis& rows) {
      Lattice b = lower_neighbor(a, rows);
      if (model == Model::Extended) {
        out.push_back(b.scaled(-1));
        out.push_back(std::move(b));
      } else {
        out.push_back(class_representative(b));
      }
    });
  }
  if (model == Model::Extended) {
    out.push_back(a.scaled(1));
    out.push_back(a.scaled(-1));
  }
  sort_unique(out);
  return out;
}

std::int64_t neighbor_count(int dim, std::int64_t p, Model model) {
  std::int64_t s = 0;
  for (int k = 1; k < dim; ++k) s += gaussian_binomial(dim, k, p);
  return model == Model::Extended ? 2 * s + 2 : s;
}

bool chain_is_simplex(const std::vector<Lattice>& chain) {
  if (chain.empty()) return false;
  std::vector<Lattice> v = chain;
  sort_unique(v);
  std::stable_sort(v.begin(), v.end(), [](const Lattice& x, const Lattice& y) {
    return x.det_valuation() > y.det_valuation();
  });
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (!v[i + 1].contains(v[i])) return false;
  }
  return v.front().contains(v.back().scaled(1));
}

bool classes_form_simplex(const std::vector<Lattice>& representatives) {
  std::vector<Lattice> reps;
  reps.reserve(representatives.size());
  for (const auto& r : representatives) reps.push_back(class_representative(r));
  return chain_is_simplex(reps);
}

bool adjacent(const Lattice& a, const Lattice& b, Model model) {
  if (model == Model::Extended) return !(a == b) && chain_is_simplex({a, b});
  Lattice ra = class_representative(a);
  Lattice rb = class_representative(b);
  return !(ra == rb) && chain_is_simplex({ra, rb});
}

std::vector<int> retraction(const Lattice& a) { return a.exponents(); }

std::int64_t height(const Lattice& a, const HeightFunction& h) {
  if (h.weights().size() != a.dim()) throw Error(ErrorKind::LengthMismatch, "height weight length differs from dimension");
  std::int64_t s = 0;
  for (int i = 0; i < a.dim(); ++i) s += h.weights()(i) * a.exponents()[static_cast<std::size_t>(i)];
  return s;
}

std::int64_t height(const LatticeClass& a, const HeightFunction& h) {
  if (!h.descends_to_classes()) {
    throw Error(ErrorKind::ClassModelMismatch, "height with nonzero weight sum is undefined on homothety classes");
  }
  return height(a.representative(), h);
}

std::vector<Lattice> lattices_between(const Lattice& lower, const Lattice& upper) {
  require_compatible(lower, upper);
  if (!upper.contains(lower)) return {};
  std::unordered_set<Lattice, LatticeHash> seen{upper};
  std::deque<Lattice> queue{upper};
  while (!queue.empty()) {
    Lattice cur = std::move(queue.front());
    queue.pop_front();
    if (cur == lower) continue;
    for (Lattice& n : neighbors(cur, Model::Extended)) {
      if (n.det_valuation() <= cur.det_valuation()) continue;
      if (!n.contains(lower) || seen.count(n)) continue;
      seen.insert(n);
      queue.push_back(std::move(n));
    }
  }
  std::vector<Lattice> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Involutions

PMatrix sign_matrix(const SignVector& s, std::int64_t p) {
  std::vector<PScalar> diag;
  for (int i = 0; i < s.size(); ++i) diag.emplace_back(s[i], p);
  return diagonal_matrix(diag);
}

Lattice coordinate_sublattice(const Lattice& a, const std::vector<int>& coords) {
  const int d = a.dim();
  std::vector<bool> chosen(static_cast<std::size_t>(d), false);
  for (int i : coords) {
    if (i < 0 || i >= d) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
    chosen[static_cast<std::size_t>(i)] = true;
  }
  const auto k = static_cast<Eigen::Index>(coords.size());
  if (k == 0) return Lattice::span(PMatrix(0, 0), a.prime());
  // Move the chosen coordinates to the front; the leading k columns of the
  // Hermite form then span the intersection.
  PMatrix permuted(d, d);
  int r = 0;
  for (int i : coords) permuted.row(r++) = a.basis().row(i);
  for (int i = 0; i < d; ++i) {
    if (!chosen[static_cast<std::size_t>(i)]) permuted.row(r++) = a.basis().row(i);
  }
  Lattice b = Lattice::span(permuted, a.prime());
  return Lattice::span(b.basis().topLeftCorner(k, k), a.prime());
}

InvolutionAnalysis involution_analysis(const SignVector& s, const Lattice& a) {
  if (s.size() != a.dim()) throw Error(ErrorKind::LengthMismatch, "sign vector length differs from dimension");
  std::vector<int> plus_idx, minus_idx;
  for (int i = 0; i < s.size(); ++i) (s[i] > 0 ? plus_idx : minus_idx).push_back(i);
  InvolutionAnalysis out;
  out.fixed = act(sign_matrix(s, a.prime()), a) == a;
  out.plus = coordinate_sublattice(a, plus_idx);
  out.minus = coordinate_sublattice(a, minus_idx);
  out.splits = out.plus.det_valuation() + out.minus.det_valuation() == a.det_valuation();
  return out;
}

Diagonalization diagonalize_involution(const PMatrix& g0, std::int64_t p) {
  if (g0.rows() != g0.cols()) throw Error(ErrorKind::NotTriangular, "matrix is not square");
  if (p == 2) throw Error(ErrorKind::EvenPrime, "p = 2: diagonalization needs 2 to be a unit in Z_p");
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "prime must be at least 2");
  const PMatrix g = with_prime(g0, p);
  if (!is_upper_triangular(g)) throw Error(ErrorKind::NotTriangular, "matrix is not upper triangular");
  const int d = static_cast<int>(g.rows());
  const PMatrix id = identity_matrix(d, p);
  if (!(PMatrix(g * g) == id)) throw Error(ErrorKind::NotInvolution, "g * g is not the identity");

  std::uint32_t minus = 0;
  for (int j = 0; j < d; ++j) {
    if (g(j, j) == PScalar(-1, p)) minus |= 1U << j;
  }
  SignVector sv(d, minus);

  PMatrix u = PMatrix::Constant(d, d, PScalar(0, p));
  for (int j = 0; j < d; ++j) {
    const PScalar dj(sv[j], p);
    // Column j of (id + d_j g) / 2.
    PVector col = id.col(j) + dj * g.col(j);
    bool halved = true;
    for (int i = 0; i < d && halved; ++i) halved = col(i).divide_exact(2, col(i));
    if (!halved) {
      // The recipe leaves Z[1/p]; solve for the eigenvector that vanishes at
      // the other coordinates carrying the same sign instead.
      col = PVector::Constant(d, PScalar(0, p));
      col(j) = PScalar(1, p);
      for (int i = j - 1; i >= 0; --i) {
        PScalar s(0, p);
        for (int k = i + 1; k <= j; ++k) s += g(i, k) * col(k);
        if (sv[i] == sv[j]) continue;
        // (g_ii - d_j) = -2 d_j
        if (!(s * dj).divide_exact(2, col(i))) {
          throw Error(ErrorKind::NotDiagonalizable, "involution is not diagonalizable over Z[1/p]");
        }
      }
    }
    u.col(j) = col;
  }
  PMatrix check = triangular_inverse(u) * g * u;
  if (!(check == sign_matrix(sv, p))) {
    throw Error(ErrorKind::NotDiagonalizable, "conjugation did not produce a diagonal matrix");
  }
  return {u, sv};
}

PMatrix borel_reduce(const Lattice& a) { return a.basis(); }

}  // namespace abels
