#include "abels/pscalar.hpp"

#include "abels/errors.hpp"

#include <ostream>

namespace abels {

namespace {

using i128 = __int128;

std::int64_t checked(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::PrecisionExceeded, "Z[1/p] value exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t checked_pow(std::int64_t p, int k) {
  i128 r = 1;
  for (int i = 0; i < k; ++i) {
    r *= p;
    if (r > std::numeric_limits<std::int64_t>::max()) {
      throw Error(ErrorKind::PrecisionExceeded, "prime power exceeds 64-bit range");
    }
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) { return checked(static_cast<i128>(a) * b); }

}  // namespace

PScalar::PScalar(std::int64_t value, std::int64_t p) : unit_(value), p_(p) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "prime must be at least 2");
  normalize();
}

PScalar PScalar::from_parts(std::int64_t unit, int exponent, std::int64_t p) {
  PScalar x(unit, p);
  if (!x.is_zero()) x.exp_ += exponent;
  return x;
}

void PScalar::normalize() {
  if (unit_ == 0) {
    exp_ = 0;
    return;
  }
  if (p_ == 0) return;
  while (unit_ % p_ == 0) {
    unit_ /= p_;
    ++exp_;
  }
}

std::int64_t PScalar::common_prime(const PScalar& a, const PScalar& b) {
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
  throw Error(ErrorKind::PrimeMismatch, "arithmetic between different primes");
}

PScalar PScalar::parse(std::string_view text, std::int64_t p) {
  return from_rational(parse_rational(text), p);
}

PScalar PScalar::from_rational(const Rational& value, std::int64_t p) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  int k = 0;
  while (den % p == 0) {
    den /= p;
    ++k;
  }
  if (den != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "denominator of " + format_rational(value) + " is not a power of " + std::to_string(p));
  }
  if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::PrecisionExceeded, "numerator exceeds 64-bit range");
  }
  return from_parts(static_cast<std::int64_t>(num), -k, p);
}

PScalar PScalar::shifted(int k) const {
  PScalar x = *this;
  if (!x.is_zero()) x.exp_ += k;
  return x;
}

PScalar PScalar::mod_power(int e) const {
  if (p_ == 0) {
    if (is_zero()) return *this;
    throw Error(ErrorKind::InvalidArgument, "mod_power needs a prime");
  }
  if (is_zero() || exp_ >= e) return PScalar(0, p_);
  // this = unit * p^exp with exp < e. Write this = N / p^s and p^e = M / p^s.
  int s = std::max({0, -exp_, -e});
  std::int64_t n = checked_mul(unit_, checked_pow(p_, exp_ + s));
  std::int64_t m = checked_pow(p_, e + s);
  std::int64_t r = n % m;
  if (r < 0) r += m;
  return from_parts(r, -s, p_);
}

bool PScalar::divide_exact(std::int64_t divisor, PScalar& out) const {
  if (divisor == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (is_zero()) {
    out = *this;
    return true;
  }
  // Split divisor into p-power and cofactor; only the p-power is invertible.
  std::int64_t cof = divisor;
  int k = 0;
  while (p_ != 0 && cof % p_ == 0) {
    cof /= p_;
    ++k;
  }
  if (unit_ % cof != 0) return false;
  out = from_parts(unit_ / cof, exp_ - k, p_);
  return true;
}

Rational PScalar::to_rational() const {
  if (is_zero()) return Rational(0);
  if (p_ == 0) return Rational(unit_);
  BigInt pk = boost::multiprecision::pow(BigInt(p_), static_cast<unsigned>(exp_ >= 0 ? exp_ : -exp_));
  return exp_ >= 0 ? Rational(BigInt(unit_) * pk) : Rational(BigInt(unit_), pk);
}

std::string PScalar::to_string() const { return format_rational(to_rational()); }

std::int64_t PScalar::to_int64() const {
  if (!is_integer()) throw Error(ErrorKind::InvalidArgument, to_string() + " is not an integer");
  if (is_zero()) return 0;
  if (p_ == 0) return unit_;
  return checked_mul(unit_, checked_pow(p_, exp_));
}

PScalar PScalar::operator-() const {
  PScalar x = *this;
  x.unit_ = -x.unit_;
  return x;
}

PScalar operator+(const PScalar& a, const PScalar& b) {
  std::int64_t p = PScalar::common_prime(a, b);
  if (a.is_zero()) {
    PScalar r = b;
    r.p_ = p;
    r.normalize();
    return r;
  }
  if (b.is_zero()) {
    PScalar r = a;
    r.p_ = p;
    r.normalize();
    return r;
  }
  PScalar x = a, y = b;
  x.p_ = y.p_ = p;
  x.normalize();
  y.normalize();
  if (p == 0) {
    PScalar r;
    r.unit_ = checked(static_cast<i128>(x.unit_) + y.unit_);
    return r;
  }
  int m = std::min(x.exp_, y.exp_);
  i128 sum = static_cast<i128>(checked_mul(x.unit_, checked_pow(p, x.exp_ - m))) +
             checked_mul(y.unit_, checked_pow(p, y.exp_ - m));
  PScalar r;
  r.p_ = p;
  r.unit_ = checked(sum);
  r.exp_ = m;
  r.normalize();
  return r;
}

PScalar operator*(const PScalar& a, const PScalar& b) {
  PScalar r;
  r.p_ = PScalar::common_prime(a, b);
  if (a.is_zero() || b.is_zero()) return r;
  r.unit_ = checked_mul(a.unit_, b.unit_);
  r.exp_ = a.exp_ + b.exp_;
  r.normalize();
  return r;
}

bool operator==(const PScalar& a, const PScalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  std::int64_t p = PScalar::common_prime(a, b);
  PScalar x = a, y = b;
  x.p_ = y.p_ = p;
  x.normalize();
  y.normalize();
  return x.unit_ == y.unit_ && x.exp_ == y.exp_;
}

std::strong_ordering operator<=>(const PScalar& a, const PScalar& b) {
  Rational x = a.to_rational();
  Rational y = b.to_rational();
  if (x < y) return std::strong_ordering::less;
  if (y < x) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& out, const PScalar& x) { return out << x.to_string(); }

// ---------------------------------------------------------------------------
// Matrix helpers

PMatrix with_prime(const PMatrix& m, std::int64_t p) {
  PMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) + PScalar(0, p);
  }
  return out;
}

PMatrix identity_matrix(int dim, std::int64_t p) {
  PMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) out(i, j) = PScalar(i == j ? 1 : 0, p);
  }
  return out;
}

PMatrix diagonal_matrix(const std::vector<PScalar>& diagonal) {
  const auto n = static_cast<Eigen::Index>(diagonal.size());
  std::int64_t p = 0;
  for (const auto& d : diagonal) {
    if (d.has_prime()) p = d.prime();
  }
  PMatrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out(i, j) = i == j ? diagonal[static_cast<std::size_t>(i)] : (p ? PScalar(0, p) : PScalar());
    }
  }
  return out;
}

Rational determinant(const PMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  MatrixX<Rational> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j).to_rational();
  }
  Rational det = 1;
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      a.row(pivot).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (Eigen::Index k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

int det_valuation(const PMatrix& m) {
  Rational det = determinant(m);
  if (det == 0) return kInfiniteValuation;
  std::int64_t p = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m.data()[i].has_prime()) p = m.data()[i].prime();
  }
  if (p == 0) throw Error(ErrorKind::InvalidArgument, "matrix carries no prime");
  BigInt num = boost::multiprecision::numerator(det);
  BigInt den = boost::multiprecision::denominator(det);
  int v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

bool is_upper_triangular(const PMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < std::min(i, m.cols()); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

PMatrix triangular_inverse(const PMatrix& m) {
  if (m.rows() != m.cols() || !is_upper_triangular(m)) {
    throw Error(ErrorKind::NotTriangular, "triangular_inverse needs a square upper triangular matrix");
  }
  const Eigen::Index n = m.rows();
  std::int64_t p = 0;
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m.data()[i].has_prime()) p = m.data()[i].prime();
  }
  PMatrix inv = PMatrix::Constant(n, n, p ? PScalar(0, p) : PScalar());
  // Diagonal entries must be invertible in Z[1/p]: +-p^k.
  std::vector<PScalar> dinv(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const PScalar& d = m(i, i);
    if (d.is_zero() || (d.unit() != 1 && d.unit() != -1)) {
      throw Error(ErrorKind::SingularMatrix, "diagonal entry " + d.to_string() + " is not a unit of Z[1/p]");
    }
    dinv[static_cast<std::size_t>(i)] = PScalar::from_parts(d.unit(), -d.exponent(), d.prime() ? d.prime() : p);
  }
  // Solve m * X = I column by column, back substitution.
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index i = col; i >= 0; --i) {
      PScalar acc = (i == col) ? PScalar(1, p) : PScalar(0, p);
      for (Eigen::Index k = i + 1; k <= col; ++k) acc -= m(i, k) * inv(k, col);
      inv(i, col) = acc * dinv[static_cast<std::size_t>(i)];
    }
  }
  return inv;
}

}  // namespace abels
