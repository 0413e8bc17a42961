#pragma once

// Exact arithmetic in Z[1/p]: every value is unit * p^exponent with p not
// dividing unit. Matrices over Z[1/p] are plain Eigen matrices of PScalar.

#include "abels/numeric.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace abels {

inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

class PScalar {
 public:
  /// Zero with no prime attached; adopts the prime of whatever it meets.
  PScalar() = default;
  /// Integer literal. Without a prime, only the normalization is deferred.
  PScalar(std::int64_t value) : unit_(value) {}  // NOLINT(google-explicit-constructor)
  PScalar(std::int64_t value, std::int64_t p);

  /// unit * p^exponent.
  static PScalar from_parts(std::int64_t unit, int exponent, std::int64_t p);
  static PScalar power(std::int64_t p, int exponent) { return from_parts(1, exponent, p); }
  /// "a" or "a/b" where b is a power of p. Throws InvalidArgument.
  static PScalar parse(std::string_view text, std::int64_t p);
  static PScalar from_rational(const Rational& value, std::int64_t p);

  std::int64_t prime() const { return p_; }
  bool has_prime() const { return p_ != 0; }
  bool is_zero() const { return unit_ == 0; }
  std::int64_t unit() const { return unit_; }
  int exponent() const { return exp_; }
  /// p-adic valuation; kInfiniteValuation for zero.
  int valuation() const { return is_zero() ? kInfiniteValuation : exp_; }
  /// Lies in Z_p (equivalently in Z, since the only denominators are p-powers).
  bool is_integral() const { return is_zero() || exp_ >= 0; }
  bool is_integer() const { return is_integral(); }

  /// this * p^k
  PScalar shifted(int k) const;
  /// Representative of this modulo p^e Z in [0, p^e).
  PScalar mod_power(int e) const;
  /// Exact division by an integer; false if the quotient leaves Z[1/p].
  bool divide_exact(std::int64_t divisor, PScalar& out) const;

  Rational to_rational() const;
  std::string to_string() const;
  /// Value as an integer; requires is_integer(). Throws PrecisionExceeded on overflow.
  std::int64_t to_int64() const;

  PScalar operator-() const;
  friend PScalar operator+(const PScalar& a, const PScalar& b);
  friend PScalar operator-(const PScalar& a, const PScalar& b) { return a + (-b); }
  friend PScalar operator*(const PScalar& a, const PScalar& b);
  PScalar& operator+=(const PScalar& o) { return *this = *this + o; }
  PScalar& operator-=(const PScalar& o) { return *this = *this - o; }
  PScalar& operator*=(const PScalar& o) { return *this = *this * o; }

  friend bool operator==(const PScalar& a, const PScalar& b);
  /// Numerical order.
  friend std::strong_ordering operator<=>(const PScalar& a, const PScalar& b);

  /// Order on the (exponent, unit) representation; cheap, total, and
  /// consistent with == once both sides carry the same prime.
  static bool representation_less(const PScalar& a, const PScalar& b) {
    if (a.unit_ != b.unit_) return a.unit_ < b.unit_;
    return a.exp_ < b.exp_;
  }

 private:
  void normalize();
  static std::int64_t common_prime(const PScalar& a, const PScalar& b);

  std::int64_t unit_ = 0;
  int exp_ = 0;
  std::int64_t p_ = 0;
};

std::ostream& operator<<(std::ostream& out, const PScalar& x);

inline int valuation(const PScalar& x) { return x.valuation(); }

using PMatrix = MatrixX<PScalar>;
using PVector = VectorX<PScalar>;

/// Attaches the prime to every entry (normalizing deferred literals).
PMatrix with_prime(const PMatrix& m, std::int64_t p);
PMatrix identity_matrix(int dim, std::int64_t p);
PMatrix diagonal_matrix(const std::vector<PScalar>& diagonal);
/// Exact determinant via fraction-free elimination.
Rational determinant(const PMatrix& m);
int det_valuation(const PMatrix& m);
bool is_upper_triangular(const PMatrix& m);
/// Inverse of an upper triangular matrix with p-power (or unit +-1) diagonal.
PMatrix triangular_inverse(const PMatrix& m);

}  // namespace abels

namespace Eigen {

template <>
struct NumTraits<abels::PScalar> : GenericNumTraits<abels::PScalar> {
  using Real = abels::PScalar;
  using NonInteger = abels::PScalar;
  using Nested = abels::PScalar;
  using Literal = abels::PScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
