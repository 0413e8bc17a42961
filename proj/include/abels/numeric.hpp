#pragma once

// Exact integer and rational scalars shared by every module.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace abels {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

using VectorXl = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using MatrixXl = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = VectorX<Rational>;

/// Parses "a", "-a" or "a/b" into an exact rational. Throws InvalidArgument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a" for integers, "a/b" otherwise.
std::string format_rational(const Rational& value);

/// Comma separated integers, e.g. "1,0,-1".
VectorXl parse_int_vector(std::string_view text);

/// floor(a / b) for b > 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

}  // namespace abels
