#include "abels/numeric.hpp"

#include "abels/errors.hpp"

#include <charconv>

namespace abels {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::SumSignViolation: return "SumSignViolation";
    case ErrorKind::DegenerateDerivedVector: return "DegenerateDerivedVector";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::WrongBlockCount: return "WrongBlockCount";
    case ErrorKind::NotPartitionOfV: return "NotPartitionOfV";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::ClassModelMismatch: return "ClassModelMismatch";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotTriangular: return "NotTriangular";
    case ErrorKind::EvenPrime: return "EvenPrime";
    case ErrorKind::NotDiagonalizable: return "NotDiagonalizable";
    case ErrorKind::NotASimplex: return "NotASimplex";
    case ErrorKind::EmptyComplex: return "EmptyComplex";
    case ErrorKind::NotSubcomplex: return "NotSubcomplex";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::TimeLimitExceeded: return "TimeLimitExceeded";
    case ErrorKind::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty integer");
  BigInt value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::InvalidArgument, "not an integer: '" + std::string(s) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  BigInt num = parse_integer(s.substr(0, slash));
  BigInt den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

VectorXl parse_int_vector(std::string_view text) {
  std::vector<std::int64_t> values;
  std::string_view rest = text;
  while (true) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    std::int64_t v = 0;
    const char* first = item.data();
    const char* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (item.empty() || ec != std::errc() || ptr != last) {
      throw Error(ErrorKind::InvalidArgument, "cannot parse integer list '" + std::string(text) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  VectorXl out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) out(static_cast<Eigen::Index>(i)) = values[i];
  return out;
}

}  // namespace abels
