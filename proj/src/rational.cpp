#include "sdt/rational.hpp"

#include <cctype>
#include <ostream>

#include "sdt/error.hpp"

namespace sdt {

namespace {

Rational::Integer parse_integer(std::string_view digits, std::string_view whole) {
  std::size_t start = 0;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    negative = digits[0] == '-';
    start = 1;
  }
  if (start == digits.size()) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  }
  Rational::Integer value = 0;
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) +
                                             "' (expected p/q with integer p, q)");
    }
    value = value * 10 + (digits[i] - '0');
  }
  return negative ? Rational::Integer(-value) : value;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "rational with zero denominator");
  value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text), 1);
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  return Rational(num, den);
}

std::string Rational::str() const { return num().str() + "/" + den().str(); }

std::pair<std::int64_t, std::int64_t> Rational::as_int64_pair() const {
  Integer n = num();
  Integer d = den();
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (n < lo || n > hi || d > hi) {
    throw Error(ErrorCode::KOutOfRange, "rational " + str() + " does not fit in 64-bit parts");
  }
  return {n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>()};
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorCode::ParseError, "division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sdt
