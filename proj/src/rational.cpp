#include "bugscope/rational.hpp"

#include <cctype>
#include <ostream>

#include "bugscope/errors.hpp"

namespace bugscope {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw ParseError(1, 0, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError(1, j + 1, "malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::fraction(std::int64_t numerator, std::int64_t denominator) {
  return Rational(BigInt(static_cast<long>(numerator)), BigInt(static_cast<long>(denominator)));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text), BigInt(1));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError(1, slash + 2, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division of a rational by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace bugscope
