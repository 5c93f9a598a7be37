#include "xipoly/rational.hpp"

#include <ostream>

#include "xipoly/error.hpp"

namespace xipoly {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw invalid_parameter("rational with zero denominator");
  value_ = num;
  value_ /= mpq_class(den);
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text, true)) {
      throw invalid_parameter("malformed rational '" + std::string(text) +
                              "' (expected integer or p/q)");
    }
    return Rational(mpq_class(to_mpz(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, true)) {
    throw invalid_parameter("malformed rational '" + std::string(text) +
                            "' (expected integer or p/q)");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) throw invalid_parameter("rational '" + std::string(text) + "' has zero denominator");
  return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::numerator_string() const { return value_.get_num().get_str(10); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw invalid_parameter("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational pow(const Rational& base, std::uint64_t exp) {
  Rational result(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace xipoly
