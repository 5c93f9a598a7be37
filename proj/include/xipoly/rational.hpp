#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace xipoly {

/// Exact arbitrary-precision fraction, always held in canonical form
/// (reduced, positive denominator).
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  /// Throws invalid_parameter when den == 0.
  Rational(long num, long den);

  explicit Rational(mpq_class value);

  /// Accepts "p/q" or an integer literal, optionally signed. No decimals.
  static Rational parse(std::string_view text);

  std::string to_string() const;
  std::string numerator_string() const;
  std::string denominator_string() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  const mpq_class& value() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws invalid_parameter on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// base^exp with 0^0 = 1.
Rational pow(const Rational& base, std::uint64_t exp);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace xipoly
