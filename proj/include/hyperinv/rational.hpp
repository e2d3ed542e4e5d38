#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace hyperinv {

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator. Backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: integers embed implicitly
  Rational(long numerator, long denominator);
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  /// Accepts "p", "-p" or "p/q" with decimal integers; q must be nonzero.
  static Rational parse(std::string_view text);

  std::string to_string() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(long exponent) const;

  /// Exact k-th root when it exists in Q (k >= 1).
  std::optional<Rational> root(unsigned long k) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
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

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_class value_{0};
};

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline Rational inverse(const Rational& q) { return q.inverse(); }

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace hyperinv
