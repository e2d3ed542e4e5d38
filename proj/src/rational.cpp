#include "hyperinv/rational.hpp"

#include <cctype>
#include <ostream>

#include "hyperinv/error.hpp"

namespace hyperinv {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("division_by_zero", "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DomainError("division_by_zero", "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal_integer(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rational(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("division_by_zero", "inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

std::optional<Rational> Rational::root(unsigned long k) const {
  if (k == 0) return std::nullopt;
  if (k == 1) return *this;
  if (sign() < 0 && k % 2 == 0) return std::nullopt;
  mpz_class n = ::abs(value_.get_num());
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), value_.get_den_mpz_t(), k) == 0) return std::nullopt;
  if (sign() < 0) rn = -rn;
  return Rational(rn, rd);
}

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
  if (rhs.is_zero()) throw DomainError("division_by_zero", "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace hyperinv
