#pragma once

#include <ostream>
#include <utility>

#include "hyperinv/error.hpp"
#include "hyperinv/unipoly.hpp"

namespace hyperinv {

/// num/den over a field F, kept reduced with a monic denominator so that equal
/// functions have equal representations.
template <CoefficientField F>
class RatFunc {
 public:
  using Poly = UniPoly<F>;

  RatFunc() : den_(ring_one<F>()) {}
  RatFunc(const Rational& c)  // NOLINT
      : num_(Poly(c)), den_(ring_one<F>()) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(ring_one<F>()) {}  // NOLINT
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("division_by_zero", "rational function with zero denominator");
    normalize();
  }

  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Value at x; throws DomainError("pole") where the denominator vanishes.
  F evaluate(const F& x) const {
    const F d = den_(x);
    if (ring_is_zero(d)) throw DomainError("pole", "rational function evaluated at a pole");
    return num_(x) / d;
  }

  RatFunc inverse() const {
    if (is_zero()) throw DomainError("division_by_zero", "inverse of the zero rational function");
    return RatFunc(den_, num_);
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend RatFunc operator*(RatFunc a, const Rational& q) {
    if (q.is_zero()) return RatFunc();
    a.num_ = a.num_ * q;
    return a;
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
    return os << '(' << f.num_ << ") / (" << f.den_ << ')';
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(ring_one<F>());
      return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    const F lead_inv = ring_inverse(den_.leading());
    num_ = num_ * Poly(lead_inv);
    den_ = monic(den_);
  }

  Poly num_;
  Poly den_;
};

template <CoefficientField F>
bool is_zero(const RatFunc<F>& f) {
  return f.is_zero();
}

template <CoefficientField F>
RatFunc<F> inverse(const RatFunc<F>& f) {
  return f.inverse();
}

/// Exact value of a rational function with rational coefficients.
inline Rational ratfunc_eval(const RatFunc<Rational>& f, const Rational& x) { return f.evaluate(x); }

}  // namespace hyperinv
