#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hyperinv/error.hpp"
#include "hyperinv/ring.hpp"

namespace hyperinv {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
template <CoefficientRing R>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rational& c)  // NOLINT: Q embeds implicitly
    requires(!std::same_as<R, Rational>)
      : UniPoly(R(c)) {}
  UniPoly(R constant) {  // NOLINT
    if (!ring_is_zero(constant)) coeffs_.push_back(std::move(constant));
  }
  explicit UniPoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly variable() { return monomial(ring_one<R>(), 1); }
  static UniPoly monomial(R c, std::size_t k) {
    std::vector<R> v(k + 1, ring_zero<R>());
    v[k] = std::move(c);
    return UniPoly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }
  R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ring_zero<R>(); }
  const R& leading() const { return coeffs_.back(); }

  /// Horner evaluation in any ring S that R embeds into.
  template <class S = R>
  S operator()(const S& x) const {
    S acc = S(ring_zero<R>());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<R> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
    return UniPoly(std::move(d));
  }

  /// p(q(x)).
  UniPoly compose(const UniPoly& q) const {
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + UniPoly(*it);
    return acc;
  }

  UniPoly& operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ring_zero<R>());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ring_zero<R>());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, ring_zero<R>());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (ring_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
  }
  friend UniPoly operator*(UniPoly a, const Rational& q) {
    for (auto& c : a.coeffs_) c = c * q;
    a.trim();
    return a;
  }
  friend UniPoly operator*(const R& s, UniPoly a)
    requires(!std::same_as<R, Rational>)
  {
    for (auto& c : a.coeffs_) c = s * c;
    a.trim();
    return a;
  }
  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = p.coeffs_.size(); k-- > 0;) {
      if (ring_is_zero(p.coeffs_[k])) continue;
      if (!first) os << " + ";
      first = false;
      os << '(' << p.coeffs_[k] << ')';
      if (k > 0) os << "*x^" << k;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && ring_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <CoefficientRing R>
bool is_zero(const UniPoly<R>& p) {
  return p.is_zero();
}

/// Quotient and remainder of Euclidean division over a field.
template <CoefficientField F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (b.is_zero()) throw DomainError("division_by_zero", "polynomial division by zero");
  std::vector<F> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly<F>(), a};
  std::vector<F> quot(static_cast<std::size_t>(a.degree() - db + 1), ring_zero<F>());
  const F lead_inv = inverse(b.leading());
  for (int k = a.degree(); k >= db; --k) {
    const F& top = rem[static_cast<std::size_t>(k)];
    if (is_zero(top)) continue;
    const F c = top * lead_inv;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(k - db + j)];
      slot = slot - c * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly<F>(std::move(quot)), UniPoly<F>(std::move(rem))};
}

/// Quotient of a division known to be exact; throws if a remainder is left.
template <CoefficientField F>
UniPoly<F> exact_quotient(const UniPoly<F>& a, const UniPoly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact_division", "polynomial division left a remainder");
  return q;
}

template <CoefficientField F>
UniPoly<F> monic(const UniPoly<F>& p) {
  if (p.is_zero()) return p;
  std::vector<F> c = p.coefficients();
  const F inv = inverse(p.leading());
  for (auto& x : c) x = x * inv;
  return UniPoly<F>(std::move(c));
}

/// Monic greatest common divisor over a field.
template <CoefficientField F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd_of_zero", "gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

/// p / gcd(p, p'), monic.
template <CoefficientField F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
  if (p.degree() <= 0) return monic(p);
  return monic(exact_quotient(p, poly_gcd(p, p.derivative())));
}

}  // namespace hyperinv
