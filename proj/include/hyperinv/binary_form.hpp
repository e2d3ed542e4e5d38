#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hyperinv/error.hpp"
#include "hyperinv/ring.hpp"
#include "hyperinv/unipoly.hpp"

namespace hyperinv {

/// F(X,Z) = sum_i a_i X^i Z^(d-i) of declared degree d (a_0..a_d stored).
template <CoefficientRing R>
class BinaryForm {
 public:
  using Ring = R;

  BinaryForm() : BinaryForm(0) {}
  explicit BinaryForm(int degree) : degree_(degree) {
    if (degree < 0) throw DomainError("unsupported_degree", "negative form degree");
    a_.assign(static_cast<std::size_t>(degree + 1), ring_zero<R>());
  }
  BinaryForm(int degree, std::vector<R> coeffs) : degree_(degree), a_(std::move(coeffs)) {
    if (degree < 0 || a_.size() != static_cast<std::size_t>(degree + 1)) {
      throw DomainError("degree_mismatch", "form of degree " + std::to_string(degree) + " needs " +
                                               std::to_string(degree + 1) + " coefficients, got " +
                                               std::to_string(a_.size()));
    }
  }

  /// Homogenizes p(X) to degree d: p(X/Z) Z^d.
  static BinaryForm from_poly(const UniPoly<R>& p, int d) {
    if (p.degree() > d) {
      throw DomainError("degree_mismatch", "polynomial of degree " + std::to_string(p.degree()) +
                                               " does not fit a form of degree " + std::to_string(d));
    }
    std::vector<R> a(static_cast<std::size_t>(d + 1), ring_zero<R>());
    for (int i = 0; i <= p.degree(); ++i) a[static_cast<std::size_t>(i)] = p.coefficients()[static_cast<std::size_t>(i)];
    return BinaryForm(d, std::move(a));
  }

  int degree() const { return degree_; }
  const std::vector<R>& coefficients() const { return a_; }
  const R& operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const R& c) { return ring_is_zero(c); });
  }

  /// F(X, 1).
  UniPoly<R> dehomogenize() const { return UniPoly<R>(a_); }

  /// b_i = ((d-i)! i! / d!) a_i.
  std::vector<R> binomial_coordinates() const {
    std::vector<R> b;
    b.reserve(a_.size());
    for (int i = 0; i <= degree_; ++i) {
      const Rational w(mpz_class(1), binomial(static_cast<unsigned long>(degree_), static_cast<unsigned long>(i)));
      b.push_back(a_[static_cast<std::size_t>(i)] * w);
    }
    return b;
  }

  /// d^(x+z) F / dX^x dZ^z.
  BinaryForm partial(int x, int z) const {
    const int out_deg = degree_ - x - z;
    if (out_deg < 0) return BinaryForm(0);
    std::vector<R> out(static_cast<std::size_t>(out_deg + 1), ring_zero<R>());
    for (int i = x; i <= degree_ - z; ++i) {
      const R& c = a_[static_cast<std::size_t>(i)];
      if (ring_is_zero(c)) continue;
      mpz_class w = 1;
      for (int k = 0; k < x; ++k) w *= i - k;
      for (int k = 0; k < z; ++k) w *= degree_ - i - k;
      out[static_cast<std::size_t>(i - x)] = c * Rational(w);
    }
    return BinaryForm(out_deg, std::move(out));
  }

  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    f.require_same_degree(g);
    std::vector<R> out = f.a_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + g.a_[i];
    return BinaryForm(f.degree_, std::move(out));
  }
  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
    f.require_same_degree(g);
    std::vector<R> out = f.a_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] - g.a_[i];
    return BinaryForm(f.degree_, std::move(out));
  }
  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
    std::vector<R> out(static_cast<std::size_t>(f.degree_ + g.degree_ + 1), ring_zero<R>());
    for (std::size_t i = 0; i < f.a_.size(); ++i) {
      if (ring_is_zero(f.a_[i])) continue;
      for (std::size_t j = 0; j < g.a_.size(); ++j) {
        if (ring_is_zero(g.a_[j])) continue;
        out[i + j] = out[i + j] + f.a_[i] * g.a_[j];
      }
    }
    return BinaryForm(f.degree_ + g.degree_, std::move(out));
  }
  BinaryForm scaled(const R& s) const {
    std::vector<R> out = a_;
    for (auto& c : out) c = s * c;
    return BinaryForm(degree_, std::move(out));
  }
  BinaryForm scaled(const Rational& q) const
    requires(!std::same_as<R, Rational>)
  {
    std::vector<R> out = a_;
    for (auto& c : out) c = c * q;
    return BinaryForm(degree_, std::move(out));
  }
  BinaryForm operator-() const { return scaled(R(Rational(-1))); }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BinaryForm& f) {
    os << "form(d=" << f.degree_ << ";";
    for (const auto& c : f.a_) os << ' ' << c;
    return os << ')';
  }

 private:
  void require_same_degree(const BinaryForm& g) const {
    if (degree_ != g.degree_) throw DomainError("degree_mismatch", "adding forms of different degree");
  }

  int degree_;
  std::vector<R> a_;
};

/// [[a, b], [c, d]] acting by X -> aX + bZ, Z -> cX + dZ.
template <CoefficientRing R>
struct Matrix2 {
  R a, b, c, d;
  R det() const { return a * d - b * c; }
  static Matrix2 identity() { return {ring_one<R>(), ring_zero<R>(), ring_zero<R>(), ring_one<R>()}; }
  static Matrix2 diagonal(R x, R z) { return {std::move(x), ring_zero<R>(), ring_zero<R>(), std::move(z)}; }
};

template <CoefficientRing R>
BinaryForm<R> gl2_act(const Matrix2<R>& m, const BinaryForm<R>& f) {
  if (is_zero(m.det())) throw DomainError("singular_matrix", "gl2_act needs an invertible matrix");
  const int d = f.degree();
  // Powers of the linear forms aX + bZ and cX + dZ, stored as forms in (X, Z).
  std::vector<BinaryForm<R>> px{BinaryForm<R>(0, {ring_one<R>()})};
  std::vector<BinaryForm<R>> pz{BinaryForm<R>(0, {ring_one<R>()})};
  const BinaryForm<R> lx(1, {m.b, m.a});
  const BinaryForm<R> lz(1, {m.d, m.c});
  for (int k = 1; k <= d; ++k) {
    px.push_back(px.back() * lx);
    pz.push_back(pz.back() * lz);
  }
  BinaryForm<R> out(d);
  for (int i = 0; i <= d; ++i) {
    if (is_zero(f[i])) continue;
    out = out + (px[static_cast<std::size_t>(i)] * pz[static_cast<std::size_t>(d - i)]).scaled(f[i]);
  }
  return out;
}

/// A form together with its covariant metadata relative to a source form of
/// degree `source_degree`: degree in the source coefficients, order in (X, Z)
/// and index s = (p d - m) / 2.
template <CoefficientRing R>
struct Covariant {
  BinaryForm<R> form;
  int degree_p = 1;
  int order_m = 0;
  int index_s = 0;
  int source_degree = 0;

  /// The source form itself: degree 1, index 0.
  static Covariant of(BinaryForm<R> f) {
    const int d = f.degree();
    return Covariant{std::move(f), 1, d, 0, d};
  }
  bool is_invariant() const { return order_m == 0; }
  /// Value of an order-zero covariant.
  const R& value() const { return form[0]; }
};

/// The r-th transvectant (f, g)^r.
template <CoefficientRing R>
Covariant<R> transvect(const Covariant<R>& f, const Covariant<R>& g, int r) {
  const int m = f.order_m;
  const int n = g.order_m;
  if (r < 0 || r > m || r > n) {
    throw DomainError("invalid_transvectant_order", "transvectant order " + std::to_string(r) +
                                                        " outside [0, min(" + std::to_string(m) + ", " +
                                                        std::to_string(n) + ")]");
  }
  BinaryForm<R> sum(m + n - 2 * r);
  for (int k = 0; k <= r; ++k) {
    const BinaryForm<R> df = f.form.partial(r - k, k);
    if (df.is_zero()) continue;
    const BinaryForm<R> dg = g.form.partial(k, r - k);
    if (dg.is_zero()) continue;
    mpz_class c = binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(k));
    if (k % 2 == 1) c = -c;
    sum = sum + (df * dg).scaled(R(Rational(c)));
  }
  const Rational prefactor(factorial(static_cast<unsigned long>(m - r)) * factorial(static_cast<unsigned long>(n - r)),
                           factorial(static_cast<unsigned long>(m)) * factorial(static_cast<unsigned long>(n)));
  std::vector<R> scaled = sum.coefficients();
  for (auto& x : scaled) x = x * prefactor;
  return Covariant<R>{BinaryForm<R>(m + n - 2 * r, std::move(scaled)), f.degree_p + g.degree_p, m + n - 2 * r,
                      f.index_s + g.index_s + r, f.source_degree};
}

}  // namespace hyperinv
