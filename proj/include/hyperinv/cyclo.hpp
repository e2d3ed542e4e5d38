#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperinv/rational.hpp"

namespace hyperinv {

/// Element c0 + c1*i + c2*sqrt(3) + c3*i*sqrt(3) of the degree-4 field Q(i, sqrt 3).
///
/// This is the twelfth cyclotomic field, so it holds every root of unity of
/// order dividing 12 as well as the constants 2i*sqrt(3), 6i*sqrt(3) of the
/// A4 cover.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(Rational c0) : c_{std::move(c0), 0, 0, 0} {}  // NOLINT: Q embeds implicitly
  Cyclo(long c0) : Cyclo(Rational(c0)) {}              // NOLINT
  Cyclo(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  static Cyclo i() { return {0, 1, 0, 0}; }
  static Cyclo sqrt3() { return {0, 0, 1, 0}; }
  static Cyclo i_sqrt3() { return {0, 0, 0, 1}; }
  /// Primitive twelfth root of unity (sqrt(3) + i) / 2.
  static Cyclo zeta12();
  /// All t-th roots of unity in the field; empty unless t divides 12.
  static std::vector<Cyclo> roots_of_unity(unsigned t);

  const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  const std::array<Rational, 4>& coordinates() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  /// i -> -i
  Cyclo conj_i() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
  /// sqrt(3) -> -sqrt(3)
  Cyclo conj_sqrt3() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }

  /// Field norm down to Q (product of the four conjugates).
  Rational norm() const;
  Cyclo inverse() const;

  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(const Cyclo& rhs);
  Cyclo& operator/=(const Cyclo& rhs) { return *this *= rhs.inverse(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend Cyclo operator*(Cyclo a, const Rational& q) {
    for (auto& c : a.c_) c *= q;
    return a;
  }
  Cyclo operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

  friend bool operator==(const Cyclo&, const Cyclo&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclo& x);

 private:
  std::array<Rational, 4> c_{};
};

inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline Cyclo inverse(const Cyclo& x) { return x.inverse(); }

}  // namespace hyperinv
