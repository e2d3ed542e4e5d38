#pragma once

#include <cstdint>
#include <random>

#include "hyperinv/a4.hpp"
#include "hyperinv/cyclic.hpp"

namespace testsupport {

using namespace hyperinv;

inline constexpr std::uint64_t kSeed = 0x5eed2026;

/// Small random exact values from a fixed-seed engine.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long range = 9, long max_den = 6) { return Rational(integer(-range, range), integer(1, max_den)); }
  Rational nonzero_rational(long range = 9, long max_den = 6) {
    for (;;) {
      Rational q = rational(range, max_den);
      if (!q.is_zero()) return q;
    }
  }
  Cyclo cyclo() { return Cyclo(rational(), rational(), rational(), rational()); }
  Cyclo nonzero_cyclo() {
    for (;;) {
      Cyclo x = cyclo();
      if (!x.is_zero()) return x;
    }
  }
  QPoly qpoly(int max_degree) {
    std::vector<Rational> c;
    const int deg = static_cast<int>(integer(0, max_degree));
    for (int k = 0; k <= deg; ++k) c.push_back(rational());
    return QPoly(std::move(c));
  }
  QPoly nonzero_qpoly(int max_degree) {
    for (;;) {
      QPoly p = qpoly(max_degree);
      if (!p.is_zero()) return p;
    }
  }
  BinaryForm<Rational> form(int d, long range = 5) {
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k) c.push_back(Rational(integer(-range, range)));
    return BinaryForm<Rational>(d, std::move(c));
  }
  /// A form with every coefficient nonzero, so that no catalogued invariant
  /// vanishes by accident of sparsity.
  BinaryForm<Rational> dense_form(int d) {
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k) c.push_back(nonzero_rational(7, 3));
    return BinaryForm<Rational>(d, std::move(c));
  }
  Matrix2<Rational> invertible_matrix(long range = 3) {
    for (;;) {
      Matrix2<Rational> m{Rational(integer(-range, range)), Rational(integer(-range, range)),
                          Rational(integer(-range, range)), Rational(integer(-range, range))};
      if (!m.det().is_zero()) return m;
    }
  }

 private:
  std::mt19937_64 rng_;
};

/// F(x, z) by direct summation.
template <class R>
R evaluate_form(const BinaryForm<R>& f, const R& x, const R& z) {
  R acc = ring_zero<R>();
  for (int i = 0; i <= f.degree(); ++i) {
    acc = acc + f[i] * power(x, static_cast<unsigned long>(i)) * power(z, static_cast<unsigned long>(f.degree() - i));
  }
  return acc;
}

inline QPoly qpoly(std::initializer_list<long> low_first) {
  std::vector<Rational> c;
  for (long v : low_first) c.emplace_back(v);
  return QPoly(std::move(c));
}

inline Rational q(const char* text) { return Rational::parse(text); }

}  // namespace testsupport
