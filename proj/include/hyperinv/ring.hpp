#pragma once

#include <concepts>

#include "hyperinv/rational.hpp"

namespace hyperinv {

/// The coefficient-ring contract every form and transvectant routine is
/// written against: exact ring arithmetic, exact zero test, and an embedding
/// of Q (transvectant prefactors are rational).
template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { is_zero(a) } -> std::same_as<bool>;
  R(q);
};

/// A coefficient ring that also has exact division by nonzero elements.
template <class F>
concept CoefficientField = CoefficientRing<F> && requires(const F& a, const F& b) {
  { a / b } -> std::convertible_to<F>;
  { inverse(a) } -> std::convertible_to<F>;
};

/// Zero test and inverse through argument-dependent lookup, for use inside
/// classes whose own is_zero()/inverse() members would hide the free functions.
template <class T>
bool ring_is_zero(const T& x) {
  return is_zero(x);
}
template <class T>
T ring_inverse(const T& x) {
  return inverse(x);
}

template <CoefficientRing R>
R ring_zero() {
  return R(Rational(0));
}

template <CoefficientRing R>
R ring_one() {
  return R(Rational(1));
}

template <CoefficientRing R>
R power(R base, unsigned long exponent) {
  R result = ring_one<R>();
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace hyperinv
