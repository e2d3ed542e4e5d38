#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperinv/binary_form.hpp"
#include "hyperinv/cyclo.hpp"

namespace hyperinv {

/// Order of the cyclic normal form: n t = 2g+2, 2g+1 or 2g for cases 1, 2, 3.
/// Throws DomainError("constraint_violation") naming the failed divisibility.
int cyclic_t(int kase, int n, int g);

/// Y^2 = X^{nt} + a_1 X^{n(t-1)} + ... + a_delta X^n + 1 (cases 1, 2) or X times
/// that (case 3), with delta = t - 1. Coefficients a_1..a_delta are stored.
template <CoefficientRing R>
struct CyclicNormalForm {
  int kase = 1;
  int n = 2;
  int genus = 2;
  std::vector<R> a;

  int t() const { return cyclic_t(kase, n, genus); }
  int delta() const { return t() - 1; }
  /// a_i for 1 <= i <= delta.
  const R& at(int i) const { return a[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const CyclicNormalForm&, const CyclicNormalForm&) = default;
};

template <CoefficientRing R>
CyclicNormalForm<R> make_normal_form(int kase, int n, int g, std::vector<R> a) {
  if (kase < 1 || kase > 3) throw DomainError("constraint_violation", "case must be 1, 2 or 3");
  if (n < 2) throw DomainError("constraint_violation", "n >= 2");
  if (g < 2) throw DomainError("constraint_violation", "g >= 2");
  const int t = cyclic_t(kase, n, g);
  if (static_cast<int>(a.size()) != t - 1) {
    throw DomainError("constraint_violation", "expected delta = " + std::to_string(t - 1) + " coefficients, got " +
                                                  std::to_string(a.size()));
  }
  return CyclicNormalForm<R>{kase, n, g, std::move(a)};
}

/// The right-hand side as a form of degree 2g+2.
template <CoefficientRing R>
BinaryForm<R> normal_form_polynomial(const CyclicNormalForm<R>& nf) {
  const int t = nf.t();
  const int shift = nf.kase == 3 ? 1 : 0;
  std::vector<R> c(static_cast<std::size_t>(2 * nf.genus + 3), ring_zero<R>());
  auto slot = [&](int exponent) -> R& { return c[static_cast<std::size_t>(exponent + shift)]; };
  slot(nf.n * t) = ring_one<R>();
  slot(0) = ring_one<R>();
  for (int i = 1; i < t; ++i) slot(nf.n * (t - i)) = nf.at(i);
  return BinaryForm<R>(2 * nf.genus + 2, std::move(c));
}

/// u_i = a_1^{t-i} a_i + a_delta^{t-i} a_{t-i}, 1 <= i <= delta.
template <CoefficientRing R>
std::vector<R> dihedral_invariants(const CyclicNormalForm<R>& nf) {
  const int t = nf.t();
  const int delta = t - 1;
  std::vector<R> u;
  for (int i = 1; i <= delta; ++i) {
    const auto e = static_cast<unsigned long>(t - i);
    u.push_back(power(nf.at(1), e) * nf.at(i) + power(nf.at(delta), e) * nf.at(t - i));
  }
  return u;
}

/// tau_1: X -> eps X with eps^{nt} = 1, so a_i -> eps^{n(t-i)} a_i.
template <CoefficientRing R>
CyclicNormalForm<R> h_action_tau1(const CyclicNormalForm<R>& nf, const R& eps) {
  const int t = nf.t();
  if (!(power(eps, static_cast<unsigned long>(nf.n * t)) == ring_one<R>())) {
    throw DomainError("unrepresentable_root_of_unity",
                      "epsilon is not a " + std::to_string(nf.n * t) + "-th root of unity in the coefficient field");
  }
  CyclicNormalForm<R> out = nf;
  for (int i = 1; i < t; ++i) {
    out.a[static_cast<std::size_t>(i - 1)] = power(eps, static_cast<unsigned long>(nf.n * (t - i))) * nf.at(i);
  }
  return out;
}

/// tau_2: a_i -> a_{t-i}.
template <CoefficientRing R>
CyclicNormalForm<R> h_action_tau2(const CyclicNormalForm<R>& nf) {
  CyclicNormalForm<R> out = nf;
  std::reverse(out.a.begin(), out.a.end());
  return out;
}

/// m-th roots of unity available in Q(i, sqrt 3): all of them when m divides
/// 12, otherwise only +-1. For tau_1 take m = nt.
std::vector<Cyclo> representable_roots_of_unity(int m);

/// 2^{g-1} u_1^2 - u_g^{g+1}; zero iff the reduced group has a further
/// involution. Valid for case 1 with n = 2 (delta = g).
template <CoefficientRing R>
R extra_involution_residual(int kase, int n, const std::vector<R>& u) {
  if (kase != 1 || n != 2) {
    throw DomainError("constraint_violation", "the extra involution test needs case 1 with n = 2");
  }
  if (u.empty()) throw DomainError("constraint_violation", "empty dihedral invariants");
  const auto g = static_cast<unsigned long>(u.size());
  return u.front() * u.front() * Rational(2).pow(static_cast<long>(g) - 1) - power(u.back(), g + 1);
}

template <CoefficientRing R>
bool extra_involution_condition(int kase, int n, const std::vector<R>& u) {
  return is_zero(extra_involution_residual(kase, n, u));
}

/// Outcome of reconstructing a normal form from dihedral invariants over Q:
/// either a form, or the polynomial (in z = a_delta^t, or X^t - z) that has
/// no rational root.
struct Reconstruction {
  std::optional<CyclicNormalForm<Rational>> form;
  std::optional<UniPoly<Rational>> obstruction;
  std::string obstruction_variable;
};

/// 2^t z^2 - 2^t u_1 z + u_delta^t, whose roots are a_delta^t and a_1^t.
UniPoly<Rational> reconstruction_quadratic(const std::vector<Rational>& u, int t);

Reconstruction reconstruct_from_u(const std::vector<Rational>& u, int kase, int n, int g);

/// Every (a_1..a_delta) over Q(i, sqrt 3) with the given rational dihedral
/// invariants, found by adjoining the t-th roots of unity to the rational
/// roots of the quadratic. Needs t | 12.
std::vector<CyclicNormalForm<Cyclo>> dihedral_fiber(const std::vector<Rational>& u, int kase, int n, int g);

/// One row of the table of cyclic and A4 reduced automorphism groups.
struct Table1Row {
  int row = 0;
  std::string group;
  std::string reduced_group;
  int delta = 0;
  std::vector<std::string> signature;
  int involutions = 0;
};

/// Group tags: "Z2xZn", "Z2n" (cases 1-3, needs n), "Z2xA4", "SL2(3)".
Table1Row table1_catalogue(const std::string& group, int n, int g);

}  // namespace hyperinv
