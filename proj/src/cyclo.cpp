#include "hyperinv/cyclo.hpp"

#include <ostream>
#include <sstream>

#include "hyperinv/error.hpp"
#include "hyperinv/ring.hpp"

namespace hyperinv {

Cyclo Cyclo::zeta12() { return {0, Rational(1, 2), Rational(1, 2), 0}; }

std::vector<Cyclo> Cyclo::roots_of_unity(unsigned t) {
  std::vector<Cyclo> roots;
  if (t == 0 || 12 % t != 0) return roots;
  const Cyclo generator = power(zeta12(), 12 / t);
  Cyclo r = ring_one<Cyclo>();
  for (unsigned k = 0; k < t; ++k) {
    roots.push_back(r);
    r *= generator;
  }
  return roots;
}

bool Cyclo::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Cyclo& Cyclo::operator+=(const Cyclo& rhs) {
  for (int k = 0; k < 4; ++k) c_[k] += rhs.c_[k];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& rhs) {
  for (int k = 0; k < 4; ++k) c_[k] -= rhs.c_[k];
  return *this;
}

// Basis {1, i, s, is} with i^2 = -1, s^2 = 3.
Cyclo& Cyclo::operator*=(const Cyclo& rhs) {
  const auto& [a0, a1, a2, a3] = c_;
  const auto& [b0, b1, b2, b3] = rhs.c_;
  Rational c0 = a0 * b0 - a1 * b1 + Rational(3) * (a2 * b2 - a3 * b3);
  Rational c1 = a0 * b1 + a1 * b0 + Rational(3) * (a2 * b3 + a3 * b2);
  Rational c2 = a0 * b2 + a2 * b0 - a1 * b3 - a3 * b1;
  Rational c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
  c_ = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
  return *this;
}

Rational Cyclo::norm() const {
  // x * conj_i(x) lies in Q(sqrt 3); multiplying by its sqrt(3)-conjugate lands in Q.
  const Cyclo half = *this * conj_i();
  return (half * half.conj_sqrt3())[0];
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DomainError("division_by_zero", "inverse of zero in Q(i, sqrt 3)");
  const Cyclo half = *this * conj_i();
  const Rational n = (half * half.conj_sqrt3())[0];
  return conj_i() * half.conj_sqrt3() * n.inverse();
}

std::string Cyclo::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) {
  return os << '[' << x[0] << ", " << x[1] << ", " << x[2] << ", " << x[3] << ']';
}

}  // namespace hyperinv
