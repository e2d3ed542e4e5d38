#include "hyperinv/cyclic.hpp"

#include <algorithm>

namespace hyperinv {

int cyclic_t(int kase, int n, int g) {
  if (n < 1) throw DomainError("constraint_violation", "n >= 1");
  int total = 0;
  const char* name = "";
  switch (kase) {
    case 1: total = 2 * g + 2, name = "n | 2g+2"; break;
    case 2: total = 2 * g + 1, name = "n | 2g+1"; break;
    case 3: total = 2 * g, name = "n | 2g"; break;
    default: throw DomainError("constraint_violation", "case must be 1, 2 or 3");
  }
  if (total % n != 0) {
    throw DomainError("constraint_violation", std::string(name) + " fails for n=" + std::to_string(n) +
                                                  ", g=" + std::to_string(g));
  }
  return total / n;
}

std::vector<Cyclo> representable_roots_of_unity(int m) {
  if (m > 0 && 12 % m == 0) return Cyclo::roots_of_unity(static_cast<unsigned>(m));
  if (m % 2 == 0) return {Cyclo(1), Cyclo(-1)};
  return {Cyclo(1)};
}

UniPoly<Rational> reconstruction_quadratic(const std::vector<Rational>& u, int t) {
  const Rational two_t = Rational(2).pow(t);
  return UniPoly<Rational>({u.back().pow(t), -two_t * u.front(), two_t});
}

namespace {

// Given a_1 and a_delta, the remaining coefficients follow from the linear
// systems pairing u_i with u_{t-i}. Returns nullopt when the result does not
// reproduce u.
template <CoefficientField F>
std::optional<std::vector<F>> complete_coefficients(const std::vector<F>& u, int t, const F& a1, const F& ad) {
  const int delta = t - 1;
  std::vector<F> a(static_cast<std::size_t>(delta), ring_zero<F>());
  a.front() = a1;
  a.back() = ad;
  if (delta == 1 && !(a1 == ad)) return std::nullopt;
  auto at = [&](int i) -> F& { return a[static_cast<std::size_t>(i - 1)]; };
  auto ui = [&](int i) -> const F& { return u[static_cast<std::size_t>(i - 1)]; };
  for (int i = 2; 2 * i <= t && i <= delta - 1; ++i) {
    const int j = t - i;
    const F p = power(a1, static_cast<unsigned long>(t - i));
    const F q = power(ad, static_cast<unsigned long>(t - i));
    if (i == j) {
      const F coeff = p + q;
      if (is_zero(coeff)) {
        if (!is_zero(ui(i))) {
          throw DomainError("singular_system", "a_1^" + std::to_string(i) + " + a_delta^" + std::to_string(i) +
                                                   " = 0 but u_" + std::to_string(i) + " != 0");
        }
        at(i) = ring_zero<F>();
        continue;
      }
      at(i) = ui(i) / coeff;
      continue;
    }
    // [a1^{t-i}  ad^{t-i}] [a_i    ]   [u_i    ]
    // [ad^{i}    a1^{i}  ] [a_{t-i}] = [u_{t-i}]
    const F r = power(ad, static_cast<unsigned long>(i));
    const F s = power(a1, static_cast<unsigned long>(i));
    const F det = p * s - q * r;
    if (is_zero(det)) {
      // a_1^t = a_delta^t: the two rows are proportional. A consistent system
      // has a line of solutions; take the symmetric one a_i = a_{t-i} when it
      // exists, otherwise a_{t-i} = 0.
      const bool consistent = is_zero(p) ? is_zero(ui(i)) && (is_zero(q) || is_zero(s * ui(i) - q * ui(j)))
                                         : ui(j) * p == r * ui(i);
      if (!consistent || (is_zero(p) && is_zero(q))) {
        throw DomainError("singular_system", "a_1^t = a_delta^t makes the system for (a_" + std::to_string(i) +
                                                 ", a_" + std::to_string(j) + ") singular and inconsistent");
      }
      if (!is_zero(p + q)) {
        at(i) = ui(i) / (p + q);
        at(j) = at(i);
      } else if (!is_zero(p)) {
        at(i) = ui(i) / p;
        at(j) = ring_zero<F>();
      } else {
        at(i) = ring_zero<F>();
        at(j) = ui(i) / q;
      }
      continue;
    }
    at(i) = (s * ui(i) - q * ui(j)) / det;
    at(j) = (p * ui(j) - r * ui(i)) / det;
  }
  for (int i = 1; i <= delta; ++i) {
    const auto e = static_cast<unsigned long>(t - i);
    const F v = power(at(1), e) * at(i) + power(at(delta), e) * at(t - i);
    if (!(v == ui(i))) return std::nullopt;
  }
  return a;
}

bool rational_tiebreak(const Rational& x, const Rational& y) {
  if (x.sign() != y.sign()) return x.sign() < y.sign();
  return x.abs() < y.abs();
}

std::vector<Rational> rational_quadratic_roots(const UniPoly<Rational>& q) {
  std::vector<Rational> roots;
  const Rational a = q.coeff(2);
  const Rational b = q.coeff(1);
  const Rational c = q.coeff(0);
  const Rational disc = b * b - Rational(4) * a * c;
  if (disc.sign() < 0) return roots;
  auto s = disc.root(2);
  if (!s) return roots;
  roots.push_back((-b - *s) / (Rational(2) * a));
  if (!s->is_zero()) roots.push_back((-b + *s) / (Rational(2) * a));
  std::sort(roots.begin(), roots.end(), rational_tiebreak);
  return roots;
}

void require_nonzero(const std::vector<Rational>& u) {
  if (std::all_of(u.begin(), u.end(), [](const Rational& x) { return x.is_zero(); })) {
    throw DomainError("zero_dihedral_invariants",
                      "u = 0 (a_1 = a_delta = 0): this sub-family needs different invariants");
  }
}

}  // namespace

Reconstruction reconstruct_from_u(const std::vector<Rational>& u, int kase, int n, int g) {
  const int t = cyclic_t(kase, n, g);
  if (static_cast<int>(u.size()) != t - 1) {
    throw DomainError("constraint_violation", "expected " + std::to_string(t - 1) + " dihedral invariants");
  }
  if (t < 2) throw DomainError("constraint_violation", "delta >= 1");
  require_nonzero(u);
  Reconstruction out;
  const UniPoly<Rational> quad = reconstruction_quadratic(u, t);
  const auto zs = rational_quadratic_roots(quad);
  if (zs.empty()) {
    out.obstruction = quad;
    out.obstruction_variable = "z";
    return out;
  }
  const Rational& ud = u.back();
  for (const Rational& z : zs) {
    std::optional<Rational> a1, ad;
    if (z.is_zero()) {
      ad = Rational(0);
      a1 = u.front().root(static_cast<unsigned long>(t));
      if (!a1) {
        if (!out.obstruction) {
          out.obstruction = UniPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(t)) - UniPoly<Rational>(u.front());
          out.obstruction_variable = "a1";
        }
        continue;
      }
    } else {
      ad = z.root(static_cast<unsigned long>(t));
      if (!ad) {
        if (!out.obstruction) {
          out.obstruction = UniPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(t)) - UniPoly<Rational>(z);
          out.obstruction_variable = "a_delta";
        }
        continue;
      }
      a1 = ud / (Rational(2) * *ad);
    }
    if (auto a = complete_coefficients<Rational>(u, t, *a1, *ad)) {
      out.form = CyclicNormalForm<Rational>{kase, n, g, std::move(*a)};
      out.obstruction.reset();
      out.obstruction_variable.clear();
      return out;
    }
  }
  if (!out.obstruction) throw DomainError("off_locus", "no normal form reproduces these dihedral invariants");
  return out;
}

std::vector<CyclicNormalForm<Cyclo>> dihedral_fiber(const std::vector<Rational>& u, int kase, int n, int g) {
  const int t = cyclic_t(kase, n, g);
  if (12 % t != 0) {
    throw DomainError("unrepresentable_root_of_unity", "t = " + std::to_string(t) + " does not divide 12");
  }
  if (static_cast<int>(u.size()) != t - 1) {
    throw DomainError("constraint_violation", "expected " + std::to_string(t - 1) + " dihedral invariants");
  }
  require_nonzero(u);
  std::vector<Cyclo> uc(u.begin(), u.end());
  const auto roots = Cyclo::roots_of_unity(static_cast<unsigned>(t));
  std::vector<CyclicNormalForm<Cyclo>> fiber;
  auto add = [&](const Cyclo& a1, const Cyclo& ad) {
    auto a = complete_coefficients<Cyclo>(uc, t, a1, ad);
    if (!a) return;
    CyclicNormalForm<Cyclo> nf{kase, n, g, std::move(*a)};
    if (std::find(fiber.begin(), fiber.end(), nf) == fiber.end()) fiber.push_back(std::move(nf));
  };
  for (const Rational& z : rational_quadratic_roots(reconstruction_quadratic(u, t))) {
    if (z.is_zero()) {
      const auto r = u.front().root(static_cast<unsigned long>(t));
      if (!r) continue;
      for (const Cyclo& zeta : roots) add(zeta * *r, Cyclo(0));
      continue;
    }
    const auto r = z.root(static_cast<unsigned long>(t));
    if (!r) continue;
    for (const Cyclo& zeta : roots) {
      const Cyclo ad = zeta * *r;
      add(Cyclo(u.back()) / (Cyclo(2) * ad), ad);
    }
  }
  return fiber;
}

Table1Row table1_catalogue(const std::string& group, int n, int g) {
  auto repeated = [](std::vector<std::string> head, const std::string& tail, int count) {
    for (int k = 0; k < count; ++k) head.push_back(tail);
    return head;
  };
  auto violation = [&](const std::string& what) {
    return DomainError("constraint_violation", what + " (group " + group + ", n=" + std::to_string(n) +
                                                   ", g=" + std::to_string(g) + ")");
  };
  if (g < 2) throw violation("g >= 2");
  const std::string ns = std::to_string(n);
  if (group == "Z2xZn" || group == "Z2n") {
    if (n < 2) throw violation("n >= 2");
    int row = 0;
    int delta = 0;
    if (group == "Z2xZn") {
      if ((2 * g + 2) % n != 0) throw violation("n | 2g+2");
      row = 1, delta = (2 * g + 2) / n - 1;
    } else if ((2 * g + 1) % n == 0) {
      row = 2, delta = (2 * g + 1) / n - 1;
    } else if ((2 * g) % n == 0) {
      row = 3, delta = 2 * g / n - 1;
    } else {
      throw violation("n | 2g+1 or n | 2g");
    }
    if (row != 2 && (delta == 0 || delta == 1)) throw violation("delta != 0, 1");
    const std::string two = "2^" + ns;
    std::vector<std::string> head;
    if (row == 1) head = {ns + "^2", ns + "^2"};
    if (row == 2) head = {ns + "^2", std::to_string(2 * n)};
    if (row == 3) head = {std::to_string(2 * n), std::to_string(2 * n)};
    return Table1Row{row,
                     row == 1 ? "Z2xZ" + ns : "Z" + std::to_string(2 * n),
                     "Z" + ns,
                     delta,
                     repeated(head, two, delta + 1),
                     row == 1 ? 3 : 1};
  }
  if (group == "Z2xA4") {
    int row = 0;
    int delta = 0;
    std::vector<std::string> head;
    switch (g % 6) {
      case 5: row = 4, delta = (g + 1) / 6, head = {"3^8", "3^8"}; break;
      case 1: row = 5, delta = (g - 1) / 6, head = {"3^8", "6^4"}; break;
      case 3: row = 6, delta = (g - 3) / 6, head = {"6^4", "6^4"}; break;
      default: throw violation("g = -1, 1, 3 mod 6");
    }
    if (row == 6 && delta == 0) throw violation("delta != 0");
    return Table1Row{row, "Z2xA4", "A4", delta, repeated(head, "2^12", delta + 1), 7};
  }
  if (group == "SL2(3)") {
    int row = 0;
    int delta = 0;
    std::vector<std::string> head;
    switch (g % 6) {
      case 2: row = 7, delta = (g - 2) / 6, head = {"4^6", "3^8", "3^8"}; break;
      case 4: row = 8, delta = (g - 4) / 6, head = {"4^6", "3^8", "6^4"}; break;
      case 0: row = 9, delta = (g - 6) / 6, head = {"4^6", "6^4", "6^4"}; break;
      default: throw violation("g = 2, 4, 0 mod 6");
    }
    if ((row == 7 || row == 9) && delta == 0) throw violation("delta != 0");
    return Table1Row{row, "SL2(3)", "A4", delta, repeated(head, "2^12", delta), 1};
  }
  throw DomainError("constraint_violation", "unknown group tag '" + group + "'");
}

}  // namespace hyperinv
