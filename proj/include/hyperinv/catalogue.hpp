#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperinv/binary_form.hpp"
#include "hyperinv/cyclo.hpp"
#include "hyperinv/ratfunc.hpp"

namespace hyperinv {

enum class InvariantName { I2, I3, I4, I4p, I6, I6p, I6s, I12, I6star, I12ast };
inline constexpr std::array<InvariantName, 10> kInvariantNames{
    InvariantName::I2,  InvariantName::I3,  InvariantName::I4,  InvariantName::I4p,    InvariantName::I6,
    InvariantName::I6p, InvariantName::I6s, InvariantName::I12, InvariantName::I6star, InvariantName::I12ast};

/// JSON key of an invariant ("I6s" is I_6^*, serialized as "I6star_ast").
std::string_view invariant_key(InvariantName n);
std::optional<InvariantName> invariant_from_key(std::string_view key);

enum class AbsoluteName { i1, i2, i3, j1, j2, s1, s2, v1, v2, v3, v4, v5 };
inline constexpr std::array<AbsoluteName, 12> kAbsoluteNames{
    AbsoluteName::i1, AbsoluteName::i2, AbsoluteName::i3, AbsoluteName::j1, AbsoluteName::j2, AbsoluteName::s1,
    AbsoluteName::s2, AbsoluteName::v1, AbsoluteName::v2, AbsoluteName::v3, AbsoluteName::v4, AbsoluteName::v5};

std::string_view absolute_key(AbsoluteName n);
std::optional<AbsoluteName> absolute_from_key(std::string_view key);

/// An absolute invariant as a ratio of products of invariant powers.
struct AbsoluteRecipe {
  std::vector<std::pair<InvariantName, int>> num;
  std::vector<std::pair<InvariantName, int>> den;
};
const AbsoluteRecipe& absolute_recipe(AbsoluteName n);

/// Whether the catalogue defines invariant `n` for forms of degree d.
bool invariant_defined(InvariantName n, int d);

/// Field in which ratios of invariants with values in R live.
template <class R>
struct FractionField {
  using type = R;
};
template <CoefficientField F>
struct FractionField<UniPoly<F>> {
  using type = RatFunc<F>;
};
template <class R>
using FractionFieldOf = typename FractionField<R>::type;

template <CoefficientRing R>
using InvariantSet = std::array<std::optional<R>, kInvariantNames.size()>;

/// Lazily computes and caches the covariants and invariants built from a form
/// F of even degree d >= 6. Not thread safe; use one instance per thread.
template <CoefficientRing R>
class CovariantCatalogue {
 public:
  explicit CovariantCatalogue(BinaryForm<R> f) : f_(Covariant<R>::of(std::move(f))) {
    const int d = degree();
    if (d < 6 || d % 2 != 0) {
      throw DomainError("unsupported_degree",
                        "unsupported degree " + std::to_string(d) + ": the form degree must be even and >= 6");
    }
  }

  int degree() const { return f_.order_m; }
  const Covariant<R>& form() const { return f_; }

  /// J_{4j} = (F, F)^{d-2j}, defined for 1 <= j and 4j <= 2d.
  const Covariant<R>& J(int order) {
    const int d = degree();
    if (order <= 0 || order % 4 != 0 || order > 2 * d) {
      throw DomainError("undefined_covariant", "J_" + std::to_string(order) + " is not defined for degree " +
                                                   std::to_string(d));
    }
    return memo(order, [&] { return transvect(f_, f_, d - order / 2); });
  }

  /// (F, J_k)^k.
  const Covariant<R>& FJ(int k) {
    return memo(1000 + k, [&] { return transvect(f_, J(k), k); });
  }

  /// M = ((F, J_4)^4, (F, J_8)^8)^{d-10}; needs d >= 10.
  const Covariant<R>& M() {
    require(degree() >= 10, "M");
    return memo(2000, [&] { return transvect(FJ(4), FJ(8), degree() - 10); });
  }
  /// S = (J_12, J_16)^12; degree 22 only.
  const Covariant<R>& S() {
    require(degree() == 22, "S");
    return memo(2001, [&] { return transvect(J(12), J(16), 12); });
  }

  std::optional<R> invariant(InvariantName n) {
    const int d = degree();
    if (!invariant_defined(n, d)) return std::nullopt;
    auto it = values_.find(n);
    if (it != values_.end()) return it->second;
    R v = compute(n);
    values_.emplace(n, v);
    return v;
  }

  InvariantSet<R> invariant_set() {
    InvariantSet<R> out;
    for (std::size_t k = 0; k < kInvariantNames.size(); ++k) out[k] = invariant(kInvariantNames[k]);
    return out;
  }

 private:
  template <class Fn>
  const Covariant<R>& memo(int key, Fn&& build) {
    auto it = covariants_.find(key);
    if (it == covariants_.end()) it = covariants_.emplace(key, build()).first;
    return it->second;
  }

  void require(bool ok, const char* what) const {
    if (!ok) {
      throw DomainError("undefined_covariant",
                        std::string(what) + " is not defined for degree " + std::to_string(degree()));
    }
  }

  R self_transvect_value(const Covariant<R>& c, int r) { return transvect(c, c, r).value(); }

  R compute(InvariantName n) {
    const int d = degree();
    switch (n) {
      case InvariantName::I2: return self_transvect_value(f_, d);
      case InvariantName::I3: return transvect(f_, J(d), d).value();
      case InvariantName::I4: return self_transvect_value(J(4), 4);
      case InvariantName::I4p: return self_transvect_value(J(8), 8);
      case InvariantName::I6: return self_transvect_value(FJ(4), d - 4);
      case InvariantName::I6p: return self_transvect_value(FJ(8), d - 8);
      case InvariantName::I6s: return self_transvect_value(FJ(12), d - 12);
      case InvariantName::I12: return self_transvect_value(M(), 8);
      case InvariantName::I6star: return self_transvect_value(FJ(16), d - 16);
      case InvariantName::I12ast: return self_transvect_value(transvect(J(16), S(), 4), 12);
    }
    throw DomainError("undefined_invariant", "unknown invariant");
  }

  Covariant<R> f_;
  std::map<int, Covariant<R>> covariants_;
  std::map<InvariantName, R> values_;
};

template <CoefficientRing R>
InvariantSet<R> covariant_catalogue(const BinaryForm<R>& f) {
  return CovariantCatalogue<R>(f).invariant_set();
}

template <class K>
using AbsoluteSet = std::array<std::optional<K>, kAbsoluteNames.size()>;

/// One absolute invariant; nullopt when an ingredient is undefined or the
/// denominator vanishes.
template <CoefficientRing R>
std::optional<FractionFieldOf<R>> absolute_invariant(CovariantCatalogue<R>& cat, AbsoluteName name) {
  using K = FractionFieldOf<R>;
  const AbsoluteRecipe& recipe = absolute_recipe(name);
  auto product = [&](const std::vector<std::pair<InvariantName, int>>& factors) -> std::optional<R> {
    R acc = ring_one<R>();
    for (const auto& [inv, e] : factors) {
      auto v = cat.invariant(inv);
      if (!v) return std::nullopt;
      acc = acc * power(*v, static_cast<unsigned long>(e));
    }
    return acc;
  };
  // Test the denominator before touching the numerator so undefined ratios stay cheap.
  auto den = product(recipe.den);
  if (!den || is_zero(*den)) return std::nullopt;
  auto num = product(recipe.num);
  if (!num) return std::nullopt;
  return K(*num) / K(*den);
}

template <CoefficientRing R>
AbsoluteSet<FractionFieldOf<R>> absolute_invariants(CovariantCatalogue<R>& cat) {
  AbsoluteSet<FractionFieldOf<R>> out;
  for (std::size_t k = 0; k < kAbsoluteNames.size(); ++k) out[k] = absolute_invariant(cat, kAbsoluteNames[k]);
  return out;
}

/// Point of the moduli locus: one or two exact coordinates plus the branch of
/// the piecewise definition that produced them.
template <class K>
struct ModuliPoint {
  int genus = 0;
  std::string case_tag;
  std::vector<AbsoluteName> names;
  std::vector<K> values;
};

bool classifiable_genus(int g);

template <CoefficientRing R>
ModuliPoint<FractionFieldOf<R>> classify_point(CovariantCatalogue<R>& cat, int g) {
  using K = FractionFieldOf<R>;
  if (!classifiable_genus(g)) {
    throw DomainError("unsupported_genus", "classification covers g in {4,5,7,8,9,10,12}, got " + std::to_string(g));
  }
  if (cat.degree() != 2 * g + 2) {
    throw DomainError("degree_mismatch", "genus " + std::to_string(g) + " needs a form of degree " +
                                             std::to_string(2 * g + 2));
  }
  const std::string gs = "g=" + std::to_string(g);
  auto nonzero = [&](InvariantName n) {
    auto v = cat.invariant(n);
    return v && !is_zero(*v);
  };
  auto point = [&](std::string tag, std::vector<AbsoluteName> names) {
    ModuliPoint<K> p{g, std::move(tag), std::move(names), {}};
    for (AbsoluteName a : p.names) {
      auto v = absolute_invariant(cat, a);
      if (!v) {
        throw DomainError("undefined_invariant", "branch " + p.case_tag + ": " + std::string(absolute_key(a)) +
                                                     " is undefined for this form");
      }
      p.values.push_back(std::move(*v));
    }
    return p;
  };
  using A = AbsoluteName;
  switch (g) {
    case 4: return point(gs, {A::v1});
    case 5:
    case 9:
      if (nonzero(InvariantName::I2)) return point(gs + ", I2!=0", {A::i1, A::i2});
      return point(gs + ", I2=0", {A::v2});
    case 7:
      if (nonzero(InvariantName::I3)) return point(gs + ", I3!=0", {A::j1, A::j2});
      return point(gs + ", I3=0", {A::v3});
    case 8:
    case 12:
      if (nonzero(InvariantName::I2)) return point(gs + ", I2!=0", {A::i1, A::i3});
      return point(gs + ", I2=0", {A::v4});
    default:
      if (nonzero(InvariantName::I12)) return point(gs + ", I12!=0", {A::s2, A::s1});
      return point(gs + ", I12=0", {A::v5});
  }
}

template <CoefficientRing R>
ModuliPoint<FractionFieldOf<R>> classify_point(const BinaryForm<R>& f, int g) {
  CovariantCatalogue<R> cat(f);
  return classify_point(cat, g);
}

/// Invariants that must vanish on the A4 locus of genus g.
const std::vector<InvariantName>& vanishing_list(int g);

template <CoefficientRing R>
std::vector<std::pair<InvariantName, bool>> vanishing_profile(CovariantCatalogue<R>& cat, int g) {
  std::vector<std::pair<InvariantName, bool>> out;
  for (InvariantName n : vanishing_list(g)) {
    auto v = cat.invariant(n);
    if (!v) {
      throw DomainError("undefined_invariant", std::string(invariant_key(n)) + " is undefined for degree " +
                                                   std::to_string(cat.degree()));
    }
    out.emplace_back(n, is_zero(*v));
  }
  return out;
}

template <CoefficientRing R>
std::vector<std::pair<InvariantName, bool>> vanishing_profile(const BinaryForm<R>& f, int g) {
  CovariantCatalogue<R> cat(f);
  return vanishing_profile(cat, g);
}

}  // namespace hyperinv
