#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hyperinv/catalogue.hpp"
#include "hyperinv/cyclo.hpp"

namespace hyperinv {

using QPoly = UniPoly<Rational>;
using QFunc = RatFunc<Rational>;

/// Klein's phi(X) = (X^12 - 33X^8 - 33X^4 + 1) / (X^2 (X^4 - 1)^2); nullopt at
/// its poles 0, +-1, +-i.
template <CoefficientField F>
std::optional<F> klein_phi(const F& t) {
  const F t2 = t * t;
  const F t4 = t2 * t2;
  const F one = ring_one<F>();
  const F den = t2 * (t4 - one) * (t4 - one);
  if (is_zero(den)) return std::nullopt;
  const F num = t4 * t4 * t4 - t4 * t4 * Rational(33) - t4 * Rational(33) + one;
  return num / den;
}

/// G_lambda(X) = X^12 - lambda X^10 - 33 X^8 + 2 lambda X^6 - 33 X^4 - lambda X^2 + 1.
template <CoefficientRing R>
BinaryForm<R> build_G(const R& lambda) {
  std::vector<R> c(13, ring_zero<R>());
  c[12] = ring_one<R>();
  c[10] = -lambda;
  c[8] = R(Rational(-33));
  c[6] = lambda * Rational(2);
  c[4] = R(Rational(-33));
  c[2] = -lambda;
  c[0] = ring_one<R>();
  return BinaryForm<R>(12, std::move(c));
}

/// Distinct-root conditions on lambda: lambda^2 + 108 != 0 and lambda^2 != 108.
struct GRootConditions {
  bool plus_108_nonzero;
  bool minus_108_nonzero;
};
template <CoefficientRing R>
GRootConditions g_root_conditions(const R& lambda) {
  const R sq = lambda * lambda;
  return {!is_zero(sq + R(Rational(108))), !is_zero(sq - R(Rational(108)))};
}

/// The twelve images of t under the A4 generated by X -> -X and X -> (X-i)/(X+i).
std::vector<Cyclo> a4_orbit(const Cyclo& t);
/// prod (X - alpha) over the orbit, as a form of degree 12.
BinaryForm<Cyclo> a4_orbit_polynomial(const Cyclo& t);

/// Where the Weierstrass points meet the fibres over the branch points of phi.
struct Lemma41Branch {
  int v_cap_w = 0;
  std::string group;  // "Z2xA4" or "SL2(3)"
  int residue = 0;    // g mod 6
  int delta = 0;
};
Lemma41Branch lemma41_branch(int g);

/// Prefactor multiplying prod G_lambda_i for a given |V cap W|.
UniPoly<Cyclo> table2_prefactor(int v_cap_w);

/// prefactor * prod_i G_{lambda_i}, homogenized to degree 2g+2.
template <CoefficientRing R>
  requires std::constructible_from<R, Cyclo>
BinaryForm<R> table2_model(int g, const std::vector<R>& lambdas) {
  const Lemma41Branch b = lemma41_branch(g);
  if (static_cast<int>(lambdas.size()) != b.delta) {
    throw DomainError("constraint_violation", "genus " + std::to_string(g) + " (" + b.group + ", |V cap W| = " +
                                                  std::to_string(b.v_cap_w) + ") needs " + std::to_string(b.delta) +
                                                  " lambda values, got " + std::to_string(lambdas.size()));
  }
  std::vector<R> pre;
  const UniPoly<Cyclo> prefactor = table2_prefactor(b.v_cap_w);
  for (const Cyclo& c : prefactor.coefficients()) pre.push_back(R(c));
  UniPoly<R> poly(std::move(pre));
  for (const R& lambda : lambdas) poly = poly * build_G(lambda).dehomogenize();
  return BinaryForm<R>::from_poly(poly, 2 * g + 2);
}

/// Which reading of the curve models to use where the printed display and the
/// recomputation disagree (g = 7, 10, 12).
enum class ModelVariant { Printed, Derived };

/// M(X) = mu^3 X^12 - mu^3 X^10 - 33 mu^2 X^8 + 2 mu^2 X^6 - 33 mu X^4 - mu X^2 + 1.
template <CoefficientRing R>
UniPoly<R> model_M(const R& mu) {
  const R mu2 = mu * mu;
  const R mu3 = mu2 * mu;
  std::vector<R> c(13, ring_zero<R>());
  c[12] = mu3;
  c[10] = -mu3;
  c[8] = mu2 * Rational(-33);
  c[6] = mu2 * Rational(2);
  c[4] = mu * Rational(-33);
  c[2] = -mu;
  c[0] = ring_one<R>();
  return UniPoly<R>(std::move(c));
}

namespace detail {
template <CoefficientRing R>
UniPoly<R> poly_of(std::initializer_list<std::pair<int, R>> terms) {
  int top = 0;
  for (const auto& t : terms) top = std::max(top, t.first);
  std::vector<R> c(static_cast<std::size_t>(top + 1), ring_zero<R>());
  for (const auto& [k, v] : terms) c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)] + v;
  return UniPoly<R>(std::move(c));
}
}  // namespace detail

/// Degree-12 factor of the g = 7 and g = 10 models.
template <CoefficientRing R>
UniPoly<R> model_K(const R& mu, ModelVariant v) {
  auto q = [](long x) { return R(Rational(x)); };
  if (v == ModelVariant::Printed) {
    return detail::poly_of<R>({{12, q(27)}, {10, mu * Rational(-27)}, {8, q(297)}, {6, q(-18)}, {4, q(-99)},
                               {2, mu * Rational(3)}, {0, q(1)}});
  }
  return detail::poly_of<R>({{12, q(27)}, {10, mu * Rational(-27)}, {8, q(297)}, {6, mu * Rational(-18)},
                             {4, q(-99)}, {2, mu * Rational(-3)}, {0, q(-1)}});
}

/// Curve models over Q (or Q[mu]) for g in {4,5,7,8,9,10,12}; mu is ignored for g = 4.
template <CoefficientRing R>
BinaryForm<R> rational_model(int g, const R& mu, ModelVariant v = ModelVariant::Derived) {
  using P = UniPoly<R>;
  auto q = [](long x) { return R(Rational(x)); };
  const P X = P::variable();
  const P quad = detail::poly_of<R>({{4, q(3)}, {2, q(6)}, {0, q(-1)}});  // 3X^4 + 6X^2 - 1
  P poly;
  switch (g) {
    case 4: poly = X * detail::poly_of<R>({{4, q(3)}, {0, q(1)}}) * quad; break;
    case 5: poly = model_M(mu); break;
    case 7: poly = quad * model_K(mu, v); break;
    case 8: poly = X * detail::poly_of<R>({{4, mu}, {0, q(-1)}}) * model_M(mu); break;
    case 9: poly = detail::poly_of<R>({{8, mu * mu}, {4, mu * Rational(14)}, {0, q(1)}}) * model_M(mu); break;
    case 10: poly = X * detail::poly_of<R>({{4, q(3)}, {0, q(1)}}) * quad * model_K(mu, v); break;
    case 12: {
      const P octic = v == ModelVariant::Printed ? detail::poly_of<R>({{8, mu * mu}, {1, mu}, {0, q(1)}})
                                                 : detail::poly_of<R>({{8, mu * mu}, {4, mu * Rational(14)}, {0, q(1)}});
      poly = X * detail::poly_of<R>({{4, mu}, {0, q(-1)}}) * octic * model_M(mu);
      break;
    }
    default:
      throw DomainError("unsupported_genus", "no curve model for genus " + std::to_string(g));
  }
  return BinaryForm<R>::from_poly(poly, 2 * g + 2);
}

/// Agreement of a transcribed entry with its recomputation.
inline constexpr const char* kVerified = "verified";
inline constexpr const char* kRecomputedDiffers = "recomputed-differs";
inline constexpr const char* kIncompleteInPaper = "incomplete-in-paper";
inline constexpr const char* kNotRecomputable = "not-recomputable";

struct LocusComponent {
  AbsoluteName name;
  QFunc transcribed;
  std::optional<QFunc> recomputed;
  std::string status;
  const QFunc& active() const { return recomputed ? *recomputed : transcribed; }
};

/// Value taken at a parameter excluded from the generic branch.
struct LocusSpecial {
  Rational mu;
  AbsoluteName name;
  Rational transcribed;
  std::optional<Rational> recomputed;
  std::string status;
  const Rational& active() const { return recomputed ? *recomputed : transcribed; }
};

/// A branch given by a condition on mu (roots not necessarily rational). The
/// point is either a relation P(p) = 0 or a rational function of mu.
struct LocusDegenerate {
  AbsoluteName name;
  QPoly condition_transcribed;
  std::optional<QPoly> condition_recomputed;
  std::string condition_status;
  std::optional<QPoly> relation_transcribed;
  std::optional<QPoly> relation_recomputed;
  std::optional<QFunc> value_recomputed;
  std::string text;
  std::string status;
  const QPoly& condition() const { return condition_recomputed ? *condition_recomputed : condition_transcribed; }
};

struct LocusEntry {
  int genus = 0;
  std::vector<LocusComponent> components;
  std::optional<Rational> constant;  // the zero-dimensional locus of genus 4
  std::string constant_status;
  std::vector<LocusSpecial> specials;
  std::vector<LocusDegenerate> degenerate;
};

struct LocusTable {
  std::string version;
  std::vector<LocusEntry> entries;
  const LocusEntry& entry(int g) const;
};

/// The parametrizations exactly as printed, before any recomputation.
LocusTable transcribed_locus_table();

/// Recomputes every entry from the curve models and records the agreement.
/// Symbolic over Q(mu); g = 10 and g = 12 dominate the cost.
LocusEntry recompute_entry(const LocusEntry& transcribed);
LocusTable recompute_locus_table(const LocusTable& transcribed);

/// Characteristic polynomial of multiplication by f in Q[x]/(m).
QPoly charpoly_mod(const QPoly& f, const QPoly& m);
/// Inverse of f modulo m; throws if they share a factor.
QPoly inverse_mod(const QPoly& f, const QPoly& m);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const QPoly& p);

/// Either a moduli point or a polynomial relation its coordinate satisfies.
struct LocusValue {
  std::optional<ModuliPoint<Rational>> point;
  std::optional<QPoly> relation;
  std::string branch;
  /// The printed value when it differs from the active one.
  std::optional<std::vector<Rational>> transcribed;
};

LocusValue locus_parametrization(const LocusTable& table, int g, const Rational& mu);

/// The generic branch as functions of mu.
ModuliPoint<QFunc> locus_functions(const LocusTable& table, int g);

struct MuRecovery {
  std::vector<Rational> mu;
  std::optional<QPoly> obstruction;
};

/// Parameters mu at which the locus passes through p (smallest first).
MuRecovery recover_mu(const LocusTable& table, int g, const ModuliPoint<Rational>& p);

/// 4920750 i1^3 - 28224 i2^2 - 164025 i1^2 - 136080 i1 i2 + 672 i2 + 1620 i1 - 4.
template <CoefficientRing K>
K l5_relation(const K& i1, const K& i2) {
  const K i1sq = i1 * i1;
  return i1sq * i1 * Rational(4920750) - i2 * i2 * Rational(28224) - i1sq * Rational(164025) -
         i1 * i2 * Rational(136080) + i2 * Rational(672) + i1 * Rational(1620) - K(Rational(4));
}
template <CoefficientRing K>
K l5_d_i1(const K& i1, const K& i2) {
  return i1 * i1 * Rational(14762250) - i1 * Rational(328050) - i2 * Rational(136080) + K(Rational(1620));
}
template <CoefficientRing K>
K l5_d_i2(const K& i1, const K& i2) {
  return i2 * Rational(-56448) - i1 * Rational(136080) + K(Rational(672));
}
template <CoefficientRing K>
bool l5_is_singular(const K& i1, const K& i2) {
  return is_zero(l5_relation(i1, i2)) && is_zero(l5_d_i1(i1, i2)) && is_zero(l5_d_i2(i1, i2));
}

struct LocusCheck {
  std::string name;
  bool passed = false;
  /// Nothing to compare against (the printed entry is incomplete).
  bool skipped = false;
  std::string detail;
};

/// Singular points of the genus 5 locus along its parametrization: the gcd of
/// the numerators of both partial derivatives of the locus equation, whether
/// all of its roots map to (0, 1/84), and whether the image of mu = infinity is
/// a smooth point.
struct L5SingularityReport {
  bool residual_vanishes = false;
  bool known_point_singular = false;
  QPoly partials_gcd;
  bool gcd_roots_map_to_known_point = false;
  bool infinity_smooth = false;
};
L5SingularityReport l5_singularity_report(const LocusTable& table);

/// Recomputes the locus of genus g from its curve model and compares with the
/// table: vanishing profile, symbolic identity, special values and (g = 5) the
/// locus equation.
std::vector<LocusCheck> verify_locus(const LocusTable& table, int g);

}  // namespace hyperinv
