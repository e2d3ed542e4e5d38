// One PASS/FAIL line per acceptance criterion. Exact comparisons throughout.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace testsupport;

namespace {

struct Verdict {
  bool passed = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [fail: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.passed = false;
    v.detail << " [exception: " << e.what() << "]";
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > limit_seconds) {
    v.passed = false;
    v.detail << " [over the " << limit_seconds << " s budget]";
  }
  if (!v.passed) ++failures;
  std::cout << "criterion " << id << ": " << (v.passed ? "PASS" : "FAIL") << "  " << title << " (" << seconds
            << " s)" << v.detail.str() << std::endl;
}

// ---------------------------------------------------------------------------

void special_constants(Verdict& v) {
  struct Case {
    int g;
    Rational mu;
    Rational expected;
  };
  const std::vector<Case> cases{
      {4, Rational(0), Rational(1764, 25)},
      {5, Rational(-924, 5), Rational(3).pow(7) * Rational(5).pow(3) / (Rational(2).pow(5) * Rational(7).pow(2))},
      {8, Rational(-884, 7),
       Rational(2).pow(3) * Rational(3).pow(11) * Rational(101).pow(4) /
           (Rational(5).pow(3) * Rational(7).pow(4) * Rational(13).pow(6))},
      {9, Rational(-836, 3), -(Rational(2).pow(9) * Rational(5) * Rational(11).pow(2)) / Rational(3).pow(7)},
      {12, Rational(-1700, 11),
       Rational(2) * Rational(3).pow(3) * Rational(5) * Rational(41).pow(4) /
           (Rational(7).pow(4) * Rational(11).pow(2) * Rational(17).pow(2))},
  };
  for (const Case& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    std::string got;
    bool ok = false;
    try {
      const auto p = classify_point(rational_model<Rational>(c.g, c.mu), c.g);
      got = p.values.front().to_string() + " on " + p.case_tag;
      ok = p.values.size() == 1 && p.values.front() == c.expected;
    } catch (const DomainError& e) {
      got = std::string(e.kind()) + ": " + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(s < 120, "g=" + std::to_string(c.g) + " over 120 s");
    v.detail << " g=" << c.g << (ok ? " ok" : " MISMATCH") << " (expected " << c.expected << ", got " << got << ")";
    v.require(ok, "g=" + std::to_string(c.g));
  }
  // The degree 12 model with the printed octic does not even reach the special branch.
  try {
    const auto printed = classify_point(rational_model<Rational>(12, Rational(-1700, 11), ModelVariant::Printed), 12);
    v.detail << "; printed X12 octic gives " << printed.values.front() << " on " << printed.case_tag;
  } catch (const DomainError& e) {
    v.detail << "; printed X12 octic: " << e.kind();
  }
}

void symbolic_identity(Verdict& v) {
  const LocusTable transcribed = transcribed_locus_table();
  for (int g : {5, 7, 8, 9, 10, 12}) {
    const auto start = std::chrono::steady_clock::now();
    const LocusEntry e = recompute_entry(transcribed.entry(g));
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(s < 600, "g=" + std::to_string(g) + " over 10 min");
    std::vector<std::string> differs;
    for (const auto& c : e.components) {
      if (c.status != kVerified) differs.emplace_back(absolute_key(c.name));
    }
    v.detail << " g=" << g << ":";
    if (differs.empty()) v.detail << "match";
    for (const auto& d : differs) v.detail << d << "-differs ";
    if (g <= 9) {
      v.require(differs.empty(), "g=" + std::to_string(g) + " does not match the printed parametrization");
    } else if (g == 12) {
      // The one documented suspect: the denominator of the second component.
      v.require(differs == std::vector<std::string>{"i3"}, "g=12 mismatch outside i3");
      const bool special_ok = !e.specials.empty() && e.specials.front().status == kVerified;
      v.require(special_ok, "g=12 recomputed form fails the special constant");
    } else {
      v.require(differs.empty(), "g=10 mismatch");
    }
  }
}

void l5_locus(Verdict& v) {
  const LocusTable table = recompute_locus_table(transcribed_locus_table());
  const auto r = l5_singularity_report(table);
  v.require(r.residual_vanishes, "residual nonzero in Q(mu)");
  v.require(r.known_point_singular, "(0, 1/84) not singular");
  v.require(r.gcd_roots_map_to_known_point, "another singular point");
  v.require(r.infinity_smooth, "singular at mu = infinity");
  v.detail << " gcd of partials: " << r.partials_gcd;
}

void dihedral_example(Verdict& v) {
  const QPoly lambda = QPoly::variable();
  const QPoly m33(Rational(-33));
  const auto nf = make_normal_form<QPoly>(1, 2, 5, {-lambda, m33, lambda * Rational(2), m33, -lambda});
  const auto u = dihedral_invariants(nf);
  const std::vector<QPoly> expected{QPoly::monomial(Rational(2), 6), QPoly::monomial(Rational(-66), 4),
                                    QPoly::monomial(Rational(-4), 4), QPoly::monomial(Rational(-66), 2),
                                    QPoly::monomial(Rational(2), 2)};
  v.require(u == expected, "dihedral invariants");
  v.require(extra_involution_condition(1, 2, u), "extra involution condition");
}

void vanishing(Verdict& v) {
  for (int g : {4, 5, 7, 8, 9, 10, 12}) {
    for (const auto& [name, zero] : vanishing_profile(rational_model<QPoly>(g, QPoly::variable()), g)) {
      v.require(zero, "g=" + std::to_string(g) + " " + std::string(invariant_key(name)) + " nonzero");
    }
  }
}

// ---------------------------------------------------------------------------
// Property suites

void properties(Verdict& v) {
  Gen gen(kSeed + 100);
  using QCov = Covariant<Rational>;
  int count = 0;

  count = 0;
  for (int k = 0; k < 50; ++k, ++count) {
    const auto f = QCov::of(gen.form(static_cast<int>(gen.integer(1, 7))));
    const auto g = QCov::of(gen.form(static_cast<int>(gen.integer(1, 7))));
    v.require(transvect(f, g, 0).form == f.form * g.form, "r = 0 product law");
  }
  v.detail << " product law x" << count << ";";

  count = 0;
  for (int k = 0; k < 50; ++k, ++count) {
    const auto f = QCov::of(gen.form(static_cast<int>(gen.integer(2, 8))));
    const auto g = QCov::of(gen.form(static_cast<int>(gen.integer(2, 8))));
    const int r = static_cast<int>(gen.integer(0, std::min(f.order_m, g.order_m)));
    const auto fg = transvect(f, g, r).form;
    const auto gf = transvect(g, f, r).form;
    v.require(fg == (r % 2 == 0 ? gf : -gf), "transvectant symmetry");
  }
  v.detail << " symmetry x" << count << ";";

  for (int d : {8, 12}) {
    int pairs = 0;
    for (int k = 0; k < 50; ++k, ++pairs) {
      const auto f = gen.form(d, 3);
      const auto m = gen.invertible_matrix(2);
      CovariantCatalogue<Rational> base(f);
      CovariantCatalogue<Rational> moved(gl2_act(m, f));
      const std::vector<std::pair<InvariantName, long>> laws{
          {InvariantName::I2, 2}, {InvariantName::I3, 3}, {InvariantName::I4, 4}, {InvariantName::I4p, 4}};
      for (const auto& [name, p] : laws) {
        if (!invariant_defined(name, d)) continue;
        v.require(*moved.invariant(name) == m.det().pow(p * d / 2) * *base.invariant(name),
                  "index law " + std::string(invariant_key(name)) + " d=" + std::to_string(d));
      }
    }
    v.detail << " index law d=" << d << " x" << pairs << ";";
  }

  count = 0;
  for (int k = 0; k < 50; ++k, ++count) {
    const auto f = gen.dense_form(gen.coin() ? 8 : 10);
    const auto m = gen.invertible_matrix(2);
    const Rational c = gen.nonzero_rational();
    CovariantCatalogue<Rational> base(f);
    CovariantCatalogue<Rational> moved(gl2_act(m, f).scaled(c));
    const auto a = absolute_invariants(base);
    const auto b = absolute_invariants(moved);
    for (std::size_t n = 0; n < a.size(); ++n) {
      v.require(a[n].has_value() == b[n].has_value() && (!a[n] || *a[n] == *b[n]), "absolute invariance");
    }
  }
  v.detail << " absolute invariance x" << count << ";";

  count = 0;
  const std::vector<std::array<int, 3>> shapes{{1, 2, 2}, {1, 2, 5}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4},
                                               {3, 2, 3}, {3, 3, 6}, {1, 2, 7}, {3, 4, 8}, {1, 4, 7}};
  for (int k = 0; k < 50; ++k, ++count) {
    const auto& s = shapes[static_cast<std::size_t>(k) % shapes.size()];
    const int t = cyclic_t(s[0], s[1], s[2]);
    std::vector<Cyclo> a;
    for (int i = 1; i < t; ++i) a.emplace_back(gen.nonzero_rational(5, 3));
    const auto nf = make_normal_form<Cyclo>(s[0], s[1], s[2], a);
    const auto u = dihedral_invariants(nf);
    bool ok = dihedral_invariants(h_action_tau2(nf)) == u;
    for (const Cyclo& eps : representable_roots_of_unity(s[1] * t)) ok = ok && dihedral_invariants(h_action_tau1(nf, eps)) == u;
    v.require(ok, "H-invariance");
  }
  v.detail << " H-invariance x" << count << ";";

  count = 0;
  while (count < 50) {
    const auto& s = shapes[static_cast<std::size_t>(count) % shapes.size()];
    const int t = cyclic_t(s[0], s[1], s[2]);
    std::vector<Rational> a;
    for (int i = 1; i < t; ++i) a.push_back(gen.nonzero_rational(5, 3));
    if (a.front().pow(t) == a.back().pow(t)) continue;
    const auto u = dihedral_invariants(make_normal_form<Rational>(s[0], s[1], s[2], a));
    const auto r = reconstruct_from_u(u, s[0], s[1], s[2]);
    v.require(r.form && dihedral_invariants(*r.form) == u, "reconstruction round trip");
    ++count;
  }
  v.detail << " reconstruction x" << count << ";";

  count = 0;
  while (count < 20) {
    const Rational t = gen.nonzero_rational(12, 7);
    const auto lambda = klein_phi(t);
    if (!lambda) continue;
    const BinaryForm<Rational> g = build_G(*lambda);
    const BinaryForm<Cyclo> gc(12, std::vector<Cyclo>(g.coefficients().begin(), g.coefficients().end()));
    v.require(a4_orbit_polynomial(Cyclo(t)) == gc, "orbit polynomial");
    ++count;
  }
  v.detail << " orbit identity x" << count << ";";

  const LocusTable table = recompute_locus_table(transcribed_locus_table());
  for (int g : {5, 7, 8, 9, 10, 12}) {
    count = 0;
    while (count < 20) {
      const Rational mu = gen.nonzero_rational(60, 9);
      const LocusValue value = locus_parametrization(table, g, mu);
      if (value.branch != "generic") continue;
      const MuRecovery r = recover_mu(table, g, *value.point);
      v.require(r.mu == std::vector<Rational>{mu}, "recover_mu g=" + std::to_string(g) + " at " + mu.to_string());
      ++count;
    }
  }
  v.detail << " recover_mu x20 per genus";
}

void injectivity_substitute(Verdict& v) {
  // Injectivity of the moduli map on isomorphism classes and irreducibility of
  // the Hurwitz spaces are not checkable here. What is checked: along each
  // family, distinct generic parameters give distinct points (the recovered
  // parameter set is a singleton), which is the round-trip suite above.
  Gen gen(kSeed + 200);
  const LocusTable table = recompute_locus_table(transcribed_locus_table());
  for (int g : {5, 7, 8, 9, 10, 12}) {
    int count = 0;
    while (count < 10) {
      const Rational mu = gen.nonzero_rational(60, 9);
      const LocusValue value = locus_parametrization(table, g, mu);
      if (value.branch != "generic") continue;
      v.require(recover_mu(table, g, *value.point).mu.size() == 1, "non-injective at g=" + std::to_string(g));
      ++count;
    }
  }
  v.detail << " generic fibres are single parameters; Hurwitz space irreducibility not attempted";
}

}  // namespace

int main() {
  std::cout.precision(3);
  criterion(1, "I4 of G_lambda is the zero polynomial in Q[lambda]", 5, [](Verdict& v) {
    CovariantCatalogue<QPoly> cat(build_G(QPoly::variable()));
    v.require(cat.invariant(InvariantName::I4)->is_zero(), "I4 nonzero");
  });
  criterion(2, "special constants recomputed from the curve models", 5 * 120, special_constants);
  criterion(3, "symbolic identity of the parametrizations over Q(mu)", 6 * 600, symbolic_identity);
  criterion(4, "genus 5 locus equation and its singular point", 60, l5_locus);
  criterion(5, "dihedral invariants of the genus 5 family and the extra involution", 5, dihedral_example);
  criterion(6, "vanishing profiles hold identically in mu", 600, vanishing);
  criterion(7, "property suites", 600, properties);
  criterion(8, "injectivity substitute: generic recovery is single-valued", 600, injectivity_substitute);
  return failures == 0 ? 0 : 1;
}
