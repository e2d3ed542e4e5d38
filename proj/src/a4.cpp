#include "hyperinv/a4.hpp"

#include <algorithm>
#include <sstream>

namespace hyperinv {

// ---------------------------------------------------------------------------
// A4 cover

std::vector<Cyclo> a4_orbit(const Cyclo& t) {
  const Cyclo i = Cyclo::i();
  const Cyclo one(1);
  auto require = [&](const Cyclo& den, const char* where) {
    if (den.is_zero()) throw DomainError("pole", std::string("orbit map ") + where + " has a pole at t");
  };
  require(t, "1/t");
  require(t + i, "(t-i)/(t+i)");
  require(t - i, "(t+i)/(t-i)");
  require(t - one, "-i(t+1)/(t-1)");
  require(t + one, "-i(t-1)/(t+1)");
  const Cyclo a = (t - i) / (t + i);
  const Cyclo b = -i * (t + one) / (t - one);
  const Cyclo c = (t + i) / (t - i);
  const Cyclo d = -i * (t - one) / (t + one);
  const Cyclo e = one / t;
  std::vector<Cyclo> orbit{t, a, b, c, d, e, -t, -a, -b, -c, -d, -e};
  for (std::size_t p = 0; p < orbit.size(); ++p) {
    for (std::size_t q = p + 1; q < orbit.size(); ++q) {
      if (orbit[p] == orbit[q]) {
        throw DomainError("orbit_collision", "orbit points " + std::to_string(p + 1) + " and " +
                                                 std::to_string(q + 1) + " coincide");
      }
    }
  }
  return orbit;
}

BinaryForm<Cyclo> a4_orbit_polynomial(const Cyclo& t) {
  UniPoly<Cyclo> p(Cyclo(1));
  for (const Cyclo& alpha : a4_orbit(t)) p = p * UniPoly<Cyclo>(std::vector<Cyclo>{-alpha, Cyclo(1)});
  return BinaryForm<Cyclo>::from_poly(p, 12);
}

Lemma41Branch lemma41_branch(int g) {
  if (g < 4 || g == 6) {
    throw DomainError("excluded_genus", "genus " + std::to_string(g) + " is excluded (g != 2, 3, 6 and g >= 4)");
  }
  const int r = g % 6;
  switch (r) {
    case 5: return {0, "Z2xA4", r, (g + 1) / 6};
    case 1: return {4, "Z2xA4", r, (g - 1) / 6};
    case 3: return {8, "Z2xA4", r, (g - 3) / 6};
    case 2: return {6, "SL2(3)", r, (g - 2) / 6};
    case 4: return {10, "SL2(3)", r, (g - 4) / 6};
    default: return {14, "SL2(3)", r, (g - 6) / 6};
  }
}

UniPoly<Cyclo> table2_prefactor(int v_cap_w) {
  using P = UniPoly<Cyclo>;
  const Cyclo two_i_sqrt3 = Cyclo::i_sqrt3() * Rational(2);
  const P t_poly(std::vector<Cyclo>{1, 0, two_i_sqrt3, 0, 1});
  const P octic(std::vector<Cyclo>{1, 0, 0, 0, 14, 0, 0, 0, 1});
  const P r_poly(std::vector<Cyclo>{0, -1, 0, 0, 0, 1});
  switch (v_cap_w) {
    case 0: return P(Cyclo(1));
    case 4: return t_poly;
    case 8: return octic;
    case 6: return r_poly;
    case 10: return r_poly * t_poly;
    case 14: return r_poly * octic;
    default:
      throw DomainError("constraint_violation", "|V cap W| must be one of 0, 4, 6, 8, 10, 14");
  }
}

// ---------------------------------------------------------------------------
// Polynomial helpers over Q

QPoly inverse_mod(const QPoly& f, const QPoly& m) {
  QPoly r0 = m, r1 = divmod(f, m).second;
  QPoly s0, s1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DomainError("not_invertible", "polynomial shares a factor with the modulus");
  return divmod(s0 * r0.leading().inverse(), m).second;
}

QPoly charpoly_mod(const QPoly& f, const QPoly& m) {
  const int k = m.degree();
  if (k < 1) throw DomainError("unsupported_degree", "modulus must have positive degree");
  using Matrix = std::vector<std::vector<Rational>>;
  Matrix a(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
  QPoly col = divmod(f, m).second;
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coeff(static_cast<std::size_t>(i));
    col = divmod(col * QPoly::variable(), m).second;
  }
  auto mul = [k](const Matrix& x, const Matrix& y) {
    Matrix z(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int l = 0; l < k; ++l) {
        const Rational& xil = x[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
        if (xil.is_zero()) continue;
        for (int j = 0; j < k; ++j)
          z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += xil * y[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
      }
    return z;
  };
  // Faddeev-LeVerrier.
  std::vector<Rational> c(static_cast<std::size_t>(k + 1));
  c[static_cast<std::size_t>(k)] = 1;
  Matrix mk(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
  for (int step = 1; step <= k; ++step) {
    Matrix next = mul(a, mk);
    for (int i = 0; i < k; ++i) next[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(k - step + 1)];
    mk = std::move(next);
    const Matrix am = mul(a, mk);
    Rational trace;
    for (int i = 0; i < k; ++i) trace += am[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    c[static_cast<std::size_t>(k - step)] = -trace / Rational(step);
  }
  return QPoly(std::move(c));
}

namespace {

int sign_changes(const std::vector<QPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return Rational(q);
}

// Rational with the smallest denominator in [a, b], a <= b.
Rational simplest_between(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 && b.sign() >= 0) return Rational(0);
  if (b.sign() < 0) return -simplest_between(-b, -a);
  const Rational fl = floor_of(a);
  if (fl == a) return a;
  if (fl + Rational(1) <= b) return fl + Rational(1);
  return fl + simplest_between((b - fl).inverse(), (a - fl).inverse());
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  QPoly q = squarefree_part(p);
  if (q.coeff(0).is_zero()) {
    roots.emplace_back(0);
    q = exact_quotient(q, QPoly::variable());
  }
  if (q.degree() == 1) {
    roots.push_back(-q.coeff(0) / q.coeff(1));
  } else if (q.degree() == 2) {
    const Rational disc = q.coeff(1) * q.coeff(1) - Rational(4) * q.coeff(0);
    if (auto s = disc.root(2)) {
      roots.push_back((-q.coeff(1) - *s) / Rational(2));
      roots.push_back((-q.coeff(1) + *s) / Rational(2));
    }
  } else if (q.degree() > 2) {
    // Denominators of rational roots divide the leading coefficient of the
    // primitive integer multiple, so isolating intervals narrower than
    // 1/lead^2 contain at most one candidate: the simplest rational inside.
    mpz_class den_lcm = 1;
    for (const auto& c : q.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    const Rational lead = Rational(den_lcm).abs();
    const Rational width = (lead * lead).inverse();
    Rational bound(1);
    for (const auto& c : q.coefficients()) bound = std::max(bound, c.abs() + Rational(1));
    std::vector<QPoly> sturm{q, q.derivative()};
    while (sturm.back().degree() > 0) {
      QPoly r = -divmod(sturm[sturm.size() - 2], sturm.back()).second;
      if (r.is_zero()) break;
      sturm.push_back(std::move(r));
    }
    std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      const int count = sign_changes(sturm, a) - sign_changes(sturm, b);
      if (count == 0) continue;
      if (count == 1 && b - a < width) {
        const Rational cand = simplest_between(a, b);
        if (q(cand).is_zero()) roots.push_back(cand);
        continue;
      }
      const Rational mid = (a + b) / Rational(2);
      stack.emplace_back(a, mid);
      stack.emplace_back(mid, b);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Transcribed parametrizations

namespace {

QPoly qp(std::initializer_list<const char*> low_first) {
  std::vector<Rational> c;
  for (const char* s : low_first) c.push_back(Rational::parse(s));
  return QPoly(std::move(c));
}

QPoly pw(const QPoly& p, unsigned long e) { return power(p, e); }

Rational rp(const char* s) { return Rational::parse(s); }

QFunc ratio(const Rational& c, const QPoly& num, const QPoly& den) { return QFunc(num * c, den); }

LocusEntry transcribed_entry(int g) {
  using A = AbsoluteName;
  const QPoly mu = QPoly::variable();
  LocusEntry e;
  e.genus = g;
  switch (g) {
    case 4:
      e.constant = Rational(1764, 25);
      break;
    case 5: {
      const QPoly d = qp({"924", "5"});
      e.components = {
          {A::i1, ratio(rp("49/3630"), pw(qp({"-484", "5"}), 2), pw(d, 2)), {}, ""},
          {A::i2, ratio(rp("10/27951"), mu * pw(qp({"30492", "5"}), 2), pw(d, 3)), {}, ""}};
      e.specials = {{rp("-924/5"), A::v2, Rational(3).pow(7) * Rational(5).pow(3) / (Rational(2).pow(5) * Rational(7).pow(2)), {}, ""}};
      break;
    }
    case 7: {
      const QPoly cubic = qp({"1549769", "-838068", "49566", "1093"});
      e.components = {
          {A::j1, ratio(rp("6/245"), pw(qp({"1606", "97"}), 2) * pw(qp({"2596", "528", "87"}), 2), pw(cubic, 2)), {}, ""},
          {A::j2, ratio(rp("301158/30625"), pw(qp({"-6556", "-44", "61"}), 2) * qp({"-157476", "1496", "2021"}), pw(cubic, 2)),
           {}, ""}};
      LocusDegenerate deg;
      deg.name = A::v3;
      deg.condition_transcribed = cubic;
      deg.relation_transcribed = qp({"308290455", "-31666132872", "-404568000", "8000000"});
      e.degenerate.push_back(std::move(deg));
      break;
    }
    case 8: {
      const QPoly d = qp({"884", "7"});
      e.components = {
          {A::i1, ratio(rp("49/11236320"), pw(qp({"15028", "279"}), 2), pw(d, 2)), {}, ""},
          {A::i3, ratio(rp("1/1360026486"), mu * pw(qp({"3321188", "3675"}), 2), pw(d, 3)), {}, ""}};
      e.specials = {{rp("-884/7"), A::v4,
                     Rational(2).pow(3) * Rational(3).pow(11) * Rational(101).pow(4) /
                         (Rational(5).pow(3) * Rational(7).pow(4) * Rational(13).pow(6)),
                     {}, ""}};
      break;
    }
    case 9: {
      const QPoly d = qp({"836", "3"});
      e.components = {
          {A::i1, ratio(rp("605/5633766"), pw(qp({"-7200", "9"}), 2), pw(d, 2)), {}, ""},
          {A::i2, ratio(rp("90/370680937"), mu * pw(qp({"79420", "157"}), 2), pw(d, 3)), {}, ""}};
      e.specials = {{rp("-836/3"), A::v2, -(Rational(2).pow(9) * Rational(5) * Rational(11).pow(2)) / Rational(3).pow(7), {}, ""}};
      break;
    }
    case 10: {
      const QPoly l1 = qp({"-782", "251"});
      const QPoly q1 = qp({"-6596", "-68", "115"});
      const QPoly l2 = qp({"1598", "181"});
      const QPoly q2 = qp({"-39236", "15912", "3813"});
      const QPoly q3 = qp({"-374884", "3128", "7877"});
      e.components = {
          {A::s2, ratio(rp("147/90250"), pw(l2, 2) * pw(q2, 2), pw(l1, 2) * pw(q1, 2)), {}, ""},
          {A::s1, ratio(rp("5007792000/121"), pw(q3, 2) * pw(q1, 2), pw(l1, 2) * pw(l2, 2) * pw(q2, 2)), {}, ""}};
      LocusDegenerate deg;
      deg.name = A::v5;
      deg.condition_transcribed = l1 * q1 * l2 * q2;
      deg.text =
          "p = -950367275/(21168*Q) * (25170477*mu^3 + 402998158*mu^2 - 4363415636*mu + 13083554824)^4 / "
          "((1268277*mu^2 - 5261568*mu + 18129548)^2 * (7959*mu^2 - 65756*mu - 287844)^2) / "
          "(228384659961*mu^4 - 22196181318948*mu^3 + 185588379432544*mu^2 - 447275488903152*mu + "
          "658755318269936); Q is not defined";
      e.degenerate.push_back(std::move(deg));
      break;
    }
    case 12: {
      const QPoly d = qp({"1700", "11"});
      e.components = {
          {A::i1, ratio(rp("1/268203000"), pw(qp({"-501500", "6611"}), 2), pw(d, 2)), {}, ""},
          {A::i3, ratio(rp("56/284015801875"), mu * pw(qp({"-5686500", "20933"}), 2), pw(d, 2)), {}, ""}};
      e.specials = {{rp("-1700/11"), A::v4,
                     Rational(2) * Rational(3).pow(3) * Rational(5) * Rational(41).pow(4) /
                         (Rational(7).pow(4) * Rational(11).pow(2) * Rational(17).pow(2)),
                     {}, ""}};
      break;
    }
    default:
      throw DomainError("unsupported_genus", "no parametrization for genus " + std::to_string(g));
  }
  return e;
}

const char* agreement(bool same) { return same ? kVerified : kRecomputedDiffers; }

}  // namespace

const LocusEntry& LocusTable::entry(int g) const {
  for (const auto& e : entries) {
    if (e.genus == g) return e;
  }
  throw DomainError("unsupported_genus", "the locus table covers g in {4,5,7,8,9,10,12}, got " + std::to_string(g));
}

LocusTable transcribed_locus_table() {
  LocusTable t;
  t.version = "1";
  for (int g : {4, 5, 7, 8, 9, 10, 12}) t.entries.push_back(transcribed_entry(g));
  return t;
}

LocusEntry recompute_entry(const LocusEntry& transcribed) {
  LocusEntry e = transcribed;
  const int g = e.genus;
  if (g == 4) {
    try {
      const auto p = classify_point(rational_model<Rational>(4, Rational(0)), 4);
      e.constant_status = agreement(p.values.front() == *e.constant);
    } catch (const DomainError& err) {
      e.constant_status = std::string(kNotRecomputable) + ": " + err.what();
    }
    return e;
  }
  CovariantCatalogue<QPoly> cat(rational_model<QPoly>(g, QPoly::variable()));
  const ModuliPoint<QFunc> p = classify_point(cat, g);
  for (std::size_t k = 0; k < e.components.size(); ++k) {
    auto& c = e.components[k];
    if (k >= p.names.size() || p.names[k] != c.name) {
      c.status = kNotRecomputable;
      continue;
    }
    c.recomputed = p.values[k];
    c.status = agreement(*c.recomputed == c.transcribed);
  }
  for (auto& s : e.specials) {
    try {
      const auto q = classify_point(rational_model<Rational>(g, s.mu), g);
      if (q.names.size() == 1 && q.names.front() == s.name) {
        s.recomputed = q.values.front();
        s.status = agreement(*s.recomputed == s.transcribed);
      } else {
        s.status = std::string(kNotRecomputable) + ": classified on branch " + q.case_tag;
      }
    } catch (const DomainError& err) {
      s.status = std::string(kNotRecomputable) + ": " + err.what();
    }
  }
  for (auto& d : e.degenerate) {
    if (g == 7) {
      // The generic branch fails where I3 vanishes.
      d.condition_recomputed = squarefree_part(*cat.invariant(InvariantName::I3));
    } else {
      d.condition_recomputed = squarefree_part(*cat.invariant(InvariantName::I12));
    }
    d.condition_status = agreement(*d.condition_recomputed == monic(d.condition_transcribed));
    auto v = absolute_invariant(cat, d.name);
    if (!v) {
      d.status = kNotRecomputable;
      continue;
    }
    if (d.relation_transcribed) {
      const QPoly& m = *d.condition_recomputed;
      const QPoly value = divmod(v->num() * inverse_mod(v->den(), m), m).second;
      d.relation_recomputed = charpoly_mod(value, m) * d.relation_transcribed->leading();
      d.status = agreement(*d.relation_recomputed == *d.relation_transcribed);
    } else {
      d.value_recomputed = *v;
      d.status = kIncompleteInPaper;
    }
  }
  return e;
}

LocusTable recompute_locus_table(const LocusTable& transcribed) {
  LocusTable t = transcribed;
  for (auto& e : t.entries) e = recompute_entry(e);
  return t;
}

// ---------------------------------------------------------------------------
// Evaluation and recovery

LocusValue locus_parametrization(const LocusTable& table, int g, const Rational& mu) {
  const LocusEntry& e = table.entry(g);
  LocusValue out;
  if (e.constant) {
    out.branch = "constant";
    out.point = ModuliPoint<Rational>{g, "g=4", {AbsoluteName::v1}, {*e.constant}};
    return out;
  }
  for (const auto& s : e.specials) {
    if (s.mu == mu) {
      out.branch = "special";
      out.point = ModuliPoint<Rational>{g, "g=" + std::to_string(g) + ", mu=" + mu.to_string(), {s.name}, {s.active()}};
      if (!(s.active() == s.transcribed)) out.transcribed = std::vector<Rational>{s.transcribed};
      return out;
    }
  }
  for (const auto& d : e.degenerate) {
    if (!d.condition()(mu).is_zero()) continue;
    out.branch = "degenerate";
    if (d.relation_transcribed) {
      out.relation = d.relation_recomputed ? *d.relation_recomputed : *d.relation_transcribed;
      return out;
    }
    if (d.value_recomputed) {
      out.point = ModuliPoint<Rational>{g, "g=" + std::to_string(g) + ", degenerate", {d.name},
                                        {d.value_recomputed->evaluate(mu)}};
      return out;
    }
    throw DomainError("incomplete_in_paper", "the degenerate branch of genus " + std::to_string(g) +
                                                 " is not evaluatable: " + d.text);
  }
  out.branch = "generic";
  ModuliPoint<Rational> p{g, "g=" + std::to_string(g) + ", generic", {}, {}};
  bool differs = false;
  for (const auto& c : e.components) {
    p.names.push_back(c.name);
    p.values.push_back(c.active().evaluate(mu));
    differs = differs || !(c.active() == c.transcribed);
  }
  if (differs) {
    try {
      std::vector<Rational> tv;
      for (const auto& c : e.components) tv.push_back(c.transcribed.evaluate(mu));
      out.transcribed = std::move(tv);
    } catch (const DomainError&) {
    }
  }
  out.point = std::move(p);
  return out;
}

ModuliPoint<QFunc> locus_functions(const LocusTable& table, int g) {
  const LocusEntry& e = table.entry(g);
  if (e.components.empty()) {
    throw DomainError("unsupported_genus", "genus " + std::to_string(g) + " has no one-parameter family");
  }
  ModuliPoint<QFunc> p{g, "g=" + std::to_string(g) + ", generic", {}, {}};
  for (const auto& c : e.components) {
    p.names.push_back(c.name);
    p.values.push_back(c.active());
  }
  return p;
}

MuRecovery recover_mu(const LocusTable& table, int g, const ModuliPoint<Rational>& p) {
  const LocusEntry& e = table.entry(g);
  if (e.constant) throw DomainError("unsupported_genus", "the genus 4 locus is a single point; there is no mu");
  MuRecovery out;
  if (p.values.size() == 1) {
    for (const auto& s : e.specials) {
      if (s.active() == p.values.front()) out.mu.push_back(s.mu);
    }
    if (out.mu.empty()) throw DomainError("off_locus", "the value matches no special point of the locus");
    std::sort(out.mu.begin(), out.mu.end());
    return out;
  }
  if (p.values.size() != e.components.size()) {
    throw DomainError("off_locus", "expected " + std::to_string(e.components.size()) + " coordinates");
  }
  std::optional<QPoly> h;
  for (std::size_t k = 0; k < e.components.size(); ++k) {
    const QFunc& f = e.components[k].active();
    const QPoly eq = f.num() - f.den() * p.values[k];
    if (eq.is_zero()) continue;
    h = h ? poly_gcd(*h, eq) : monic(eq);
  }
  if (!h) throw DomainError("off_locus", "every parameter value maps to this point");
  if (h->degree() < 1) throw DomainError("off_locus", "no parameter value maps to this point");
  for (const Rational& mu : rational_roots(*h)) {
    try {
      const LocusValue v = locus_parametrization(table, g, mu);
      if (v.point && v.point->values == p.values) out.mu.push_back(mu);
    } catch (const DomainError&) {
    }
  }
  if (out.mu.empty()) {
    out.obstruction = *h;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Genus 5 locus equation

L5SingularityReport l5_singularity_report(const LocusTable& table) {
  L5SingularityReport r;
  const ModuliPoint<QFunc> p = locus_functions(table, 5);
  const QFunc& i1 = p.values[0];
  const QFunc& i2 = p.values[1];
  r.residual_vanishes = l5_relation(i1, i2).is_zero();
  r.known_point_singular = l5_is_singular(Rational(0), Rational(1, 84));
  const QFunc d1 = l5_d_i1(i1, i2);
  const QFunc d2 = l5_d_i2(i1, i2);
  if (d1.is_zero() && d2.is_zero()) return r;
  r.partials_gcd = d1.is_zero() ? monic(d2.num()) : (d2.is_zero() ? monic(d1.num()) : poly_gcd(d1.num(), d2.num()));
  const QFunc shifted = i2 - QFunc(Rational(1, 84));
  // Every root of the gcd must be a root of both i1 and i2 - 1/84 (and no pole).
  auto divides = [&](const QPoly& h, const QPoly& f) { return f.is_zero() || divmod(f, h).second.is_zero(); };
  r.gcd_roots_map_to_known_point = r.partials_gcd.degree() < 1 ||
                                   (divides(squarefree_part(r.partials_gcd), i1.num()) &&
                                    divides(squarefree_part(r.partials_gcd), shifted.num()) &&
                                    poly_gcd(r.partials_gcd, i1.den()).degree() == 0);
  // Image of mu -> infinity: ratio of leading coefficients where degrees agree.
  auto at_infinity = [](const QFunc& f) {
    if (f.num().degree() < f.den().degree()) return Rational(0);
    if (f.num().degree() > f.den().degree()) throw DomainError("pole", "unbounded at infinity");
    return f.num().leading() / f.den().leading();
  };
  const Rational a = at_infinity(i1);
  const Rational b = at_infinity(i2);
  r.infinity_smooth = !l5_is_singular(a, b);
  return r;
}

// ---------------------------------------------------------------------------
// Verification report

namespace {

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::vector<LocusCheck> verify_locus(const LocusTable& table, int g) {
  lemma41_branch(g);
  if (!classifiable_genus(g)) {
    throw DomainError("unsupported_genus", "verification covers g in {4,5,7,8,9,10,12}, got " + std::to_string(g));
  }
  std::vector<LocusCheck> checks;
  const LocusEntry& stored = table.entry(g);

  if (g == 4) {
    const auto form = rational_model<Rational>(4, Rational(0));
    LocusCheck v{"vanishing", true, false, ""};
    for (const auto& [name, zero] : vanishing_profile(form, 4)) {
      v.passed = v.passed && zero;
      v.detail += std::string(invariant_key(name)) + (zero ? "=0 " : "!=0 ");
    }
    checks.push_back(v);
    LocusCheck c{"constant v1", false, false, ""};
    try {
      const auto p = classify_point(form, 4);
      c.passed = p.values.front() == *stored.constant;
      c.detail = "recomputed " + p.values.front().to_string() + ", printed " + stored.constant->to_string();
    } catch (const DomainError& err) {
      c.detail = std::string(err.kind()) + ": " + err.what() + "; printed " + stored.constant->to_string();
    }
    checks.push_back(c);
    return checks;
  }

  const QPoly mu = QPoly::variable();
  CovariantCatalogue<QPoly> cat(rational_model<QPoly>(g, mu));
  {
    LocusCheck v{"vanishing", true, false, ""};
    for (const auto& [name, zero] : vanishing_profile(cat, g)) {
      v.passed = v.passed && zero;
      v.detail += std::string(invariant_key(name)) + (zero ? "=0 " : "!=0 ");
    }
    checks.push_back(v);
  }
  const LocusEntry fresh = recompute_entry(transcribed_entry(g));
  for (std::size_t k = 0; k < fresh.components.size(); ++k) {
    const auto& c = fresh.components[k];
    LocusCheck chk{"identity " + std::string(absolute_key(c.name)), c.status == kVerified, false, c.status};
    if (c.status != kVerified && c.recomputed) {
      chk.detail += "; printed " + str(c.transcribed) + "; recomputed " + str(*c.recomputed);
    }
    checks.push_back(chk);
    const bool fixture_ok = k < stored.components.size() && stored.components[k].recomputed == c.recomputed;
    checks.push_back({"fixture " + std::string(absolute_key(c.name)), fixture_ok, false,
                      fixture_ok ? "matches recomputation" : "fixture disagrees with recomputation"});
  }
  for (const auto& s : fresh.specials) {
    LocusCheck chk{"special mu=" + s.mu.to_string(), s.status == kVerified, false,
                   s.status + "; printed " + s.transcribed.to_string()};
    if (s.recomputed) chk.detail += "; recomputed " + s.recomputed->to_string();
    checks.push_back(chk);
  }
  for (const auto& d : fresh.degenerate) {
    LocusCheck cond{"degenerate condition", d.condition_status == kVerified, false, d.condition_status};
    if (d.condition_recomputed) {
      cond.detail += "; printed " + str(d.condition_transcribed) + "; recomputed (monic) " + str(*d.condition_recomputed);
    }
    checks.push_back(cond);
    if (d.relation_transcribed) {
      LocusCheck rel{"degenerate relation", d.status == kVerified, false, d.status};
      if (d.relation_recomputed) rel.detail += "; recomputed " + str(*d.relation_recomputed);
      checks.push_back(rel);
    } else {
      checks.push_back({"degenerate value", false, true, d.status + ": " + d.text});
    }
  }
  if (g == 5) {
    const L5SingularityReport r = l5_singularity_report(table);
    checks.push_back({"L5 residual", r.residual_vanishes, false, r.residual_vanishes ? "zero in Q(mu)" : "nonzero"});
    checks.push_back({"L5 singular point (0,1/84)", r.known_point_singular, false, ""});
    checks.push_back({"L5 no other singular point", r.gcd_roots_map_to_known_point && r.infinity_smooth, false,
                      "gcd of partials " + str(r.partials_gcd)});
  }
  return checks;
}

}  // namespace hyperinv
