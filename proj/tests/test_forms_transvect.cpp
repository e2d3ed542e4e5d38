#include <doctest.h>

#include "support.hpp"

using namespace testsupport;

namespace {

using QForm = BinaryForm<Rational>;
using QCov = Covariant<Rational>;

QForm form(std::initializer_list<long> low_first) {
  std::vector<Rational> c;
  for (long v : low_first) c.emplace_back(v);
  const int d = static_cast<int>(c.size()) - 1;
  return QForm(d, std::move(c));
}

/// (F, F)^d in binomial coordinates: sum_k (-1)^k C(d,k) b_k b_{d-k}.
Rational top_self_transvectant(const QForm& f) {
  const auto b = f.binomial_coordinates();
  const int d = f.degree();
  Rational acc(0);
  for (int k = 0; k <= d; ++k) {
    Rational term = b[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(d - k)] *
                    Rational(mpz_class(binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(k))));
    acc = k % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

int invariant_degree(InvariantName n) {
  switch (n) {
    case InvariantName::I2: return 2;
    case InvariantName::I3: return 3;
    case InvariantName::I4:
    case InvariantName::I4p: return 4;
    default: return 0;
  }
}

}  // namespace

TEST_CASE("transvectant hand expansions") {
  const QCov sum_sq = QCov::of(form({1, 0, 1}));
  const QCov xz = QCov::of(form({0, 1, 0}));
  CHECK(transvect(sum_sq, sum_sq, 2).value() == Rational(2));
  CHECK(transvect(xz, xz, 2).value() == Rational(-1, 2));
  // (X^2, Z^2)^1 = (1/4)(2X * 2Z - 0) = XZ.
  const QCov x2 = QCov::of(form({0, 0, 1}));
  const QCov z2 = QCov::of(form({1, 0, 0}));
  CHECK(transvect(x2, z2, 1).form == form({0, 1, 0}));
  CHECK_THROWS_AS(transvect(x2, z2, 3), DomainError);
  CHECK_THROWS_AS(transvect(x2, z2, -1), DomainError);
}

TEST_CASE("transvectant metadata") {
  Gen gen(kSeed + 10);
  const QCov f = QCov::of(gen.form(8));
  const QCov j4 = transvect(f, f, 6);
  CHECK(j4.order_m == 4);
  CHECK(j4.degree_p == 2);
  CHECK(j4.index_s == 6);
  const QCov fj = transvect(f, j4, 4);
  CHECK(fj.degree_p == 3);
  CHECK(fj.order_m == 4);
  CHECK(fj.index_s == (fj.degree_p * 8 - fj.order_m) / 2);
}

TEST_CASE("I2 of X^d + Z^d") {
  for (int d : {6, 8, 10, 12}) {
    std::vector<Rational> c(static_cast<std::size_t>(d + 1), Rational(0));
    c.front() = Rational(1);
    c.back() = Rational(1);
    const QForm f(d, c);
    CovariantCatalogue<Rational> cat(f);
    CHECK(*cat.invariant(InvariantName::I2) == Rational(2));
    CHECK(*cat.invariant(InvariantName::I2) == top_self_transvectant(f));
  }
}

TEST_CASE("I2 against the binomial-coordinate sum on random forms") {
  Gen gen(kSeed + 11);
  for (int k = 0; k < 20; ++k) {
    for (int d : {6, 8, 12}) {
      const QForm f = gen.form(d);
      CovariantCatalogue<Rational> cat(f);
      CHECK(*cat.invariant(InvariantName::I2) == top_self_transvectant(f));
    }
  }
}

TEST_CASE("gl2 action") {
  Gen gen(kSeed + 12);
  const QForm f = gen.form(6);
  CHECK(gl2_act(Matrix2<Rational>::identity(), f) == f);
  const QForm x5 = form({0, 0, 0, 0, 0, 1});
  CHECK(gl2_act(Matrix2<Rational>::diagonal(Rational(3), Rational(1)), x5) == x5.scaled(Rational(243)));
  CHECK_THROWS_AS(gl2_act(Matrix2<Rational>{1, 2, 2, 4}, f), DomainError);

  // Point evaluation: (M F)(x, z) = F(a x + b z, c x + d z).
  for (int k = 0; k < 50; ++k) {
    const QForm cubic = gen.form(3);
    const auto m = gen.invertible_matrix();
    const QForm moved = gl2_act(m, cubic);
    for (int s = 0; s < 3; ++s) {
      const Rational x = gen.rational();
      const Rational z = gen.rational();
      CHECK(evaluate_form(moved, x, z) == evaluate_form(cubic, m.a * x + m.b * z, m.c * x + m.d * z));
    }
  }
}

TEST_CASE("catalogue definedness by degree") {
  Gen gen(kSeed + 13);
  CHECK_THROWS_AS(CovariantCatalogue<Rational>(gen.form(5)), DomainError);
  CHECK_THROWS_AS(CovariantCatalogue<Rational>(gen.form(4)), DomainError);
  CovariantCatalogue<Rational> sextic(gen.dense_form(6));
  CHECK_FALSE(sextic.invariant(InvariantName::I3).has_value());
  CHECK_FALSE(sextic.invariant(InvariantName::I6p).has_value());
  CHECK(sextic.invariant(InvariantName::I4).has_value());
  CovariantCatalogue<Rational> dodecic(gen.dense_form(12));
  CHECK(dodecic.invariant(InvariantName::I3).has_value());
  CHECK(dodecic.invariant(InvariantName::I6s).has_value());
  CHECK(dodecic.invariant(InvariantName::I12).has_value());
  CHECK_FALSE(dodecic.invariant(InvariantName::I6star).has_value());
  CHECK_THROWS_AS(dodecic.S(), DomainError);
  CHECK(invariant_defined(InvariantName::I6star, 22));
  CHECK(invariant_defined(InvariantName::I12ast, 22));
  CHECK_FALSE(invariant_defined(InvariantName::I3, 22));
}

TEST_CASE("I4 vanishes identically on G_lambda") {
  const QPoly lambda = QPoly::variable();
  CovariantCatalogue<QPoly> cat(build_G(lambda));
  CHECK(cat.invariant(InvariantName::I4)->is_zero());
  CHECK_FALSE(cat.invariant(InvariantName::I2)->is_zero());
}

TEST_CASE("I4 vanishes on the genus 8 model") {
  CovariantCatalogue<QPoly> cat(rational_model<QPoly>(8, QPoly::variable()));
  CHECK(cat.degree() == 18);
  CHECK(cat.invariant(InvariantName::I4)->is_zero());
}

TEST_CASE("vanishing profile of a random dense form") {
  Gen gen(kSeed + 14);
  const auto profile = vanishing_profile(gen.dense_form(12), 5);
  REQUIRE(profile.size() == 2);
  for (const auto& [name, zero] : profile) CHECK_FALSE(zero);
}

TEST_CASE("classification branches") {
  Gen gen(kSeed + 15);
  const QForm f = gen.dense_form(12);
  const auto p = classify_point(f, 5);
  CHECK(p.case_tag == "g=5, I2!=0");
  REQUIRE(p.values.size() == 2);
  CHECK(p.names == std::vector<AbsoluteName>{AbsoluteName::i1, AbsoluteName::i2});
  CHECK_THROWS_AS(classify_point(f, 6), DomainError);
  CHECK_THROWS_AS(classify_point(f, 7), DomainError);

  // The genus 5 model at mu = -924/5 sits on the I2 = 0 branch.
  const auto special = classify_point(rational_model<Rational>(5, Rational(-924, 5)), 5);
  CHECK(special.case_tag == "g=5, I2=0");
  CHECK(special.names == std::vector<AbsoluteName>{AbsoluteName::v2});
}

TEST_CASE("absolute invariants are unchanged by scaling and gl2") {
  Gen gen(kSeed + 16);
  for (int k = 0; k < 10; ++k) {
    const QForm f = gen.dense_form(8);
    const auto m = gen.invertible_matrix(2);
    const Rational c = gen.nonzero_rational();
    CovariantCatalogue<Rational> base(f);
    CovariantCatalogue<Rational> moved(gl2_act(m, f).scaled(c));
    const auto a = absolute_invariants(base);
    const auto b = absolute_invariants(moved);
    for (std::size_t n = 0; n < a.size(); ++n) {
      CHECK(a[n].has_value() == b[n].has_value());
      if (a[n] && b[n]) CHECK(*a[n] == *b[n]);
    }
  }
}

TEST_CASE("index law on degree 8 and 12") {
  Gen gen(kSeed + 17);
  for (int d : {8, 12}) {
    for (int k = 0; k < 6; ++k) {
      const QForm f = gen.form(d, 3);
      const auto m = gen.invertible_matrix(2);
      CovariantCatalogue<Rational> base(f);
      CovariantCatalogue<Rational> moved(gl2_act(m, f));
      for (InvariantName n : {InvariantName::I2, InvariantName::I3, InvariantName::I4, InvariantName::I4p}) {
        if (!invariant_defined(n, d)) continue;
        const long s = invariant_degree(n) * d / 2;
        CHECK(*moved.invariant(n) == m.det().pow(s) * *base.invariant(n));
      }
    }
  }
}

TEST_CASE("covariant index law") {
  Gen gen(kSeed + 18);
  for (int k = 0; k < 5; ++k) {
    const QForm f = gen.form(8, 3);
    const auto m = gen.invertible_matrix(2);
    CovariantCatalogue<Rational> base(f);
    CovariantCatalogue<Rational> moved(gl2_act(m, f));
    const QCov& j = base.J(4);
    CHECK(moved.J(4).form == gl2_act(m, j.form).scaled(m.det().pow(j.index_s)));
    const QCov& fj = base.FJ(4);
    CHECK(moved.FJ(4).form == gl2_act(m, fj.form).scaled(m.det().pow(fj.index_s)));
  }
}

TEST_CASE("catalogue over Q(i, sqrt 3) agrees with Q on rational forms") {
  Gen gen(kSeed + 19);
  const QForm f = gen.dense_form(10);
  std::vector<Cyclo> c;
  for (const auto& a : f.coefficients()) c.emplace_back(a);
  CovariantCatalogue<Rational> over_q(f);
  CovariantCatalogue<Cyclo> over_k(BinaryForm<Cyclo>(10, c));
  for (InvariantName n : kInvariantNames) {
    const auto a = over_q.invariant(n);
    const auto b = over_k.invariant(n);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(Cyclo(*a) == *b);
  }
}
