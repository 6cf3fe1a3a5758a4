#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace kw4;
using kw4::testing::RationalRng;

TEST_CASE("closed-form rho_a matches the parameter map") {
  const auto p = FamilyParams<Rational>::para(Rational(2), Rational(3), Rational(1),
                                              Rational(1), Rational(5), Rational(7));
  const auto f = rho_a_closed_form(p);
  CHECK(f.get({0, 1}) == Rational(2));   // a2t * e1
  CHECK(f.get({0, 3}) == Rational(5));   // a2t * a3
  CHECK(f.get({1, 2}) == Rational(-7));  // -a2 * a3t
  CHECK(f.get({2, 3}) == Rational(3));   // a2 * e1t
}

TEST_CASE("para targets without theta1 component solve exactly") {
  RationalRng rng(89);
  const auto m = ModelSpace<Rational>::build(ModelKind::Para);
  for (int t = 0; t < 100; ++t) {
    KForm<Rational> target(2);
    for (int k = 2; k <= 5; ++k) target += rng() * m.theta(k);
    const auto r = solve_para(m, target);
    const auto [ok, res] = verify_roundtrip(r, m, 0.0);
    CHECK(ok);
    CHECK(res == 0.0);
    CHECK(r.report.pass(0));
    CHECK((r.predicted_rho_a - target).is_zero());
  }
}

TEST_CASE("para targets with theta1 component solve in floating mode") {
  RationalRng rng(97);
  const auto m = ModelSpace<double>::build(ModelKind::Para);
  for (int t = 0; t < 30; ++t) {
    KForm<double> target(2);
    for (int k = 1; k <= 5; ++k) target += rng.real() * m.theta(k);
    const auto r = solve_para(m, target);
    const auto [ok, res] = verify_roundtrip(r, m, 1e-9);
    CHECK(ok);
    CHECK(r.report.pass(1e-9));
  }
  // the exact backend refuses the rotation rather than approximating
  const auto me = ModelSpace<Rational>::build(ModelKind::Para);
  CHECK_THROWS_AS((void)solve_para(me, me.theta(1)), std::domain_error);
}

TEST_CASE("zero target gives the abelian algebra with trivial Weyl structure") {
  const auto m = ModelSpace<Rational>::build(ModelKind::Para);
  const auto r = solve_para(m, KForm<Rational>(2));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) CHECK(r.algebra.bracket_basis(i, j)[k] == Rational(0));
  CHECK(r.report.trivial_weyl);
  CHECK(r.report.pass(0));

  const auto mh = ModelSpace<GaussianRational>::build(ModelKind::Hermitian);
  const auto rh = solve_hermitian(mh, KForm<GaussianRational>(2));
  CHECK(rh.report.trivial_weyl);
}

TEST_CASE("targets with an Omega component are rejected") {
  const auto m = ModelSpace<Rational>::build(ModelKind::Para);
  CHECK_THROWS_AS((void)solve_para(m, m.omega()), std::domain_error);
  const auto mh = ModelSpace<GaussianRational>::build(ModelKind::Hermitian);
  CHECK_THROWS_AS((void)solve_hermitian(mh, mh.omega()), std::domain_error);
}

TEST_CASE("hermitian exact solver: orbit certificates and rational squares") {
  const auto m = ModelSpace<GaussianRational>::build(ModelKind::Hermitian);
  SUBCASE("perfect-square invariants solve exactly in orbit mode") {
    KForm<GaussianRational> t(2);
    t += scalar_of<GaussianRational>(1LL) * m.theta(2);
    t += scalar_of<GaussianRational>(2LL) * m.theta(4);
    const auto r = solve_hermitian(m, t, HermitianMode::Orbit);
    CHECK(r.report.pass(0));
    const auto inv = orbit_invariants(m, r.predicted_rho_a);
    CHECK(inv.x == GaussianRational(2));
    CHECK(inv.y == GaussianRational(8));
  }
  SUBCASE("canonical-position targets exact-align in place") {
    KForm<GaussianRational> t(2);
    t += scalar_of<GaussianRational>(Rational(3, 2)) * m.theta(2);
    const auto r = solve_hermitian(m, t, HermitianMode::ExactAlign);
    CHECK((r.predicted_rho_a - t).is_zero());
    const auto [ok, res] = verify_roundtrip(r, m, 0.0);
    CHECK(ok);
  }
  SUBCASE("irrational parameters are refused with a pointer to the float backend") {
    KForm<GaussianRational> t(2);
    t += scalar_of<GaussianRational>(1LL) * m.theta(2);
    t += scalar_of<GaussianRational>(1LL) * m.theta(3);
    CHECK_THROWS_AS((void)solve_hermitian(m, t, HermitianMode::Orbit),
                    std::domain_error);
  }
  SUBCASE("non-real targets are rejected") {
    KForm<GaussianRational> bad(2);
    bad.set({0, 1}, GaussianRational::i());
    CHECK_THROWS_WITH_AS((void)solve_hermitian(m, bad), "reality violation",
                         std::domain_error);
  }
}

TEST_CASE("hermitian float solver aligns generic real targets componentwise") {
  RationalRng rng(101);
  const auto m = ModelSpace<FloatComplex>::build(ModelKind::Hermitian);
  for (int t = 0; t < 30; ++t) {
    KForm<FloatComplex> target(2);
    for (int k = 1; k <= 5; ++k) target += FloatComplex(rng.real(), 0) * m.theta(k);
    const auto r = solve_hermitian(m, target, HermitianMode::ExactAlign);
    const auto [ok, res] = verify_roundtrip(r, m, 1e-9);
    CHECK(ok);
    CHECK(r.report.pass(1e-9));
    const auto* reality = r.report.find("bracket_reality");
    REQUIRE(reality != nullptr);
    CHECK(reality->max_abs <= 1e-9);
  }
}

TEST_CASE("wrong-model calls are rejected") {
  const auto mp = ModelSpace<GaussianRational>::build(ModelKind::Hermitian);
  CHECK_THROWS_AS((void)solve_para(mp, KForm<GaussianRational>(2)), std::domain_error);
  const auto mh = ModelSpace<Rational>::build(ModelKind::Para);
  CHECK_THROWS_AS((void)solve_hermitian(mh, KForm<Rational>(2)), std::domain_error);
}

TEST_CASE("realization is equivariant under the structure group") {
  RationalRng rng(103);
  SUBCASE("para") {
    const auto m = ModelSpace<double>::build(ModelKind::Para);
    std::uniform_real_distribution<double> ang(0, 6.28318);
    for (int t = 0; t < 10; ++t) {
      KForm<double> xi(2);
      for (int k = 1; k <= 5; ++k) xi += rng.real() * m.theta(k);
      const double a = ang(rng.raw());
      const auto u = UnitaryElement<double>::para_block(
          {{{std::cos(a), -std::sin(a)}, {std::sin(a), std::cos(a)}}});
      const auto moved = induced_action(m, u, xi);
      // realize the moved target, undo the motion on the produced bracket
      const auto r = solve_para(m, moved);
      const auto back = pullback_bracket(r.algebra, u);
      const auto rho = curvature(weyl_connection(back, m), back, m).rho_a_form;
      CHECK((rho - xi).max_abs() <= 1e-9);
    }
  }
}
