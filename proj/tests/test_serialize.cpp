#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "kw4/serialize.hpp"

using namespace kw4;
using kw4::testing::RationalRng;

TEST_CASE("scalar JSON round-trips") {
  RationalRng rng(107);
  for (int t = 0; t < 100; ++t) {
    const Rational q = rng();
    CHECK(scalar_from_json<Rational>(scalar_to_json(q)) == q);
    const GaussianRational z = rng.gaussian();
    CHECK(scalar_from_json<GaussianRational>(scalar_to_json(z)) == z);
    const FloatComplex f(rng.real(), rng.real());
    CHECK(scalar_from_json<FloatComplex>(scalar_to_json(f)) == f);
  }
  CHECK(scalar_to_json(Rational(3, 4)) == json("3/4"));
  CHECK(scalar_from_json<Rational>(json(5)) == Rational(5));
  CHECK_THROWS_AS((void)scalar_from_json<Rational>(json(1.5)), std::invalid_argument);
  // bare reals promote into the complex backends
  CHECK(scalar_from_json<GaussianRational>(json("1/2")) ==
        GaussianRational(Rational(1, 2)));
}

TEST_CASE("k-form JSON round-trips and validates keys") {
  RationalRng rng(109);
  for (int deg = 0; deg <= 4; ++deg) {
    KForm<Rational> f(deg);
    for (int i = 0; i < basis4::count(deg); ++i) f[i] = rng();
    CHECK(kform_from_json<Rational>(kform_to_json(f)) == f);
  }
  CHECK_THROWS_AS((void)kform_from_json<Rational>(
                      json{{"degree", 2}, {"coeffs", {{"15", "1"}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)kform_from_json<Rational>(
                      json{{"degree", 2}, {"coeffs", {{"123", "1"}}}}),
                  std::invalid_argument);
  // descending keys carry the orientation sign
  const auto f = kform_from_json<Rational>(json{{"degree", 2}, {"coeffs", {{"21", "1"}}}});
  CHECK(f.get({0, 1}) == Rational(-1));
}

TEST_CASE("targets parse from theta coordinates") {
  const auto m = ModelSpace<Rational>::build(ModelKind::Para);
  const auto f = target_from_json<Rational>(
      json{{"theta", {"1", "0", "0", "0", "-2"}}}, m);
  CHECK(f == m.theta(1) - scalar_of<Rational>(2LL) * m.theta(5));
  CHECK_THROWS_AS(
      (void)target_from_json<Rational>(json{{"theta", {"1", "0"}}}, m),
      std::invalid_argument);
}

TEST_CASE("lie algebra JSON round-trips") {
  RationalRng rng(113);
  for (int t = 0; t < 20; ++t) {
    const auto L = family_algebra(
        FamilyParams<Rational>::para(rng(), rng(), rng(), rng(), rng(), rng()),
        ModelKind::Para);
    const auto back = lie_from_json<Rational>(lie_to_json(L, ModelKind::Para));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
          CHECK(back.bracket_basis(i, j)[k] == L.bracket_basis(i, j)[k]);
    CHECK(back.label() == L.label());
  }
  CHECK_THROWS_AS(
      (void)lie_from_json<Rational>(json{{"c", {{"21", {{"1", "1"}}}}}}),
      std::invalid_argument);
}

TEST_CASE("verification report JSON round-trips") {
  const auto fam = kw4::testing::para_symbolic_family();
  const auto m = ModelSpace<ParamPoly>::build(ModelKind::Para);
  const auto rep = check_suite(fam.algebra, m);
  const auto back = report_from_json(report_to_json(rep, 1e-9));
  REQUIRE(back.residuals.size() == rep.residuals.size());
  // JSON objects are key-sorted, so compare by name rather than position.
  for (const auto& want : rep.residuals) {
    const auto* got = back.find(want.name);
    REQUIRE(got != nullptr);
    CHECK(got->exact_mode == want.exact_mode);
    CHECK(got->exactly_zero == want.exactly_zero);
    CHECK(got->max_abs == want.max_abs);
  }
  CHECK(back.trivial_weyl == rep.trivial_weyl);
  CHECK(back.pass(1e-9) == rep.pass(1e-9));
}

TEST_CASE("realization result JSON round-trips") {
  const auto m = ModelSpace<Rational>::build(ModelKind::Para);
  KForm<Rational> target(2);
  target += Rational(2) * m.theta(2);
  target += Rational(-1, 3) * m.theta(4);
  const auto r = solve_para(m, target);
  const auto j = realization_to_json(r, ModelKind::Para, 1e-9);
  const auto back = realization_from_json<Rational>(j);
  CHECK(back.target == r.target);
  CHECK(back.predicted_rho_a == r.predicted_rho_a);
  CHECK(back.conjugation.T == r.conjugation.T);
  for (int i = 0; i < 4; ++i)
    for (int j2 = 0; j2 < 4; ++j2)
      for (int k = 0; k < 4; ++k)
        CHECK(back.algebra.bracket_basis(i, j2)[k] == r.algebra.bracket_basis(i, j2)[k]);
  CHECK(back.orbit_note == r.orbit_note);
  // and print(parse(print(x))) is stable
  CHECK(realization_to_json(back, ModelKind::Para, 1e-9) == j);
}
