#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace kw4;
using kw4::testing::RationalRng;

TEST_CASE("rational strings round-trip") {
  CHECK(rational_to_string(Rational(3, 4)) == "3/4");
  CHECK(rational_to_string(Rational(-6, 8)) == "-3/4");
  CHECK(rational_to_string(Rational(5)) == "5");
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("-12") == Rational(-12));
  CHECK_THROWS_AS((void)rational_from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS((void)rational_from_string("1/0"), std::invalid_argument);
  RationalRng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Rational q = rng();
    CHECK(rational_from_string(rational_to_string(q)) == q);
  }
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(exact_sqrt(Rational(4)) == Rational(2));
  CHECK(exact_sqrt(Rational(0)) == Rational(0));
  CHECK(!exact_sqrt(Rational(2)).has_value());
  CHECK(!exact_sqrt(Rational(1, 3)).has_value());
  CHECK_THROWS_WITH_AS((void)exact_sqrt(Rational(-1)), "negative radicand",
                       std::domain_error);
}

TEST_CASE("gaussian rational field arithmetic") {
  const GaussianRational i = GaussianRational::i();
  const GaussianRational half(Rational(1, 2));
  CHECK(half * i == GaussianRational(Rational(0), Rational(1, 2)));
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational z(Rational(3, 5), Rational(-4, 5));
  CHECK(z * z.conj() == GaussianRational(z.norm_sq()));
  CHECK(z / z == GaussianRational(1));
  CHECK_THROWS_WITH_AS((void)(z / GaussianRational(0)), "non-invertible scalar",
                       std::domain_error);
}

template <typename S, typename Draw>
static void ring_axioms(Draw draw, int trials) {
  for (int t = 0; t < trials; ++t) {
    const S a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
    CHECK(conjugate(a + b) == conjugate(a) + conjugate(b));
    CHECK(conjugate(conjugate(a)) == a);
  }
}

TEST_CASE("ring axioms on random triples, every exact backend") {
  RationalRng rng(11);
  ring_axioms<Rational>([&] { return rng(); }, 400);
  ring_axioms<GaussianRational>([&] { return rng.gaussian(); }, 400);

  auto table = std::make_shared<SymbolTable>();
  table->add_pair("x", "xb");
  table->add_real("r");
  auto draw_poly = [&] {
    ParamPoly p = ParamPoly::constant(table, rng.gaussian());
    for (int k = 0; k < 2; ++k) {
      const char* names[] = {"x", "xb", "r"};
      ParamPoly term = ParamPoly::constant(table, rng.gaussian());
      term *= ParamPoly::variable(table, names[rng.integer(0, 2)]);
      p += term;
    }
    return p;
  };
  ring_axioms<ParamPoly>(draw_poly, 250);
}

TEST_CASE("polynomial conjugation is structural") {
  auto table = std::make_shared<SymbolTable>();
  table->add_pair("e1", "e1b");
  table->add_pair("a2", "a2b");
  const ParamPoly e1 = ParamPoly::variable(table, "e1");
  const ParamPoly e1b = ParamPoly::variable(table, "e1b");
  const ParamPoly a2 = ParamPoly::variable(table, "a2");
  const ParamPoly a2b = ParamPoly::variable(table, "a2b");
  CHECK(conjugate(e1 * a2b) == e1b * a2);

  auto real_table = std::make_shared<SymbolTable>();
  real_table->add_real("s");
  real_table->add_real("t");
  const ParamPoly s = ParamPoly::variable(real_table, "s");
  const ParamPoly t = ParamPoly::variable(real_table, "t");
  const ParamPoly p = s * s * t + scalar_of<ParamPoly>(3LL) * t;
  CHECK(conjugate(p) == p);  // all-real tables are fixed by conjugation
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  auto table = std::make_shared<SymbolTable>();
  table->add_pair("x", "xb");
  table->add_real("r");
  RationalRng rng(13);
  auto draw_poly = [&] {
    ParamPoly p = ParamPoly::constant(table, rng.gaussian());
    for (int k = 0; k < 3; ++k) {
      const char* names[] = {"x", "xb", "r"};
      ParamPoly term = ParamPoly::constant(table, rng.gaussian());
      for (int d = 0; d < rng.integer(1, 2); ++d)
        term *= ParamPoly::variable(table, names[rng.integer(0, 2)]);
      p += term;
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const ParamPoly p = draw_poly(), q = draw_poly();
    const GaussianRational xv = rng.gaussian();
    const GaussianRational rv(rng());
    const std::map<std::string, GaussianRational> assign{
        {"x", xv}, {"xb", xv.conj()}, {"r", rv}};
    CHECK(p.evaluate(assign) * q.evaluate(assign) == (p * q).evaluate(assign));
    CHECK(p.evaluate(assign) + q.evaluate(assign) == (p + q).evaluate(assign));
  }
}

TEST_CASE("evaluation error paths") {
  auto table = std::make_shared<SymbolTable>();
  table->add_pair("x", "xb");
  const ParamPoly x = ParamPoly::variable(table, "x");
  const ParamPoly xb = ParamPoly::variable(table, "xb");

  SUBCASE("unbound indeterminate") {
    const std::map<std::string, GaussianRational> assign{{"x", GaussianRational(1)}};
    CHECK_THROWS_AS((void)(x * xb).evaluate(assign), std::domain_error);
  }
  SUBCASE("conjugate-pair violation") {
    const std::map<std::string, GaussianRational> assign{
        {"x", GaussianRational::i()}, {"xb", GaussianRational::i()}};
    CHECK_THROWS_AS((void)(x * xb).evaluate(assign), std::domain_error);
  }
  SUBCASE("x xbar + 1 at x = i gives 2") {
    const std::map<std::string, GaussianRational> assign{
        {"x", GaussianRational::i()}, {"xb", -GaussianRational::i()}};
    CHECK((x * xb + ParamPoly::constant(GaussianRational(1))).evaluate(assign) ==
          GaussianRational(2));
  }
  SUBCASE("unknown symbol name") {
    CHECK_THROWS_AS((void)ParamPoly::variable(table, "nope"), std::invalid_argument);
  }
  SUBCASE("division by a non-unit") {
    CHECK_THROWS_WITH_AS((void)(xb / x), "non-invertible scalar", std::domain_error);
  }
}

TEST_CASE("table-less constants combine with any polynomial") {
  auto table = std::make_shared<SymbolTable>();
  table->add_real("r");
  const ParamPoly r = ParamPoly::variable(table, "r");
  const ParamPoly two = scalar_of<ParamPoly>(2LL);  // no table attached
  CHECK(two * r + r == scalar_of<ParamPoly>(3LL) * r);
  CHECK(two - two == ParamPoly());
  CHECK((two + r) - r == two);
}

TEST_CASE("float backends agree with exact arithmetic") {
  RationalRng rng(17);
  for (int t = 0; t < 200; ++t) {
    const GaussianRational a = rng.gaussian(), b = rng.gaussian();
    const FloatComplex fa = scalar_traits<FloatComplex>::from_gaussian(a);
    const FloatComplex fb = scalar_traits<FloatComplex>::from_gaussian(b);
    const FloatComplex exact = scalar_traits<FloatComplex>::from_gaussian(a * b + a);
    const double mag = std::abs(exact);
    CHECK(std::abs(fa * fb + fa - exact) <= 1e-12 * std::max(1.0, mag));
  }
}
