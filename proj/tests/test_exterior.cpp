#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace kw4;
using kw4::testing::RationalRng;

namespace {

KForm<Rational> random_form(RationalRng& rng, int degree) {
  KForm<Rational> f(degree);
  for (int i = 0; i < basis4::count(degree); ++i) f[i] = rng();
  return f;
}

}  // namespace

TEST_CASE("wedge product basics") {
  using F = KForm<Rational>;
  const F p1 = F::basis(1, {0}), p2 = F::basis(1, {1});
  CHECK(wedge(p1, p2) == F::basis(2, {0, 1}));
  CHECK(wedge(p2, p1) == -F::basis(2, {0, 1}));
  CHECK(wedge(p1, p1).is_zero());
  CHECK_THROWS_AS((void)wedge(F::basis(3, {0, 1, 2}), F::basis(2, {0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)F::basis(2, {1, 1}), std::invalid_argument);
  // orientation sign of the accessor
  const F f = F::basis(2, {0, 1});
  CHECK(f.get({1, 0}) == Rational(-1));
}

TEST_CASE("wedge is associative and graded-commutative on random forms") {
  RationalRng rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_form(rng, 1);
    const auto b = random_form(rng, 1);
    const auto c = random_form(rng, 2);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a, b) == -wedge(b, a));
    CHECK(wedge(a, c) == wedge(c, a));  // odd*even commutes
  }
}

TEST_CASE("hodge star golden table") {
  const auto fr = BasisFrame<Rational>::psi_frame();
  using F = KForm<Rational>;
  auto star = [&](std::vector<int> idx) {
    return fr.hodge_star(F::basis(static_cast<int>(idx.size()), idx));
  };
  // one-forms
  CHECK(star({0}) == -F::basis(3, {0, 1, 3}));
  CHECK(star({1}) == F::basis(3, {0, 1, 2}));
  CHECK(star({2}) == -F::basis(3, {1, 2, 3}));
  CHECK(star({3}) == F::basis(3, {0, 2, 3}));
  // two-forms
  CHECK(star({0, 1}) == -F::basis(2, {0, 1}));
  CHECK(star({0, 2}) == -F::basis(2, {1, 3}));
  CHECK(star({0, 3}) == F::basis(2, {0, 3}));
  CHECK(star({1, 2}) == F::basis(2, {1, 2}));
  CHECK(star({1, 3}) == -F::basis(2, {0, 2}));
  CHECK(star({2, 3}) == -F::basis(2, {2, 3}));
  // three-forms
  CHECK(star({0, 1, 2}) == -F::basis(1, {1}));
  CHECK(star({0, 1, 3}) == F::basis(1, {0}));
  CHECK(star({0, 2, 3}) == -F::basis(1, {3}));
  CHECK(star({1, 2, 3}) == F::basis(1, {2}));
}

TEST_CASE("star satisfies its defining identity exhaustively") {
  const auto fr = BasisFrame<Rational>::psi_frame();
  for (int deg = 0; deg <= 4; ++deg)
    for (const auto& i1 : basis4::monomials(deg))
      for (const auto& i2 : basis4::monomials(deg)) {
        const auto w1 = KForm<Rational>::basis(deg, i1);
        const auto w2 = KForm<Rational>::basis(deg, i2);
        const auto lhs = wedge(w1, fr.hodge_star(w2));
        const auto rhs = fr.form_inner(w1, w2) * fr.volume_form();
        CHECK(lhs == rhs);
      }
}

TEST_CASE("star star sign falls out of the identity, not a hard-coded rule") {
  const auto fr = BasisFrame<Rational>::psi_frame();
  RationalRng rng(29);
  for (int deg = 0; deg <= 4; ++deg) {
    const auto f = random_form(rng, deg);
    const auto twice = fr.hodge_star(fr.hodge_star(f));
    // star^2 must be +/-1 per degree; which sign is left to the defining
    // identity, which must still hold after the double star.
    CHECK((twice == f || twice == -f));
    CHECK(wedge(twice, fr.hodge_star(twice)) == fr.form_inner(twice, twice) * fr.volume_form());
  }
}

TEST_CASE("theta bases have the published inner products") {
  SUBCASE("hermitian: all five thetas have norm-squared 2") {
    const auto m = ModelSpace<GaussianRational>::build(ModelKind::Hermitian);
    for (int k = 1; k <= 5; ++k)
      CHECK(m.frame().form_inner(m.theta(k), m.theta(k)) == GaussianRational(2));
  }
  SUBCASE("para: norms (-2,-2,2,2,-2)") {
    const auto m = ModelSpace<Rational>::build(ModelKind::Para);
    const int expected[] = {-2, -2, 2, 2, -2};
    for (int k = 1; k <= 5; ++k)
      CHECK(m.frame().form_inner(m.theta(k), m.theta(k)) == Rational(expected[k - 1]));
  }
  SUBCASE("thetas are mutually orthogonal and orthogonal to Omega") {
    const auto m = ModelSpace<Rational>::build(ModelKind::Para);
    for (int a = 1; a <= 5; ++a) {
      CHECK(m.frame().form_inner(m.theta(a), m.omega()) == Rational(0));
      for (int b = a + 1; b <= 5; ++b)
        CHECK(m.frame().form_inner(m.theta(a), m.theta(b)) == Rational(0));
    }
  }
}

TEST_CASE("musical isomorphisms invert each other") {
  const auto fr = BasisFrame<Rational>::psi_frame();
  RationalRng rng(31);
  for (int t = 0; t < 50; ++t) {
    const auto alpha = random_form(rng, 1);
    const auto v = fr.sharp(alpha);
    CHECK(fr.flat(v) == alpha);
    // alpha(w) = <sharp(alpha), w>
    for (int i = 0; i < 4; ++i) {
      Vec4<Rational> w = vec_zero<Rational>();
      w[i] = Rational(1);
      CHECK(alpha.get({i}) == fr.vec_inner(v, w));
    }
  }
}

TEST_CASE("float star agrees with exact star to 1e-12") {
  const auto fre = BasisFrame<Rational>::psi_frame();
  const auto frf = BasisFrame<double>::psi_frame();
  RationalRng rng(37);
  for (int deg = 1; deg <= 3; ++deg)
    for (int t = 0; t < 20; ++t) {
      const auto f = random_form(rng, deg);
      KForm<double> fd(deg);
      for (int i = 0; i < basis4::count(deg); ++i)
        fd[i] = rational_to_double(f[i]);
      const auto se = fre.hodge_star(f);
      const auto sf = frf.hodge_star(fd);
      for (int i = 0; i < basis4::count(4 - deg); ++i)
        CHECK(std::abs(sf[i] - rational_to_double(se[i])) <= 1e-12);
    }
}
