#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffeis/builtin.hpp"
#include "ffeis/degrees.hpp"
#include "ffeis/errors.hpp"
#include "oracles.hpp"

using namespace ffeis;

namespace {

Rational rat(long n, long d) { return make_rational(Integer(n), Integer(d)); }

}  // namespace

TEST_CASE("analytic degree route") {
  SUBCASE("trivial L gives 2 d^r") {
    for (int r = 0; r <= 5; ++r) {
      CHECK(degree_constant_analytic(builtin::l_trivial(), 3, r) ==
            2 * pow_rational(Rational(3), r));
    }
  }

  CHECK(degree_constant_analytic(builtin::l_q2(), 6, 1) == 4);
  CHECK(degree_constant_analytic(builtin::l_q2(), 6, 2) == 24);

  SUBCASE("matches the symbolic differentiation oracle") {
    // 2 q^{ds} L(2s) = 2 sum_j c_j e^{(d-2j)u}
    for (long d : {-4L, 0L, 5L, 6L}) {
      oracles::ExpSum sum;
      for (int j = 0; j <= builtin::l_q2().w(); ++j) {
        sum.add(Rational(2) * Rational(builtin::l_q2().coeffs().coeff(j)),
                Rational(d - 2 * j));
      }
      for (int r = 0; r <= 6; ++r) {
        CHECK(degree_constant_analytic(builtin::l_q2(), d, r) ==
              sum.derivative_at_zero(r));
      }
    }
  }
}

TEST_CASE("combinatorial degree route") {
  CHECK(degree_constant_combinatorial(builtin::l_q2(), 6, 1) == 4);
  CHECK(degree_constant_combinatorial(builtin::l_q2(), 6, 2) == 24);
  for (int r = 0; r <= 5; ++r) {
    CHECK(degree_constant_combinatorial(builtin::l_trivial(), 3, r) ==
          2 * pow_rational(Rational(3), r));
  }
  CHECK_THROWS_AS(degree_constant_combinatorial(builtin::l_q2(), 6, 9), Error);
}

TEST_CASE("the two degree routes agree") {
  for (const long d : {-6L, -1L, 0L, 3L, 6L, 8L}) {
    const auto reports = cross_check_degrees(builtin::l_q2(), d, 6, +1);
    REQUIRE(reports.size() == 7);
    for (const auto& row : reports) {
      CHECK(row.agree);
      CHECK(row.analytic == row.combinatorial);
      CHECK(row.parity_ok == (row.r % 2 == 0));
    }
  }
  // A curve-derived L over q = 3.
  const LEtaFunction l_f3(3, IntPolynomial({1, 0, 3}));
  for (const auto& row : cross_check_degrees(l_f3, 5, 5, -1)) {
    CHECK(row.agree);
  }
}

TEST_CASE("nonsingular density degrees") {
  const DensityPolynomial unit({Rational(1)});
  CHECK(degree_nonsingular(unit, 0, 0) == 1);
  for (int r = 1; r <= 6; ++r) {
    CHECK(degree_nonsingular(unit, 0, r) == 0);
  }
  CHECK(degree_nonsingular(DensityPolynomial({Rational(1), Rational(1)}), 1, 2) == 2);
  const DensityPolynomial spread({Rational(1), Rational(0), Rational(1)});
  CHECK(degree_nonsingular(spread, 2, 2) == 8);
  CHECK_THROWS_AS(degree_nonsingular(spread, 1, 2), Error);
}

TEST_CASE("component halving") {
  const DensityPolynomial spread({Rational(1), Rational(0), Rational(1)});
  CHECK(epsilon_component_degree(spread, 2, 2) == 4);
  CHECK(epsilon_component_degree(spread, 2, 4) * 2 ==
        degree_nonsingular(spread, 2, 4));
  CHECK_THROWS_AS(epsilon_component_degree(spread, 2, 1), Error);
  CHECK_THROWS_AS(epsilon_component_degree(spread, 2, 3), Error);
  CHECK_THROWS_AS(epsilon_component_degree(spread, 2, 0), Error);
}

TEST_CASE("term-wise comparison") {
  SUBCASE("unit density at d = 0, r = 0") {
    const ConstantTermProfile profile(builtin::l_trivial(),
                                      FourierContext(1, 2, 0, 0, 0, +1));
    const auto report =
        termwise_comparison(profile, {{"a0", DensityPolynomial({Rational(1)})}}, 0);
    REQUIRE(report.entries.size() == 2);
    CHECK(report.all_equal);
    CHECK(report.entries[1].derivative == QSqrtScalar::one(2));
  }

  SUBCASE("fixture constant term at r = 2: derivative 3 = (1/8) * 24") {
    const auto report = termwise_comparison(builtin::profile_d6(), {}, 2);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.all_equal);
    CHECK(report.entries[0].derivative == QSqrtScalar::of(2, Rational(3)));
    CHECK(report.entries[0].expected == QSqrtScalar::of(2, Rational(3)));
  }

  SUBCASE("off-parity constant rows compare against zero") {
    const auto report = termwise_comparison(builtin::profile_d6(), {}, 1);
    CHECK(report.all_equal);
    CHECK(report.entries[0].derivative.is_zero());
  }

  SUBCASE("all fixtures, r <= 6, with density rows") {
    const std::vector<std::pair<std::string, DensityPolynomial>> terms = {
        {"a1", DensityPolynomial({Rational(1)})},
        {"a2", DensityPolynomial({Rational(1), rat(-1, 2), Rational(3)})},
    };
    for (int r = 0; r <= 6; ++r) {
      CHECK(termwise_comparison(builtin::profile_d6(), terms, r).all_equal);
    }
  }

  SUBCASE("eta = -1 with odd d") {
    const ConstantTermProfile profile(builtin::l_q2(),
                                      FourierContext(1, 2, 2, 6, 1, -1));
    REQUIRE(profile.ctx.d() == 7);
    for (int r = 0; r <= 6; ++r) {
      const auto report = termwise_comparison(
          profile, {{"a1", DensityPolynomial({Rational(2), Rational(-5)})}}, r);
      CHECK(report.all_equal);
    }
  }
}

TEST_CASE("CM families") {
  const ConstantTermProfile w6 = builtin::profile_d6();
  const ConstantTermProfile d4(builtin::l_trivial(), FourierContext(1, 2, 0, 4, 0, +1));

  SUBCASE("components must share q") {
    const ConstantTermProfile f3(LEtaFunction(3, IntPolynomial({1, 0, 3})),
                                 FourierContext(1, 3, 2, 2, 0, +1));
    CHECK_THROWS_AS(CoverFamily({w6, f3}), Error);
    CHECK_THROWS_AS(CoverFamily({}), Error);
  }

  SUBCASE("single component reduces to the profile derivative") {
    const CoverFamily family({w6});
    for (int r = 0; r <= 4; ++r) {
      CHECK(cm_intersection(family, r) ==
            fourier_higher_derivative(constant_term(w6), r));
      CHECK(cm_refined(family, {r}) == cm_intersection(family, r));
    }
  }

  SUBCASE("two copies of the fixture at r = 2") {
    const CoverFamily family({w6, w6});
    // multi-index (1,1): product of the r = 1 values, both zero by symmetry
    CHECK(cm_refined(family, {1, 1}).is_zero());
    // Leibniz by hand: 2 * W''(0) * W(0) + 2 * (W'(0))^2 with W(0) = 1/4,
    // second derivative 3 (summation oracle), first derivative 0.
    CHECK(cm_intersection(family, 2) == QSqrtScalar::of(2, rat(3, 2)));
    CHECK_THROWS_AS(cm_refined(family, {1}), Error);
    CHECK_THROWS_AS(cm_refined(family, {-1, 3}), Error);
  }

  SUBCASE("Leibniz consistency for families of 1 to 3 components") {
    CHECK(cm_leibniz_check(CoverFamily({w6}), 4));
    CHECK(cm_leibniz_check(CoverFamily({w6, d4}), 4));
    CHECK(cm_leibniz_check(CoverFamily({w6, d4, w6}), 4));
  }

  SUBCASE("odd-d components bring sqrt(q) parts through the product") {
    const ConstantTermProfile odd(builtin::l_q2(), FourierContext(1, 2, 2, 6, 1, -1));
    const CoverFamily family({odd, w6});
    CHECK(cm_leibniz_check(family, 3));
    // odd + even offset: the product profile lives in sqrt(2) Q
    const QSqrtScalar v = cm_intersection(family, 1);
    CHECK(v.a() == 0);
  }
}
