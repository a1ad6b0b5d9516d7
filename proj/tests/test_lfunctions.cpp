#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffeis/builtin.hpp"
#include "ffeis/errors.hpp"
#include "ffeis/l_function.hpp"
#include "oracles.hpp"

using namespace ffeis;

namespace {

// FE-valid degree-4 entry over q = 2: c_3 = 2 c_1, c_4 = 4.
LEtaFunction l_degree4() { return LEtaFunction(2, IntPolynomial({1, 1, 2, 2, 4})); }

LEtaFunction l_f3() { return LEtaFunction(3, IntPolynomial({1, 0, 3})); }

}  // namespace

TEST_CASE("functional equation checker") {
  CHECK(check_functional_equation(2, IntPolynomial({1})));
  CHECK(check_functional_equation(2, IntPolynomial({1, -2, 2})));
  CHECK(check_functional_equation(2, IntPolynomial({1, 3, 2})));
  CHECK(!check_functional_equation(2, IntPolynomial({1, 1})));  // odd degree
  CHECK(!check_functional_equation(2, IntPolynomial({1, 3, 3})));
  CHECK(!check_functional_equation(2, IntPolynomial()));
  CHECK(!check_functional_equation(3, IntPolynomial({1, -2, 2})));  // wrong q

  CHECK_THROWS_AS(LEtaFunction(2, IntPolynomial({1, 3, 3})), Error);
  CHECK_THROWS_AS(LEtaFunction(2, IntPolynomial({2, 3, 8})), Error);  // c_0 != 1
}

TEST_CASE("companion matrix realizes the L-polynomial") {
  SUBCASE("trivial module") {
    const FrobeniusModule module = build_frobenius_module(builtin::l_trivial());
    CHECK(module.dim() == 0);
  }

  SUBCASE("quadratic fixture") {
    const FrobeniusModule module = build_frobenius_module(builtin::l_q2());
    REQUIRE(module.dim() == 2);
    // companion of t^2 - 2t + 2
    CHECK(module.matrix().at(0, 0) == 0);
    CHECK(module.matrix().at(0, 1) == -2);
    CHECK(module.matrix().at(1, 0) == 1);
    CHECK(module.matrix().at(1, 1) == 2);
  }

  SUBCASE("det(I - T M) = L(T) by the cofactor oracle") {
    for (const LEtaFunction& l : {builtin::l_q2(), l_degree4(), l_f3(),
                                  LEtaFunction(2, IntPolynomial({1, 0, 0, 0, 16, 0, 0, 0, 16}))}) {
      const FrobeniusModule module = build_frobenius_module(l);
      const oracles::QPoly det = oracles::det_i_minus_tm(module.matrix());
      REQUIRE(det.size() == static_cast<size_t>(l.w()) + 1);
      for (size_t k = 0; k < det.size(); ++k) {
        CHECK(det[k] == Rational(l.coeffs().coeff(static_cast<int>(k))));
      }
    }
  }

  SUBCASE("L(0,eta) = 0 is rejected") {
    // 1 - 3T + 2T^2 is FE-valid over q = 2 but vanishes at T = 1.
    CHECK(check_functional_equation(2, IntPolynomial({1, -3, 2})));
    CHECK_THROWS_AS(build_frobenius_module(LEtaFunction(2, IntPolynomial({1, -3, 2}))),
                    Error);
  }
}

TEST_CASE("trace functionals") {
  const FrobeniusModule trivial = build_frobenius_module(builtin::l_trivial());
  CHECK(trace_functional(trivial, 0, 0) == 0);
  CHECK(trace_functional(trivial, 3, 2) == 0);

  const FrobeniusModule module = build_frobenius_module(builtin::l_q2());
  // Exact-matrix oracle: M(I-M)^{-1} = [[-2,-2],[1,0]] has trace -2, and
  // (I-M)^{-2} = -I so Tr(M (I-M)^{-2}) = -Tr(M) = -2.
  CHECK(trace_functional(module, 1, 1) == -2);
  CHECK(trace_functional(module, 1, 2) == -2);
  CHECK(trace_functional(module, 0, 0) == 2);  // dim V

  SUBCASE("pure powers match Newton's identities") {
    for (const LEtaFunction& l : {builtin::l_q2(), l_degree4(), l_f3()}) {
      const FrobeniusModule m = build_frobenius_module(l);
      std::vector<Rational> monic;
      for (int k = 0; k <= l.w(); ++k) {
        monic.emplace_back(l.coeffs().coeff(k));
      }
      const auto power_sums = oracles::newton_power_sums(monic, 6);
      for (int a = 1; a <= 6; ++a) {
        CHECK(trace_functional(m, static_cast<unsigned>(a), 0) ==
              power_sums[static_cast<size_t>(a)]);
      }
    }
  }
}

TEST_CASE("log Taylor expansion, two routes") {
  SUBCASE("trivial L gives the zero series") {
    CHECK(log_taylor_direct(builtin::l_trivial(), 6) == TruncatedSeries(6));
    CHECK(log_taylor_trace(build_frobenius_module(builtin::l_trivial()), 6) ==
          TruncatedSeries(6));
  }

  SUBCASE("quadratic fixture, first coefficient") {
    const TruncatedSeries s = log_taylor_direct(builtin::l_q2(), 1);
    CHECK(s.coeff(0) == 0);
    CHECK(s.coeff(1) == -2);
  }

  SUBCASE("routes agree through order 8") {
    for (const LEtaFunction& l : {builtin::l_q2(), l_degree4(), l_f3()}) {
      const FrobeniusModule module = build_frobenius_module(l);
      CHECK(log_taylor_direct(l, 8) == log_taylor_trace(module, 8));
    }
  }

  SUBCASE("negative L(0) is allowed with a warning flag only") {
    const LEtaFunction synthetic(2, IntPolynomial({1, -4, 2}));
    CHECK(synthetic.value_at_one() == -1);
    CHECK(!synthetic.value_at_one_positive());
    const FrobeniusModule module = build_frobenius_module(synthetic);
    CHECK(log_taylor_direct(synthetic, 6) == log_taylor_trace(module, 6));
  }
}
