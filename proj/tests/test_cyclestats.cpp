#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffeis/builtin.hpp"
#include "ffeis/cycle_polynomials.hpp"
#include "ffeis/errors.hpp"
#include "ffeis/perm_sums.hpp"
#include "oracles.hpp"

using namespace ffeis;

namespace {

PermSumContext ctx_q2(long d) {
  return PermSumContext(build_frobenius_module(builtin::l_q2()), d);
}

PermSumContext ctx_trivial(long d) {
  return PermSumContext(build_frobenius_module(builtin::l_trivial()), d);
}

}  // namespace

TEST_CASE("delta statistic") {
  CHECK(delta(CyclicPermutation({1})) == 1);
  CHECK(delta(CyclicPermutation({2, 3, 1})) == 1);
  CHECK(delta(CyclicPermutation({3, 1, 2})) == 2);

  CHECK_THROWS_AS(CyclicPermutation({1, 2}), Error);      // two cycles
  CHECK_THROWS_AS(CyclicPermutation({2, 1, 3}), Error);   // fixed point
  CHECK_THROWS_AS(CyclicPermutation({3, 3, 1}), Error);   // not a bijection
  CHECK_THROWS_AS(CyclicPermutation({4, 1, 2}), Error);   // out of range
}

TEST_CASE("cycle polynomials") {
  CHECK(f_poly_recursive(1).to_text() == "x");
  CHECK(f_poly_recursive(2).to_text() == "x");
  CHECK(f_poly_recursive(3).to_text() == "x + x^2");
  CHECK(f_poly_recursive(4).to_text() == "x + 4*x^2 + x^3");

  SUBCASE("enumeration equals the recursion for n <= 9") {
    for (int n = 1; n <= 9; ++n) {
      CHECK(f_poly_enumerated(n) == f_poly_recursive(n));
    }
  }

  SUBCASE("coefficients count all cyclic permutations") {
    // The constructor enforces sum a_i = (n-1)!; just build them.
    for (int n = 1; n <= 12; ++n) {
      CHECK(f_poly_recursive(n).n() == n);
    }
  }

  CHECK_THROWS_AS(f_poly_enumerated(11), Error);
  CHECK_THROWS_AS(f_poly_recursive(0), Error);
}

TEST_CASE("derivative identity for log(1 - alpha e^{-u})") {
  // n! [u^n] log(1 - alpha e^{-u}) = (-1)^{n-1} f_n(alpha) / (1-alpha)^n.
  auto rat = [](long n, long d) { return make_rational(Integer(n), Integer(d)); };
  const std::vector<Rational> alphas = {rat(1, 2), Rational(-1), Rational(3), rat(2, 7)};
  for (const Rational& alpha : alphas) {
    // (1 - alpha e^{-u}) / (1 - alpha): constant term exactly 1.
    TruncatedSeries f =
        poly_eval_exponential(IntPolynomial({1, -1}), -1, alpha, 9) / (1 - alpha);
    const TruncatedSeries log_f = series_log(f);
    Rational factorial(1);
    for (int n = 1; n <= 9; ++n) {
      factorial *= n;
      const Rational lhs = log_f.coeff(n) * factorial;
      const Rational rhs = pow_rational(Rational(-1), n - 1) *
                           f_poly_recursive(n).eval(alpha) /
                           pow_rational(1 - alpha, n);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("cycle weights Gamma_ell") {
  CHECK(gamma_ell(ctx_trivial(6), 1) == -3);
  CHECK(gamma_ell(ctx_q2(6), 1) == -1);   // 2 - 3
  CHECK(gamma_ell(ctx_q2(6), 2) == 2);    // -Tr(phi (1-phi)^{-2})
  CHECK(gamma_ell(ctx_trivial(6), 2) == 0);

  SUBCASE("matches direct cycle enumeration") {
    const PermSumContext ctx = ctx_q2(4);
    for (int ell = 2; ell <= 6; ++ell) {
      Rational total(0);
      for_each_cyclic(ell, [&](const CyclicPermutation& c) {
        total -= trace_functional(ctx.module, static_cast<unsigned>(delta(c)),
                                  static_cast<unsigned>(ell));
      });
      CHECK(gamma_ell(ctx, ell) == total);
    }
  }
}

TEST_CASE("permutation weights a_g") {
  const PermSumContext ctx = ctx_q2(6);
  CHECK(a_g(ctx, {1, 2}) == 1);  // (2 - 3)^2
  CHECK(a_g(ctx, {2, 1}) == 2);  // transposition
  CHECK(a_g(ctx_trivial(6), {2, 1}) == 0);
  CHECK(a_g(ctx_trivial(6), {1}) == -3);

  CHECK_THROWS_AS(a_g(ctx, {2, 2}), Error);

  SUBCASE("depends only on cycle type and relative order") {
    // (2 4) fixing {1, 3} and (1 3) fixing {2, 4} carry the same weight.
    CHECK(a_g(ctx, {1, 4, 3, 2}) == a_g(ctx, {3, 2, 1, 4}));
    // 3-cycles with the same relative rotation pattern.
    CHECK(a_g(ctx, {2, 3, 1, 4}) == a_g(ctx, {1, 3, 4, 2}));
  }
}

TEST_CASE("permutation sums") {
  CHECK(perm_sum(ctx_q2(6), 0) == 1);
  CHECK(perm_sum(ctx_q2(6), 1) == -1);
  CHECK(perm_sum(ctx_q2(6), 2) == 3);

  SUBCASE("trivial module leaves only the identity") {
    for (int r = 0; r <= 5; ++r) {
      CHECK(perm_sum(ctx_trivial(6), r) == pow_rational(Rational(-3), r));
      CHECK(perm_sum(ctx_trivial(-4), r) == pow_rational(Rational(2), r));
    }
  }

  CHECK_THROWS_AS(perm_sum(ctx_q2(6), 9), Error);
  CHECK_THROWS_AS(perm_sum(ctx_q2(6), -1), Error);
}

TEST_CASE("generating-function identities") {
  SUBCASE("exponential identity") {
    CHECK(check_exp_identity(ctx_trivial(6), 6));
    CHECK(check_exp_identity(ctx_q2(6), 6));
    CHECK(check_exp_identity(ctx_q2(-3), 6));
  }

  SUBCASE("closed form") {
    CHECK(check_closed_form(ctx_trivial(6), 6));
    CHECK(check_closed_form(ctx_q2(6), 4));
    CHECK(check_closed_form(ctx_q2(5), 6));  // odd d exercises half-integers
  }

  SUBCASE("perturbing one cycle weight breaks the identity") {
    const PermSumContext ctx = ctx_q2(6);
    const int order = 5;
    std::vector<Rational> lhs(order + 1, Rational(0));
    std::vector<Rational> gamma_egf(order + 1, Rational(0));
    Rational factorial(1);
    for (int r = 0; r <= order; ++r) {
      if (r >= 1) factorial *= r;
      lhs[static_cast<size_t>(r)] = perm_sum(ctx, r) / factorial;
      if (r >= 1) gamma_egf[static_cast<size_t>(r)] = gamma_ell(ctx, r) / factorial;
    }
    gamma_egf[2] += make_rational(Integer(1), Integer(2));  // Gamma_2 += 1
    CHECK(series_exp(TruncatedSeries(gamma_egf)) != TruncatedSeries(lhs));
  }
}
