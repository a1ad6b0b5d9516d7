// Property-style runs of the identity chain on randomly generated
// functional-equation-valid L-polynomials, not just the bundled fixtures.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ffeis/degrees.hpp"
#include "ffeis/errors.hpp"
#include "oracles.hpp"

using namespace ffeis;

namespace {

// Degree-2 entries [1, c, q] and degree-4 entries [1, a, b, qa, q^2] satisfy
// the functional equation for any integer middle coefficients; only
// L(1) != 0 is filtered.
std::vector<LEtaFunction> random_l_functions(int count) {
  oracles::Lcg rng(2024);
  std::vector<LEtaFunction> out;
  const long qs[] = {2, 3, 5};
  while (static_cast<int>(out.size()) < count) {
    const long q = qs[rng.next(0, 2)];
    IntPolynomial coeffs;
    if (rng.next(0, 1) == 0) {
      const long c = rng.next(-6, 6);
      coeffs = IntPolynomial({Integer(1), Integer(c), Integer(q)});
    } else {
      const long a = rng.next(-4, 4);
      const long b = rng.next(-8, 8);
      coeffs = IntPolynomial(
          {Integer(1), Integer(a), Integer(b), Integer(q) * a, Integer(q) * q});
    }
    if (coeffs.eval(Rational(1)) == 0) continue;
    out.emplace_back(q, std::move(coeffs));
  }
  return out;
}

}  // namespace

TEST_CASE("identity chain holds on random FE-valid L-polynomials") {
  for (const LEtaFunction& l : random_l_functions(10)) {
    CAPTURE(l.q());
    const FrobeniusModule module = build_frobenius_module(l);
    CHECK(log_taylor_direct(l, 8) == log_taylor_trace(module, 8));
    for (long d : {-3L, 2L, 7L}) {
      PermSumContext ctx(module, d);
      CHECK(check_exp_identity(ctx, 5));
      CHECK(check_closed_form(ctx, 5));
      for (const auto& row : cross_check_degrees(l, d, 5)) {
        CHECK(row.agree);
      }
    }
  }
}

TEST_CASE("huge coefficients stay exact") {
  // c_1 far outside the root bound: not geometric, but the formal
  // identities are polynomial in the coefficients and must hold exactly.
  const Integer big("1000000000000");
  const LEtaFunction l(2, IntPolynomial({Integer(1), big, Integer(2)}));
  const FrobeniusModule module = build_frobenius_module(l);
  CHECK(log_taylor_direct(l, 6) == log_taylor_trace(module, 6));
  PermSumContext ctx(module, 4);
  CHECK(check_exp_identity(ctx, 4));
  CHECK(check_closed_form(ctx, 4));
  CHECK(degree_constant_analytic(l, 4, 3) ==
        degree_constant_combinatorial(l, 4, 3));
}

TEST_CASE("constant-term symmetry on random profiles") {
  oracles::Lcg rng(99);
  for (const LEtaFunction& l : random_l_functions(8)) {
    const int eta = rng.next(0, 1) == 0 ? 1 : -1;
    const long deg_l = rng.next(0, 6);
    const long deg_e = rng.next(-2, 2);
    const ConstantTermProfile profile(
        l, FourierContext(1, l.q(), l.w(), deg_l, deg_e, eta));
    CHECK(check_constant_term_symmetry(profile));
    // off-parity normalized derivatives vanish
    const LaurentProfile w = constant_term(profile);
    for (int r = 0; r <= 5; ++r) {
      if (((r % 2 == 0) ? 1 : -1) != eta) {
        CHECK(fourier_higher_derivative(w, r).is_zero());
      }
    }
  }
}
