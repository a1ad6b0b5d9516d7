// Acceptance suite: every identity the library promises, run end to end at
// exact (zero-tolerance) equality, one PASS/FAIL line per criterion. Exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "ffeis/builtin.hpp"
#include "ffeis/cycle_polynomials.hpp"
#include "ffeis/degrees.hpp"
#include "ffeis/errors.hpp"
#include "ffeis/verify.hpp"
#include "oracles.hpp"

using namespace ffeis;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double time_limit_s,
               const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (error.empty() && time_limit_s > 0 && elapsed > time_limit_s) {
    std::ostringstream message;
    message << "runtime " << elapsed << "s exceeds limit " << time_limit_s << "s";
    error = message.str();
  }
  if (error.empty()) {
    std::cout << "PASS  criterion " << number << ": " << title << "  ["
              << elapsed << "s]\n";
  } else {
    std::cout << "FAIL  criterion " << number << ": " << title << " — " << error
              << "\n";
    ++failures;
  }
}

void expect(bool condition, const std::string& message) {
  if (!condition) {
    throw std::runtime_error(message);
  }
}

Rational rat(long n, long d) { return make_rational(Integer(n), Integer(d)); }

LEtaFunction curve_l() {
  // Frozen from the F_3 split-cover fixture; re-derived in criterion 8.
  return LEtaFunction(3, IntPolynomial({1, 0, 3}));
}

}  // namespace

int main() {
  // 1. Cycle polynomials: recursion equals enumeration for n <= 9.
  criterion(1, "f_n recursion = enumeration, n <= 9", 5.0, [] {
    expect(f_poly_recursive(1).to_text() == "x", "f_1 != x");
    expect(f_poly_recursive(2).to_text() == "x", "f_2 != x");
    expect(f_poly_recursive(3).to_text() == "x + x^2", "f_3 != x + x^2");
    for (int n = 1; n <= 9; ++n) {
      expect(f_poly_recursive(n) == f_poly_enumerated(n),
             "mismatch at n = " + std::to_string(n));
    }
  });

  // 2. Derivative identity of the cycle polynomials.
  criterion(2, "n! [u^n] log(1 - a e^{-u}) = (-1)^{n-1} f_n(a)/(1-a)^n", 5.0, [] {
    const std::vector<Rational> alphas = {rat(1, 2), Rational(-1), Rational(3),
                                          rat(2, 7)};
    for (const Rational& alpha : alphas) {
      TruncatedSeries f =
          poly_eval_exponential(IntPolynomial({1, -1}), -1, alpha, 9) / (1 - alpha);
      const TruncatedSeries log_f = series_log(f);
      Rational factorial(1);
      for (int n = 1; n <= 9; ++n) {
        factorial *= n;
        expect(log_f.coeff(n) * factorial ==
                   pow_rational(Rational(-1), n - 1) *
                       f_poly_recursive(n).eval(alpha) /
                       pow_rational(1 - alpha, n),
               "mismatch at alpha = " + to_string(alpha) + ", n = " +
                   std::to_string(n));
      }
    }
  });

  // 3. Taylor expansion of log L by two routes through order 8.
  criterion(3, "log L Taylor: direct = trace route, order 8", 10.0, [] {
    for (const LEtaFunction& l : {builtin::l_q2(), curve_l(), builtin::l_trivial()}) {
      const FrobeniusModule module = build_frobenius_module(l);
      expect(log_taylor_direct(l, 8) == log_taylor_trace(module, 8),
             "route mismatch over q = " + std::to_string(l.q()));
    }
  });

  // 4. Generating identities through order 6 for d in {-3..6}.
  criterion(4, "EGF exponential identity and closed form, order 6", 30.0, [] {
    for (long d = -3; d <= 6; ++d) {
      PermSumContext ctx(build_frobenius_module(builtin::l_q2()), d);
      expect(check_exp_identity(ctx, 6), "exp identity fails at d = " + std::to_string(d));
      expect(check_closed_form(ctx, 6), "closed form fails at d = " + std::to_string(d));
      PermSumContext trivial(build_frobenius_module(builtin::l_trivial()), d);
      expect(check_exp_identity(trivial, 6),
             "trivial exp identity fails at d = " + std::to_string(d));
      expect(check_closed_form(trivial, 6),
             "trivial closed form fails at d = " + std::to_string(d));
    }
  });

  // 5. Degree two-route agreement with pinned anchors.
  criterion(5, "degree routes agree for r <= 6, d in [-6, 8]", 60.0, [] {
    expect(degree_constant_analytic(builtin::l_q2(), 6, 1) == 4, "anchor r=1 != 4");
    expect(degree_constant_analytic(builtin::l_q2(), 6, 2) == 24, "anchor r=2 != 24");
    expect(degree_constant_combinatorial(builtin::l_q2(), 6, 1) == 4,
           "combinatorial anchor r=1 != 4");
    expect(degree_constant_combinatorial(builtin::l_q2(), 6, 2) == 24,
           "combinatorial anchor r=2 != 24");
    for (const LEtaFunction& l : {builtin::l_q2(), builtin::l_trivial(), curve_l()}) {
      for (long d = -6; d <= 8; ++d) {
        for (const auto& row : cross_check_degrees(l, d, 6)) {
          expect(row.agree, "routes disagree: q = " + std::to_string(l.q()) +
                                ", d = " + std::to_string(d) +
                                ", r = " + std::to_string(row.r));
        }
      }
    }
  });

  // 6. Constant-term symmetry and the pinned r = 2 derivative.
  criterion(6, "constant-term symmetry; fixture r=2 derivative = 3", 10.0, [] {
    expect(check_constant_term_symmetry(builtin::profile_d6()),
           "fixture profile not symmetric");
    const QSqrtScalar derivative =
        fourier_higher_derivative(constant_term(builtin::profile_d6()), 2);
    expect(derivative == QSqrtScalar::of(2, Rational(3)), "r=2 derivative != 3");
    expect(QSqrtScalar::half_power(2, -6) * degree_constant_analytic(builtin::l_q2(), 6, 2) ==
               derivative,
           "q^{-d/2} * 24 != 3");
    // Curve-derived profile.
    const ConstantTermProfile curve_profile(
        curve_l(), FourierContext(1, 3, 2, 4, 0, +1));
    expect(check_constant_term_symmetry(curve_profile),
           "curve profile not symmetric");
  });

  // 7. Off-parity vanishing for symmetric profiles.
  criterion(7, "off-parity derivatives vanish, r <= 6", 5.0, [] {
    const LaurentProfile w = constant_term(builtin::profile_d6());
    const ConstantTermProfile negative(builtin::l_q2(),
                                       FourierContext(1, 2, 2, 5, 1, -1));
    const LaurentProfile w_neg = constant_term(negative);
    for (int r = 0; r <= 6; ++r) {
      if (r % 2 == 1) {
        expect(fourier_higher_derivative(w, r).is_zero(),
               "odd derivative of even profile nonzero at r = " + std::to_string(r));
      } else if (r > 0) {
        expect(fourier_higher_derivative(w_neg, r).is_zero(),
               "even derivative of odd profile nonzero at r = " + std::to_string(r));
      }
    }
    const DensityPolynomial symmetric(
        {Rational(1), Rational(-2), Rational(2), Rational(-2), Rational(1)}, +1);
    const FourierContext ctx(1, 3, 2, 2, 0, +1);
    for (int r = 1; r <= 6; r += 2) {
      expect(fourier_higher_derivative(nonsingular_term(ctx, symmetric), r).is_zero(),
             "symmetric density has nonzero odd derivative");
    }
  });

  // 8. Full curve pipeline on the F_3 fixture, counts through i = 12.
  criterion(8, "curve pipeline: counts -> zeta -> L -> verify", 60.0, [] {
    const SplitCoverModel model = builtin::cover_model_f3();
    expect(model.genus_base() == 2, "fixture genus != 2");
    const int i_max = 2 * (2 * model.genus_cover());
    PointCounts base{model.p, {}}, cover{model.p, {}};
    for (int i = 1; i <= i_max; ++i) {
      base.counts.push_back(count_points(model, CurveSheet::base, i));
      cover.counts.push_back(count_points(model, CurveSheet::cover, i));
    }
    const ZetaData zeta_base = zeta_from_counts(base, model.genus_base());
    const ZetaData zeta_cover = zeta_from_counts(cover, model.genus_cover());
    const LEtaFunction l = LEtaFunction::from_cover_pair(zeta_base, zeta_cover);
    expect(l.w() == 2, "deg L != 2");
    expect(l == curve_l(), "pipeline L differs from the frozen fixture");

    VerifyBundle bundle = builtin_bundle();
    const VerifyReport report = verify_all(bundle);
    expect(report.all_pass, "verify suite failed on the fixture bundle");
    expect(report.checks.size() == 11, "verify suite does not run 11 checks");
  });

  // 9. CM products: the multinomial Leibniz refinement on families built
  // from the bundled quadratic-L profiles (d = 6 and d = 4), plus a
  // trivial-L component for variety.
  criterion(9, "CM intersection = multinomial sum of refined terms, r <= 4", 30.0, [] {
    const ConstantTermProfile w6 = builtin::profile_d6();
    const ConstantTermProfile l2_d4(builtin::l_q2(),
                                    FourierContext(1, 2, 2, 3, 1, +1));
    const ConstantTermProfile trivial_d4(builtin::l_trivial(),
                                         FourierContext(1, 2, 0, 4, 0, +1));
    expect(cm_leibniz_check(CoverFamily({w6}), 4), "1 component fails");
    expect(cm_leibniz_check(CoverFamily({w6, l2_d4}), 4), "2 components fail");
    expect(cm_leibniz_check(CoverFamily({w6, l2_d4, w6}), 4), "3 components fail");
    expect(cm_leibniz_check(CoverFamily({w6, l2_d4, trivial_d4}), 4),
           "mixed family fails");
    expect(cm_intersection(CoverFamily({w6, w6}), 2) ==
               QSqrtScalar::of(2, rat(3, 2)),
           "two-copy r=2 product value != 3/2");
  });

  // 10. Density operator values and the component-halving domain.
  criterion(10, "density operator anchors and halving domain", 5.0, [] {
    const DensityPolynomial unit({Rational(1)});
    for (int r = 1; r <= 6; ++r) {
      expect(degree_nonsingular(unit, 0, r) == 0, "unit density r >= 1 nonzero");
    }
    expect(degree_nonsingular(DensityPolynomial({Rational(1), Rational(1)}), 1, 2) == 2,
           "d=1 r=2 anchor != 2");
    const DensityPolynomial spread({Rational(1), Rational(0), Rational(1)});
    for (int r = 2; r <= 6; r += 2) {
      expect(epsilon_component_degree(spread, 2, r) * 2 ==
                 degree_nonsingular(spread, 2, r),
             "halving fails at r = " + std::to_string(r));
    }
    for (int r : {0, 1, 3, 5}) {
      bool threw = false;
      try {
        epsilon_component_degree(spread, 2, r);
      } catch (const Error& e) {
        threw = e.code() == ErrorCode::HalvingHypothesisViolation;
      }
      expect(threw, "halving accepted illegal r = " + std::to_string(r));
    }
  });

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: FAILURES PRESENT")
            << "\n";
  return failures == 0 ? 0 : 1;
}
