#include "ffeis/verify.hpp"

#include <functional>
#include <sstream>

#include "ffeis/builtin.hpp"
#include "ffeis/cycle_polynomials.hpp"
#include "ffeis/errors.hpp"

namespace ffeis {

namespace {

struct PreparedL {
  LEtaFunction l;
  long deg_l_frak;
  long deg_e;
  int eta_l_sign;
  std::string name;
};

struct Prepared {
  std::vector<PreparedL> ls;
  std::vector<VerifyBundle::DensityEntry> densities;
  int order;
  int r_max;
};

long profile_d(const PreparedL& entry) {
  return entry.deg_l_frak + entry.l.w() - entry.deg_e;
}

ConstantTermProfile make_profile(const PreparedL& entry) {
  return ConstantTermProfile(
      entry.l, FourierContext(1, entry.l.q(), entry.l.w(), entry.deg_l_frak,
                              entry.deg_e, entry.eta_l_sign));
}

void run_check(VerifyReport& report, const std::string& code,
               const std::function<std::string()>& body) {
  VerifyCheck check;
  check.code = code;
  try {
    check.detail = body();
    check.pass = true;
  } catch (const Error& e) {
    check.detail = e.what();
    check.pass = false;
  }
  report.all_pass = report.all_pass && check.pass;
  report.checks.push_back(std::move(check));
}

void fail(const std::string& message) {
  throw Error(ErrorCode::FEViolation, message);
}

}  // namespace

VerifyBundle builtin_bundle() {
  VerifyBundle bundle;
  bundle.curves.push_back({builtin::cover_model_f3(), 4, 0, +1});
  bundle.lfunctions.push_back({2, builtin::l_q2().coeffs(), 5, 1, +1});
  bundle.lfunctions.push_back({2, builtin::l_trivial().coeffs(), 4, 0, +1});
  bundle.densities.push_back(
      {DensityPolynomial({Rational(1), Rational(0), Rational(1)}, +1), 2});
  bundle.densities.push_back(
      {DensityPolynomial({Rational(1), Rational(-2), Rational(2),
                          Rational(-2), Rational(1)},
                         +1),
       4});
  bundle.densities.push_back(
      {DensityPolynomial({Rational(1), Rational(-3), Rational(0), Rational(3),
                          Rational(-1)},
                         -1),
       4});
  // Unconstrained densities: these pad to any profile offset, so the
  // term-wise rows always have something to compare.
  bundle.densities.push_back({DensityPolynomial({Rational(1)}), 0});
  bundle.densities.push_back(
      {DensityPolynomial({Rational(1), Rational(2), Rational(-1)}), 2});
  return bundle;
}

VerifyBundle parse_bundle(const io::Json& value) {
  VerifyBundle bundle;
  if (!value.is_object()) {
    throw Error(ErrorCode::InputError, "bundle must be a JSON object");
  }
  if (value.contains("order")) bundle.order = value.at("order").get<int>();
  if (value.contains("r_max")) bundle.r_max = value.at("r_max").get<int>();
  if (value.contains("budget")) bundle.budget = value.at("budget").get<long>();
  auto ctx_field = [](const io::Json& entry, const char* name, long fallback) {
    return entry.contains(name) ? entry.at(name).get<long>() : fallback;
  };
  if (value.contains("curves")) {
    for (const auto& entry : value.at("curves")) {
      bundle.curves.push_back({io::parse_curve(entry),
                               ctx_field(entry, "degLfrak", 4),
                               ctx_field(entry, "degE", 0),
                               static_cast<int>(ctx_field(entry, "etaL", 1))});
    }
  }
  if (value.contains("lfunctions")) {
    for (const auto& entry : value.at("lfunctions")) {
      bundle.lfunctions.push_back(
          {io::require_field(entry, "q").get<long>(),
           io::parse_int_polynomial(io::require_field(entry, "L")),
           ctx_field(entry, "degLfrak", 4), ctx_field(entry, "degE", 0),
           static_cast<int>(ctx_field(entry, "etaL", 1))});
    }
  }
  if (value.contains("densities")) {
    for (const auto& entry : value.at("densities")) {
      const DensityPolynomial den = io::parse_density(entry);
      const long default_d = static_cast<long>(den.m().size()) - 1;
      bundle.densities.push_back({den, ctx_field(entry, "d", default_d)});
    }
  }
  return bundle;
}

VerifyReport verify_all(const VerifyBundle& bundle) {
  if (bundle.curves.empty() && bundle.lfunctions.empty()) {
    throw Error(ErrorCode::InputError,
                "empty bundle: nothing to verify (no curves, no L-functions)");
  }

  VerifyReport report;
  Prepared prep;
  prep.order = bundle.order;
  prep.r_max = bundle.r_max;
  prep.densities = bundle.densities;

  // 1/2: curve pipeline. Point counts feed the zeta validators; the exact
  // quotient gives the L-polynomial for the later checks.
  std::vector<std::pair<ZetaData, ZetaData>> zeta_pairs(bundle.curves.size(),
                                                        {ZetaData{}, ZetaData{}});
  run_check(report, "zeta_fe", [&] {
    std::ostringstream detail;
    for (size_t i = 0; i < bundle.curves.size(); ++i) {
      const auto& entry = bundle.curves[i];
      const int g_base = entry.model.genus_base();
      const int g_cover = entry.model.genus_cover();
      const int i_max = 2 * g_cover;
      PointCounts base{entry.model.p, {}}, cover{entry.model.p, {}};
      for (int j = 1; j <= i_max; ++j) {
        base.counts.push_back(
            count_points(entry.model, CurveSheet::base, j, bundle.budget));
        cover.counts.push_back(
            count_points(entry.model, CurveSheet::cover, j, bundle.budget));
      }
      // Throws CountInconsistency / ZetaFEViolation on failure.
      zeta_pairs[i] = {zeta_from_counts(base, g_base),
                       zeta_from_counts(cover, g_cover)};
      detail << (i ? "; " : "") << "curve " << i << ": P_X deg "
             << 2 * g_base << ", P_X' deg " << 2 * g_cover << " pass FE";
    }
    if (bundle.curves.empty()) detail << "no curve entries";
    return detail.str();
  });

  // 2: L admission. Curve pairs must divide exactly with degree 2g-2;
  // direct entries must pass the functional-equation validator. Entries
  // that fail are excluded from the later identity checks.
  run_check(report, "l_quotient", [&] {
    std::ostringstream detail;
    std::string failures;
    for (size_t i = 0; i < bundle.curves.size(); ++i) {
      if (zeta_pairs[i].first.q == 0) {
        fail("curve pipeline did not produce zeta data");
      }
      const auto& entry = bundle.curves[i];
      LEtaFunction l =
          LEtaFunction::from_cover_pair(zeta_pairs[i].first, zeta_pairs[i].second);
      prep.ls.push_back({l, entry.deg_l_frak, entry.deg_e, entry.eta_l_sign,
                         "curve" + std::to_string(i)});
      detail << "curve " << i << ": deg L = " << l.w() << "; ";
    }
    for (size_t i = 0; i < bundle.lfunctions.size(); ++i) {
      const auto& entry = bundle.lfunctions[i];
      try {
        prep.ls.push_back({LEtaFunction(entry.q, entry.coeffs), entry.deg_l_frak,
                           entry.deg_e, entry.eta_l_sign,
                           "l" + std::to_string(i)});
      } catch (const Error& e) {
        failures += std::string(failures.empty() ? "" : "; ") + "l" +
                    std::to_string(i) + ": " + e.what();
      }
    }
    if (!failures.empty()) {
      fail(failures);
    }
    detail << prep.ls.size() << " L-polynomial(s) admitted";
    return detail.str();
  });

  run_check(report, "log_taylor_two_route", [&] {
    for (const auto& entry : prep.ls) {
      FrobeniusModule module = build_frobenius_module(entry.l);
      if (log_taylor_direct(entry.l, prep.order) !=
          log_taylor_trace(module, prep.order)) {
        fail("log-Taylor routes disagree for " + entry.name);
      }
    }
    return "direct = trace through order " + std::to_string(prep.order);
  });

  run_check(report, "fn_two_route", [&] {
    for (int n = 1; n <= 9; ++n) {
      if (!(f_poly_recursive(n) == f_poly_enumerated(n))) {
        fail("f_" + std::to_string(n) + " recursion/enumeration mismatch");
      }
    }
    return std::string("f_n two routes agree for n <= 9");
  });

  run_check(report, "exp_identity", [&] {
    for (const auto& entry : prep.ls) {
      PermSumContext ctx(build_frobenius_module(entry.l), profile_d(entry));
      if (!check_exp_identity(ctx, std::min(prep.r_max, 6))) {
        fail("EGF exponential identity fails for " + entry.name);
      }
    }
    return std::string("EGF = exp(Gamma EGF) for every entry");
  });

  run_check(report, "closed_form", [&] {
    for (const auto& entry : prep.ls) {
      PermSumContext ctx(build_frobenius_module(entry.l), profile_d(entry));
      if (!check_closed_form(ctx, std::min(prep.r_max, 6))) {
        fail("closed-form series identity fails for " + entry.name);
      }
    }
    return std::string("EGF matches q^{ds/2} L(s)/L(0) for every entry");
  });

  run_check(report, "const_term_symmetry", [&] {
    for (const auto& entry : prep.ls) {
      if (!check_constant_term_symmetry(make_profile(entry))) {
        fail("constant-term symmetry fails for " + entry.name);
      }
    }
    return std::string("involution fixes every constant term up to eta(L_frak)");
  });

  run_check(report, "degree_two_route", [&] {
    for (const auto& entry : prep.ls) {
      const auto reports = cross_check_degrees(entry.l, profile_d(entry),
                                               prep.r_max, entry.eta_l_sign);
      for (const auto& row : reports) {
        if (!row.agree) {
          fail("degree routes disagree for " + entry.name + " at r=" +
               std::to_string(row.r));
        }
      }
    }
    return "analytic = combinatorial for r <= " + std::to_string(prep.r_max);
  });

  run_check(report, "termwise", [&] {
    for (const auto& entry : prep.ls) {
      const long d = profile_d(entry);
      std::vector<std::pair<std::string, DensityPolynomial>> terms;
      for (size_t i = 0; i < prep.densities.size(); ++i) {
        if (prep.densities[i].d <= d &&
            static_cast<long>(prep.densities[i].den.m().size()) <= d + 1) {
          // Only densities whose declared symmetry survives padding to d.
          try {
            prep.densities[i].den.padded(d);
          } catch (const Error&) {
            continue;
          }
          terms.emplace_back("den" + std::to_string(i), prep.densities[i].den);
        }
      }
      for (int r = 0; r <= prep.r_max; ++r) {
        const auto rep = termwise_comparison(make_profile(entry), terms, r);
        if (!rep.all_equal) {
          fail("term-wise comparison fails for " + entry.name + " at r=" +
               std::to_string(r));
        }
      }
    }
    return std::string("Fourier terms match their degree values term-wise");
  });

  run_check(report, "cm_leibniz", [&] {
    // Group the prepared profiles by q and form families of 1..3 components.
    for (size_t i = 0; i < prep.ls.size(); ++i) {
      std::vector<ConstantTermProfile> components = {make_profile(prep.ls[i])};
      for (size_t j = 0; j < prep.ls.size() && components.size() < 3; ++j) {
        if (prep.ls[j].l.q() == prep.ls[i].l.q() && j != i) {
          components.push_back(make_profile(prep.ls[j]));
        }
      }
      CoverFamily family(std::move(components));
      if (!cm_leibniz_check(family, std::min(prep.r_max, 4))) {
        fail("Leibniz refinement fails for the family anchored at " +
             prep.ls[i].name);
      }
    }
    return std::string("product derivatives match their multinomial sums");
  });

  run_check(report, "density_vanishing", [&] {
    for (size_t i = 0; i < prep.densities.size(); ++i) {
      const auto& entry = prep.densities[i];
      if (!entry.den.epsilon()) continue;
      const int eps = *entry.den.epsilon();
      for (int r = 0; r <= prep.r_max; ++r) {
        const int parity = (r % 2 == 0) ? 1 : -1;
        if (parity != eps &&
            degree_nonsingular(entry.den, entry.d, r) != 0) {
          fail("symmetric density " + std::to_string(i) +
               " has nonzero derivative at off-parity r=" + std::to_string(r));
        }
      }
    }
    return std::string("off-parity derivatives of symmetric densities vanish");
  });

  return report;
}

io::Json verify_report_to_json(const VerifyReport& report) {
  io::Json checks = io::Json::array();
  for (const auto& check : report.checks) {
    io::Json c;
    c["code"] = check.code;
    c["pass"] = check.pass;
    c["detail"] = check.detail;
    checks.push_back(c);
  }
  io::Json out;
  out["checks"] = checks;
  out["all_pass"] = report.all_pass;
  return out;
}

std::string verify_report_to_text(const VerifyReport& report) {
  std::ostringstream out;
  int passed = 0;
  for (const auto& check : report.checks) {
    out << (check.pass ? "PASS" : "FAIL") << "  " << check.code << "  ("
        << check.detail << ")\n";
    if (check.pass) ++passed;
  }
  out << passed << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace ffeis
