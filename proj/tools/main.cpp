// Command-line front end: parses JSON job inputs, dispatches to the library,
// and emits deterministic JSON or plain-text reports.
//
// Exit codes: 0 success, 1 input/validation error (the message names the
// violated invariant), 2 identity violation in verify mode.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ffeis/builtin.hpp"
#include "ffeis/cycle_polynomials.hpp"
#include "ffeis/errors.hpp"
#include "ffeis/verify.hpp"

namespace {

using ffeis::io::Json;

struct CommonOptions {
  std::string input_path;
  std::string output_path;
  int order = -1;  // -1 = flag not given
  int r_max = -1;
  std::string format = "json";
  long budget = ffeis::kDefaultEnumerationBudget;

  int resolved_order() const { return order < 0 ? 12 : order; }
  int resolved_r_max() const { return r_max < 0 ? 6 : r_max; }
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool wants_input) {
  auto* in = cmd->add_option("--input", opts->input_path, "input JSON path");
  if (wants_input) in->required();
  cmd->add_option("--output", opts->output_path, "output path (default stdout)");
  cmd->add_option("--order", opts->order, "series truncation order (default 12)");
  cmd->add_option("--r-max", opts->r_max, "maximum derivative order (default 6)");
  cmd->add_option("--format", opts->format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--budget", opts->budget, "enumeration budget (field elements)");
}

Json read_input(const CommonOptions& opts) {
  std::ifstream in(opts.input_path);
  if (!in) {
    throw ffeis::Error(ffeis::ErrorCode::InputError,
                       "cannot open input file " + opts.input_path);
  }
  Json parsed;
  try {
    in >> parsed;
  } catch (const Json::parse_error& e) {
    throw ffeis::Error(ffeis::ErrorCode::InputError,
                       std::string("input is not valid JSON: ") + e.what());
  }
  return parsed;
}

void emit(const CommonOptions& opts, const Json& report, const std::string& text) {
  const std::string payload =
      opts.format == "json" ? report.dump(2) + "\n" : text;
  if (opts.output_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opts.output_path);
    if (!out) {
      throw ffeis::Error(ffeis::ErrorCode::InputError,
                         "cannot open output file " + opts.output_path);
    }
    out << payload;
  }
}

// Accepts either a direct {"q","L"} entry or a {"q","f1","f2"} curve, in
// which case the whole pipeline runs.
ffeis::LEtaFunction l_from_input(const Json& input, long budget) {
  if (input.contains("L")) {
    return ffeis::io::parse_l_function(input);
  }
  if (input.contains("f1")) {
    const ffeis::SplitCoverModel model = ffeis::io::parse_curve(input);
    const int i_max = 2 * model.genus_cover();
    ffeis::PointCounts base{model.p, {}}, cover{model.p, {}};
    for (int i = 1; i <= i_max; ++i) {
      base.counts.push_back(
          ffeis::count_points(model, ffeis::CurveSheet::base, i, budget));
      cover.counts.push_back(
          ffeis::count_points(model, ffeis::CurveSheet::cover, i, budget));
    }
    return ffeis::LEtaFunction::from_cover_pair(
        ffeis::zeta_from_counts(base, model.genus_base()),
        ffeis::zeta_from_counts(cover, model.genus_cover()));
  }
  throw ffeis::Error(ffeis::ErrorCode::InputError,
                     "input must carry either \"L\" or a curve model");
}

int run_count(const CommonOptions& opts) {
  const Json input = read_input(opts);
  const ffeis::SplitCoverModel model = ffeis::io::parse_curve(input);
  const int i_max = input.contains("i_max")
                        ? input.at("i_max").get<int>()
                        : 2 * model.genus_cover();
  const std::string which =
      input.contains("which") ? input.at("which").get<std::string>() : "both";
  Json report;
  report["q"] = model.p;
  report["genus_base"] = model.genus_base();
  report["genus_cover"] = model.genus_cover();
  std::ostringstream text;
  auto run_sheet = [&](ffeis::CurveSheet sheet, const char* name) {
    Json counts = Json::array();
    text << name << ":";
    for (int i = 1; i <= i_max; ++i) {
      const long n = ffeis::count_points(model, sheet, i, opts.budget);
      counts.push_back(n);
      text << " " << n;
    }
    text << "\n";
    report[name] = counts;
  };
  if (which == "both" || which == "base") {
    run_sheet(ffeis::CurveSheet::base, "base");
  }
  if (which == "both" || which == "cover") {
    run_sheet(ffeis::CurveSheet::cover, "cover");
  }
  emit(opts, report, text.str());
  return 0;
}

int run_zeta(const CommonOptions& opts) {
  const Json input = read_input(opts);
  const ffeis::PointCounts counts = ffeis::io::parse_counts(input);
  const int genus = ffeis::io::parse_genus(input);
  const ffeis::ZetaData zeta = ffeis::zeta_from_counts(counts, genus);
  Json report;
  report["q"] = zeta.q;
  report["genus"] = zeta.g;
  report["P"] = ffeis::io::int_polynomial_to_json(zeta.numerator);
  report["fe_ok"] = true;
  emit(opts, report,
       "P(T) = " + zeta.numerator.to_text() + "  (functional equation holds)\n");
  return 0;
}

int run_lfun(const CommonOptions& opts) {
  const Json input = read_input(opts);
  const ffeis::LEtaFunction l = l_from_input(input, opts.budget);
  Json report;
  report["q"] = l.q();
  report["L"] = ffeis::io::int_polynomial_to_json(l.coeffs());
  report["w"] = l.w();
  report["L_at_one"] = l.value_at_one().get_str();
  Json warnings = Json::array();
  if (!l.value_at_one_positive()) {
    warnings.push_back("L(0,eta) <= 0: not a geometric L-function");
  }
  report["warnings"] = warnings;
  std::ostringstream text;
  text << "L(T) = " << l.coeffs().to_text() << "  over q = " << l.q()
       << ", deg = " << l.w() << ", L(0) = " << l.value_at_one().get_str() << "\n";
  for (const auto& w : warnings) {
    text << "warning: " << w.get<std::string>() << "\n";
  }
  emit(opts, report, text.str());
  return 0;
}

int run_taylor(const CommonOptions& opts) {
  const Json input = read_input(opts);
  const ffeis::LEtaFunction l = l_from_input(input, opts.budget);
  const ffeis::FrobeniusModule module = ffeis::build_frobenius_module(l);
  const ffeis::TruncatedSeries direct = ffeis::log_taylor_direct(l, opts.resolved_order());
  const ffeis::TruncatedSeries trace = ffeis::log_taylor_trace(module, opts.resolved_order());
  Json report;
  report["direct"] = ffeis::io::series_to_json(direct);
  report["trace"] = ffeis::io::series_to_json(trace);
  report["equal"] = direct == trace;
  report["L_at_one"] = l.value_at_one().get_str();
  emit(opts, report,
       "log(L(s)/L(0)) = " + direct.to_text() + "\nroutes equal: " +
           (direct == trace ? "yes" : "NO") + "\n");
  return 0;
}

int run_fpoly(const CommonOptions& opts, int n) {
  const ffeis::FPolynomial f = ffeis::f_poly_recursive(n);
  Json coeffs = Json::array();
  coeffs.push_back("0");  // constant term: f_n(0) = 0
  for (int i = 1; i <= n; ++i) {
    coeffs.push_back(f.coefficient(i).get_str());
  }
  Json report;
  report["n"] = n;
  report["coefficients"] = coeffs;
  report["text"] = f.to_text();
  emit(opts, report, f.to_text() + "\n");
  return 0;
}

int run_permsum(const CommonOptions& opts) {
  const Json input = read_input(opts);
  const ffeis::LEtaFunction l = l_from_input(input, opts.budget);
  const long d = ffeis::io::require_field(input, "d").get<long>();
  ffeis::PermSumContext ctx(ffeis::build_frobenius_module(l), d);
  Json gammas = Json::array();
  Json sums = Json::array();
  std::ostringstream text;
  for (int r = 0; r <= opts.resolved_r_max(); ++r) {
    if (r >= 1) {
      gammas.push_back(ffeis::io::rational_to_json(ffeis::gamma_ell(ctx, r)));
    }
    const ffeis::Rational sum = ffeis::perm_sum(ctx, r);
    sums.push_back(ffeis::io::rational_to_json(sum));
    text << "r=" << r << ": sum_{g in S_r} A_g = " << ffeis::to_string(sum) << "\n";
  }
  Json report;
  report["d"] = d;
  report["gamma"] = gammas;
  report["perm_sums"] = sums;
  report["exp_identity"] = ffeis::check_exp_identity(ctx, std::min(opts.resolved_r_max(), 6));
  report["closed_form"] = ffeis::check_closed_form(ctx, std::min(opts.resolved_r_max(), 6));
  emit(opts, report, text.str());
  return 0;
}

int run_eis(const CommonOptions& opts) {
  const Json input = read_input(opts);
  const ffeis::LEtaFunction l = l_from_input(input, opts.budget);
  const ffeis::FourierContext ctx =
      ffeis::io::parse_context(ffeis::io::require_field(input, "context"));
  Json report;
  std::ostringstream text;
  if (ctx.n == 1) {
    const ffeis::ConstantTermProfile profile(l, ctx);
    const ffeis::LaurentProfile w = ffeis::constant_term(profile);
    report["constant_term"] = ffeis::io::laurent_to_json(w);
    report["symmetry_ok"] = ffeis::check_constant_term_symmetry(profile);
    text << "W(Z) = " << w.to_text() << "\nsymmetry: "
         << (ffeis::check_constant_term_symmetry(profile) ? "ok" : "VIOLATED")
         << "\n";
  }
  if (input.contains("densities")) {
    Json terms = Json::array();
    for (const auto& entry : input.at("densities")) {
      const ffeis::DensityPolynomial den = ffeis::io::parse_density(entry);
      const ffeis::LaurentProfile term = ffeis::nonsingular_term(ctx, den);
      Json t;
      t["term"] = ffeis::io::laurent_to_json(term);
      Json derivs = Json::array();
      for (int r = 0; r <= opts.resolved_r_max(); ++r) {
        derivs.push_back(
            ffeis::io::qsqrt_to_json(ffeis::fourier_higher_derivative(term, r)));
      }
      t["derivatives"] = derivs;
      terms.push_back(t);
      text << "term: " << term.to_text() << "\n";
    }
    report["nonsingular_terms"] = terms;
  }
  // script-L factors need the base-curve zeta for n >= 2.
  ffeis::ZetaData zeta{l.q(), 0, ffeis::IntPolynomial::one()};
  if (input.contains("zeta")) {
    zeta = ffeis::io::parse_zeta(input.at("zeta"));
  } else if (ctx.n >= 2) {
    throw ffeis::Error(ffeis::ErrorCode::InputError,
                       "rank n >= 2 needs the base-curve \"zeta\" data");
  }
  Json factors = Json::array();
  for (const auto& f : ffeis::script_L_factor(ctx.n, l, zeta)) {
    factors.push_back(ffeis::io::rational_function_to_json(f));
  }
  report["script_L"] = factors;
  report["vanishing"] = Json::array();
  for (int r = 0; r <= opts.resolved_r_max(); ++r) {
    report["vanishing"].push_back(ffeis::vanishing_predicate(ctx, r));
  }
  emit(opts, report, text.str());
  return 0;
}

ffeis::CoverFamily family_from_json(const Json& input, long budget);

int run_degree(const CommonOptions& opts) {
  const Json input = read_input(opts);
  const ffeis::LEtaFunction l = l_from_input(input, opts.budget);
  const long d = ffeis::io::require_field(input, "d").get<long>();
  const int r_max =
      input.contains("r_max") ? input.at("r_max").get<int>() : opts.resolved_r_max();
  const int eta = input.contains("etaL") ? input.at("etaL").get<int>() : 1;

  Json report;
  std::ostringstream text;
  Json rows = Json::array();
  for (const auto& row : ffeis::cross_check_degrees(l, d, r_max, eta)) {
    rows.push_back(ffeis::io::degree_report_to_json(row));
    text << "r=" << row.r << ": analytic " << ffeis::to_string(row.analytic)
         << ", combinatorial " << ffeis::to_string(row.combinatorial)
         << (row.agree ? "  (agree)" : "  (DISAGREE)") << "\n";
  }
  report["constant_term_degrees"] = rows;

  std::vector<std::pair<std::string, ffeis::DensityPolynomial>> den_terms;
  if (input.contains("den_terms")) {
    Json dens = Json::array();
    for (const auto& entry : input.at("den_terms")) {
      const ffeis::DensityPolynomial den = ffeis::io::parse_density(entry);
      const std::string label =
          entry.contains("label") ? entry.at("label").get<std::string>() : "";
      den_terms.emplace_back(label, den);
      Json one;
      one["label"] = label;
      Json values = Json::array();
      for (int r = 0; r <= r_max; ++r) {
        values.push_back(
            ffeis::io::rational_to_json(ffeis::degree_nonsingular(den, d, r)));
      }
      one["degrees"] = values;
      dens.push_back(one);
    }
    report["nonsingular_degrees"] = dens;
  }

  // With the full context data the job also gets the term-wise rows.
  if (input.contains("degLfrak")) {
    const long deg_l_frak = input.at("degLfrak").get<long>();
    const long deg_e = input.contains("degE") ? input.at("degE").get<long>() : 0;
    const ffeis::FourierContext ctx(1, l.q(), l.w(), deg_l_frak, deg_e, eta);
    if (ctx.d() != d) {
      throw ffeis::Error(ffeis::ErrorCode::InputError,
                         "degLfrak + w - degE = " + std::to_string(ctx.d()) +
                             " contradicts d = " + std::to_string(d));
    }
    const ffeis::ConstantTermProfile profile(l, ctx);
    Json rows_by_r = Json::array();
    for (int r = 0; r <= r_max; ++r) {
      rows_by_r.push_back(ffeis::io::termwise_report_to_json(
          ffeis::termwise_comparison(profile, den_terms, r)));
    }
    report["termwise"] = rows_by_r;
  }

  if (input.contains("family")) {
    const ffeis::CoverFamily family = family_from_json(input, opts.budget);
    Json values = Json::array();
    for (int r = 0; r <= r_max; ++r) {
      values.push_back(
          ffeis::io::qsqrt_to_json(ffeis::cm_intersection(family, r)));
    }
    report["family_intersections"] = values;
    report["family_leibniz_ok"] =
        ffeis::cm_leibniz_check(family, std::min(r_max, 4));
  }
  emit(opts, report, text.str());
  return 0;
}

ffeis::CoverFamily family_from_json(const Json& input, long budget) {
  std::vector<ffeis::ConstantTermProfile> components;
  for (const auto& entry : ffeis::io::require_field(input, "family")) {
    components.emplace_back(l_from_input(entry, budget),
                            ffeis::io::parse_context(entry));
  }
  return ffeis::CoverFamily(std::move(components));
}

int run_cm(const CommonOptions& opts) {
  const Json input = read_input(opts);
  const ffeis::CoverFamily family = family_from_json(input, opts.budget);
  Json report;
  Json values = Json::array();
  std::ostringstream text;
  for (int r = 0; r <= opts.resolved_r_max(); ++r) {
    const ffeis::QSqrtScalar v = ffeis::cm_intersection(family, r);
    values.push_back(ffeis::io::qsqrt_to_json(v));
    text << "r=" << r << ": " << v.to_text() << "\n";
  }
  report["intersections"] = values;
  report["leibniz_ok"] =
      ffeis::cm_leibniz_check(family, std::min(opts.resolved_r_max(), 4));
  text << "Leibniz refinement: "
       << (report["leibniz_ok"].get<bool>() ? "ok" : "VIOLATED") << "\n";
  emit(opts, report, text.str());
  return 0;
}

int run_verify(const CommonOptions& opts) {
  ffeis::VerifyBundle bundle;
  if (opts.input_path.empty()) {
    bundle = ffeis::builtin_bundle();
  } else {
    bundle = ffeis::parse_bundle(read_input(opts));
  }
  // Flags override the bundle's own settings only when actually given.
  if (opts.order >= 0) bundle.order = opts.order;
  if (opts.r_max >= 0) bundle.r_max = opts.r_max;
  bundle.budget = opts.budget;
  const ffeis::VerifyReport report = ffeis::verify_all(bundle);
  emit(opts, ffeis::verify_report_to_json(report),
       ffeis::verify_report_to_text(report));
  return report.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact function-field L-function and Eisenstein data toolkit"};
  app.require_subcommand(1);

  CommonOptions opts;
  int fpoly_n = 1;

  auto* count = app.add_subcommand("count", "point counts of a split cover model");
  add_common(count, &opts, true);
  auto* zeta = app.add_subcommand("zeta", "zeta numerator from point counts");
  add_common(zeta, &opts, true);
  auto* lfun = app.add_subcommand("lfun", "validate or derive an L-polynomial");
  add_common(lfun, &opts, true);
  auto* taylor = app.add_subcommand("taylor", "log L Taylor series, both routes");
  add_common(taylor, &opts, true);
  auto* fpoly = app.add_subcommand("fpoly", "cycle-statistic polynomial f_n");
  add_common(fpoly, &opts, false);
  fpoly->add_option("--n", fpoly_n, "index n")->required();
  auto* permsum = app.add_subcommand("permsum", "permutation sums and EGF checks");
  add_common(permsum, &opts, true);
  auto* eis = app.add_subcommand("eis", "constant term and Fourier data");
  add_common(eis, &opts, true);
  auto* degree = app.add_subcommand("degree", "special-cycle degrees, both routes");
  add_common(degree, &opts, true);
  auto* cm = app.add_subcommand("cm", "CM family products and Leibniz check");
  add_common(cm, &opts, true);
  auto* verify = app.add_subcommand("verify", "run the full identity suite");
  add_common(verify, &opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return run_count(opts);
    if (zeta->parsed()) return run_zeta(opts);
    if (lfun->parsed()) return run_lfun(opts);
    if (taylor->parsed()) return run_taylor(opts);
    if (fpoly->parsed()) return run_fpoly(opts, fpoly_n);
    if (permsum->parsed()) return run_permsum(opts);
    if (eis->parsed()) return run_eis(opts);
    if (degree->parsed()) return run_degree(opts);
    if (cm->parsed()) return run_cm(opts);
    if (verify->parsed()) return run_verify(opts);
  } catch (const ffeis::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
