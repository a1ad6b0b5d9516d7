#pragma once

#include <string>
#include <vector>

#include "ffeis/io.hpp"

namespace ffeis {

// Everything one verification run exercises. Curve entries go through the
// whole pipeline (count -> zeta -> L); L entries are direct. The context
// fields turn each L into a constant-term profile.
struct VerifyBundle {
  struct CurveEntry {
    SplitCoverModel model;
    long deg_l_frak;
    long deg_e;
    int eta_l_sign;
  };
  // Raw coefficients: validation (constant term 1, functional equation)
  // happens inside the verify run so a perturbed entry is reported as a
  // failing check, not an input error.
  struct LEntry {
    long q;
    IntPolynomial coeffs;
    long deg_l_frak;
    long deg_e;
    int eta_l_sign;
  };
  struct DensityEntry {
    DensityPolynomial den;
    long d;
  };

  std::vector<CurveEntry> curves;
  std::vector<LEntry> lfunctions;
  std::vector<DensityEntry> densities;
  int order = 12;
  int r_max = 6;
  long budget = kDefaultEnumerationBudget;
};

struct VerifyCheck {
  std::string code;  // machine-readable identity code
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
};

// The default fixture set: the q=2 quadratic L, the trivial L, the F_3
// split cover, and a pair of symmetric densities.
VerifyBundle builtin_bundle();

VerifyBundle parse_bundle(const io::Json& value);

// Runs, in order: zeta_fe, l_quotient, log_taylor_two_route, fn_two_route,
// exp_identity, closed_form, const_term_symmetry, degree_two_route,
// termwise, cm_leibniz, density_vanishing. Throws Error(InputError) on an
// empty bundle.
VerifyReport verify_all(const VerifyBundle& bundle);

io::Json verify_report_to_json(const VerifyReport& report);
std::string verify_report_to_text(const VerifyReport& report);

}  // namespace ffeis
