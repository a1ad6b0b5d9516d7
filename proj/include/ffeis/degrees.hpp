#pragma once

#include <string>
#include <vector>

#include "ffeis/eisenstein.hpp"
#include "ffeis/perm_sums.hpp"

namespace ffeis {

// Cross-check container for one derivative order.
struct DegreeReport {
  int r = 0;
  bool parity_ok = false;  // (-1)^r == eta(L_frak) when a sign is supplied
  Rational analytic;
  Rational combinatorial;
  bool agree = false;
};

// 2 sum_j c_j (d-2j)^r, the r-th normalized derivative of 2 q^{ds} L(2s,eta)
// at s = 0. Computed unconditionally; the (-1)^r = eta(L_frak) hypothesis is
// reported by callers, not enforced here.
Rational degree_constant_analytic(const LEtaFunction& l, long d, int r);

// (-2)^r * 2 L(0,eta) * sum_{g in S_r} a_g, the permutation-cycle route.
// The 2 in |Prym(F_q)| = 2 L(0,eta) is a fixed constant of the setting.
Rational degree_constant_combinatorial(const LEtaFunction& l, long d, int r,
                                       int bound = kDefaultPermSumBound);

// Both routes for r = 0..r_max; `eta_l_sign` only annotates parity.
std::vector<DegreeReport> cross_check_degrees(const LEtaFunction& l, long d,
                                              int r_max, int eta_l_sign = 1);

// sum_k m_k (d-2k)^r.
Rational degree_nonsingular(const DensityPolynomial& den, long d, int r);

// Half of degree_nonsingular; only defined for even r > 0.
Rational epsilon_component_degree(const DensityPolynomial& den, long d, int r);

struct TermwiseEntry {
  TermwiseEntry(std::string label_in, QSqrtScalar derivative_in,
                QSqrtScalar expected_in)
      : label(std::move(label_in)),
        derivative(std::move(derivative_in)),
        expected(std::move(expected_in)),
        equal(derivative == expected) {}

  std::string label;
  QSqrtScalar derivative;  // from the Laurent profile
  QSqrtScalar expected;    // from the degree formula
  bool equal;
};

struct TermwiseReport {
  std::vector<TermwiseEntry> entries;
  bool all_equal = true;
};

// Term-wise comparison at one derivative order r: the constant term against
// eta(L_frak) q^{-d/2} * degree_constant_analytic (zero off parity), and each
// labelled density against q^{-d/2} * degree_nonsingular.
TermwiseReport termwise_comparison(
    const ConstantTermProfile& profile,
    const std::vector<std::pair<std::string, DensityPolynomial>>& fourier_terms,
    int r);

// One constant-term profile per connected component; all components must
// share q.
struct CoverFamily {
  explicit CoverFamily(std::vector<ConstantTermProfile> components_in);
  std::vector<ConstantTermProfile> components;
};

// r-th normalized derivative at s = 0 of the product of the component
// profiles.
QSqrtScalar cm_intersection(const CoverFamily& family, int r);

// One Leibniz term: the product over components of the r_alpha-th normalized
// derivatives. The multi-index must have one entry per component.
QSqrtScalar cm_refined(const CoverFamily& family, const std::vector<int>& multi_index);

// sum over multi-indices of multinomial(r; r_alpha) * cm_refined equals
// cm_intersection for every r <= r_max.
bool cm_leibniz_check(const CoverFamily& family, int r_max);

}  // namespace ffeis
