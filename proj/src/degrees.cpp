#include "ffeis/degrees.hpp"

#include <functional>

#include "ffeis/errors.hpp"

namespace ffeis {

Rational degree_constant_analytic(const LEtaFunction& l, long d, int r) {
  if (r < 0) {
    throw Error(ErrorCode::InputError, "r must be >= 0");
  }
  Rational acc(0);
  for (int j = 0; j <= l.w(); ++j) {
    const Integer& c = l.coeffs().coeff(j);
    if (c == 0) continue;
    acc += Rational(c) * pow_rational(Rational(d - 2 * j), r);
  }
  return Rational(2) * acc;
}

Rational degree_constant_combinatorial(const LEtaFunction& l, long d, int r,
                                       int bound) {
  PermSumContext ctx(build_frobenius_module(l), d);
  const Rational prym(2 * Rational(l.value_at_one()));
  return pow_rational(Rational(-2), r) * prym * perm_sum(ctx, r, bound);
}

std::vector<DegreeReport> cross_check_degrees(const LEtaFunction& l, long d,
                                              int r_max, int eta_l_sign) {
  std::vector<DegreeReport> out;
  out.reserve(static_cast<size_t>(r_max) + 1);
  for (int r = 0; r <= r_max; ++r) {
    DegreeReport report;
    report.r = r;
    report.parity_ok = ((r % 2 == 0) ? 1 : -1) == eta_l_sign;
    report.analytic = degree_constant_analytic(l, d, r);
    report.combinatorial = degree_constant_combinatorial(l, d, r);
    report.agree = report.analytic == report.combinatorial;
    out.push_back(std::move(report));
  }
  return out;
}

Rational degree_nonsingular(const DensityPolynomial& den, long d, int r) {
  if (r < 0) {
    throw Error(ErrorCode::InputError, "r must be >= 0");
  }
  const std::vector<Rational> m = den.padded(d);
  Rational acc(0);
  for (size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    acc += m[k] * pow_rational(Rational(d - 2 * static_cast<long>(k)), r);
  }
  return acc;
}

Rational epsilon_component_degree(const DensityPolynomial& den, long d, int r) {
  if (r <= 0 || r % 2 != 0) {
    throw Error(ErrorCode::HalvingHypothesisViolation,
                "component halving needs r even and > 0, got r=" + std::to_string(r));
  }
  return degree_nonsingular(den, d, r) / Rational(2);
}

TermwiseReport termwise_comparison(
    const ConstantTermProfile& profile,
    const std::vector<std::pair<std::string, DensityPolynomial>>& fourier_terms,
    int r) {
  TermwiseReport report;
  const long q = profile.ctx.q;
  const long d = profile.ctx.d();
  const QSqrtScalar q_minus_half_d = QSqrtScalar::half_power(q, -d);

  {
    const bool parity_ok = ((r % 2 == 0) ? 1 : -1) == profile.ctx.eta_l_sign;
    TermwiseEntry entry(
        "constant", fourier_higher_derivative(constant_term(profile), r),
        parity_ok ? q_minus_half_d * (Rational(profile.ctx.eta_l_sign) *
                                      degree_constant_analytic(profile.l, d, r))
                  : QSqrtScalar::zero(q));
    report.all_equal = report.all_equal && entry.equal;
    report.entries.push_back(std::move(entry));
  }

  for (const auto& [label, den] : fourier_terms) {
    TermwiseEntry entry(
        label, fourier_higher_derivative(nonsingular_term(profile.ctx, den), r),
        q_minus_half_d * degree_nonsingular(den, d, r));
    report.all_equal = report.all_equal && entry.equal;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

CoverFamily::CoverFamily(std::vector<ConstantTermProfile> components_in)
    : components(std::move(components_in)) {
  if (components.empty()) {
    throw Error(ErrorCode::FamilyInconsistency, "family needs >= 1 component");
  }
  for (const auto& component : components) {
    if (component.ctx.q != components.front().ctx.q) {
      throw Error(ErrorCode::FamilyInconsistency,
                  "family components must share q");
    }
  }
}

QSqrtScalar cm_intersection(const CoverFamily& family, int r) {
  LaurentProfile product = constant_term(family.components.front());
  for (size_t i = 1; i < family.components.size(); ++i) {
    product = product * constant_term(family.components[i]);
  }
  return laurent_s_derivative_at_zero(product, r);
}

QSqrtScalar cm_refined(const CoverFamily& family, const std::vector<int>& multi_index) {
  if (multi_index.size() != family.components.size()) {
    throw Error(ErrorCode::FamilyInconsistency,
                "multi-index length must match the component count");
  }
  QSqrtScalar acc = QSqrtScalar::one(family.components.front().ctx.q);
  for (size_t i = 0; i < multi_index.size(); ++i) {
    if (multi_index[i] < 0) {
      throw Error(ErrorCode::InputError, "multi-index entries must be >= 0");
    }
    acc = acc * laurent_s_derivative_at_zero(constant_term(family.components[i]),
                                             multi_index[i]);
  }
  return acc;
}

namespace {

// Visits every multi-index with the given sum.
void for_each_multi_index(int components, int total,
                          std::vector<int>& scratch, size_t at,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (at + 1 == static_cast<size_t>(components)) {
    scratch[at] = total;
    visit(scratch);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    scratch[at] = v;
    for_each_multi_index(components, total - v, scratch, at + 1, visit);
  }
}

Rational multinomial(int r, const std::vector<int>& parts) {
  Rational acc(1);
  int remaining = r;
  for (int part : parts) {
    // binomial(remaining, part)
    for (int j = 1; j <= part; ++j) {
      acc *= Rational(remaining - part + j);
      acc /= Rational(j);
    }
    remaining -= part;
  }
  return acc;
}

}  // namespace

bool cm_leibniz_check(const CoverFamily& family, int r_max) {
  const int components = static_cast<int>(family.components.size());
  for (int r = 0; r <= r_max; ++r) {
    QSqrtScalar total = QSqrtScalar::zero(family.components.front().ctx.q);
    std::vector<int> scratch(static_cast<size_t>(components), 0);
    for_each_multi_index(components, r, scratch, 0,
                         [&](const std::vector<int>& index) {
                           total = total + cm_refined(family, index) *
                                                multinomial(r, index);
                         });
    if (total != cm_intersection(family, r)) {
      return false;
    }
  }
  return true;
}

}  // namespace ffeis
