#pragma once

#include "ffeis/curves.hpp"
#include "ffeis/qmatrix.hpp"
#include "ffeis/series.hpp"

namespace ffeis {

// True iff c_{w-j} = q^{(w/2)-j} c_j for all j (w the degree, necessarily
// even for this to hold; the zero and odd-degree cases are false).
bool check_functional_equation(long q, const IntPolynomial& coeffs);

// The polynomial L(s, eta) in T = q^{-s}: degree w = deg omega_X = 2g - 2,
// constant term 1, functional equation checked at construction.
class LEtaFunction {
 public:
  LEtaFunction(long q, IntPolynomial coeffs);

  static LEtaFunction from_cover_pair(const ZetaData& base, const ZetaData& cover);

  long q() const { return q_; }
  int w() const;
  const IntPolynomial& coeffs() const { return coeffs_; }

  // L(0, eta) = L(T=1) = sum of coefficients; nonzero is enforced by the
  // Frobenius-module invariant, positivity only holds for geometric input
  // and is surfaced as a warning flag, not an error.
  Integer value_at_one() const { return coeffs_.eval_integer(Integer(1)); }
  bool value_at_one_positive() const { return value_at_one() > 0; }

  bool operator==(const LEtaFunction& rhs) const {
    return q_ == rhs.q_ && coeffs_ == rhs.coeffs_;
  }

 private:
  long q_;
  IntPolynomial coeffs_;
};

// phi acting on V realized as the w x w companion matrix of the reversed
// L-polynomial, so det(I - T M) = L(T) and every trace stays in Q.
class FrobeniusModule {
 public:
  explicit FrobeniusModule(const LEtaFunction& l);

  const LEtaFunction& l() const { return l_; }
  const QMatrix& matrix() const { return m_; }
  size_t dim() const { return m_.size(); }

 private:
  LEtaFunction l_;
  QMatrix m_;
};

FrobeniusModule build_frobenius_module(const LEtaFunction& l);

// Tr(phi^a (1 - phi)^{-b} | V), exact.
Rational trace_functional(const FrobeniusModule& module, unsigned a, unsigned b);

// Both return the Taylor series of log(L(s,eta) / L(0,eta)) in u = s log q,
// constant term 0; L(0,eta) itself is available as l.value_at_one().
// The direct route expands the polynomial on exponentials and takes log;
// the trace route sums cycle-weighted trace functionals.
TruncatedSeries log_taylor_direct(const LEtaFunction& l, int order);
TruncatedSeries log_taylor_trace(const FrobeniusModule& module, int order);

}  // namespace ffeis
