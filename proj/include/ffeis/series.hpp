#pragma once

#include <vector>

#include "ffeis/int_polynomial.hpp"
#include "ffeis/rational.hpp"

namespace ffeis {

// Power series in u = s*log(q), truncated at a fixed order N: exactly N+1
// rational coefficients are stored and arithmetic never silently extends
// the order (mixed-order operands truncate to the shorter one).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);  // zero series
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries constant(const Rational& value, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int j) const { return c_[static_cast<size_t>(j)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const Rational& rhs) const;
  TruncatedSeries operator/(const Rational& rhs) const;
  bool operator==(const TruncatedSeries& rhs) const { return c_ == rhs.c_; }
  bool operator!=(const TruncatedSeries& rhs) const { return c_ != rhs.c_; }

  TruncatedSeries truncated(int order) const;

  std::string to_text(const std::string& var = "u") const;

 private:
  std::vector<Rational> c_;
};

// log(f) for f with constant term exactly 1 (throws NonUnitConstantTerm
// otherwise, keeping all coefficients rational).
TruncatedSeries series_log(const TruncatedSeries& f);

// exp(f) for f with constant term 0 (throws NonZeroConstantTerm otherwise).
// Left inverse of series_log.
TruncatedSeries series_exp(const TruncatedSeries& f);

// sum_j c_j * (scale * e^{k u})^j as a series in u through the given order,
// i.e. the polynomial evaluated on a scaled exponential.
TruncatedSeries poly_eval_exponential(const IntPolynomial& p, long k,
                                      const Rational& scale, int order);

}  // namespace ffeis
