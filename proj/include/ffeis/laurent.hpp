#pragma once

#include <map>

#include "ffeis/qsqrt.hpp"

namespace ffeis {

// Finite Laurent polynomial sum_k c_k Z^k in Z = q^{-s}, coefficients in
// Q[sqrt(q)]. Zero coefficients are never stored; exponents may be negative.
class LaurentProfile {
 public:
  explicit LaurentProfile(long q) : q_(q) {}

  long q() const { return q_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, QSqrtScalar>& terms() const { return terms_; }

  QSqrtScalar term(int k) const;
  void add_term(int k, const QSqrtScalar& c);
  void set_term(int k, const QSqrtScalar& c);

  LaurentProfile operator+(const LaurentProfile& rhs) const;
  LaurentProfile operator-(const LaurentProfile& rhs) const;
  LaurentProfile operator*(const LaurentProfile& rhs) const;
  LaurentProfile operator*(const QSqrtScalar& rhs) const;
  LaurentProfile operator-() const;
  bool operator==(const LaurentProfile& rhs) const;
  bool operator!=(const LaurentProfile& rhs) const { return !(*this == rhs); }

  // Shift every exponent by delta (multiplication by Z^delta).
  LaurentProfile shifted(int delta) const;

  // Value at Z = t, t a nonzero rational.
  QSqrtScalar eval(const Rational& t) const;

  std::string to_text() const;

 private:
  long q_;
  std::map<int, QSqrtScalar> terms_;
};

// The substitution s -> -s, i.e. Z -> Z^{-1}: the term at exponent k moves
// to exponent -k.
LaurentProfile laurent_involute(const LaurentProfile& p);

// (log q)^{-r} (d/ds)^r at s = 0. Since Z^k = q^{-ks}, this is
// sum_k c_k (-k)^r.
QSqrtScalar laurent_s_derivative_at_zero(const LaurentProfile& p, int r);

}  // namespace ffeis
