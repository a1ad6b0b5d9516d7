#pragma once

#include <optional>

#include "ffeis/int_polynomial.hpp"

namespace ffeis {

// Quotient of integer polynomials, stored content-normalized and with no
// common polynomial factor; the denominator is nonzero with positive
// leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(IntPolynomial::one()) {}
  RationalFunction(IntPolynomial num, IntPolynomial den);

  // Builds from rational-coefficient polynomials by clearing denominators.
  static RationalFunction from_rational_coeffs(const std::vector<Rational>& num,
                                               const std::vector<Rational>& den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction inverse() const;
  bool operator==(const RationalFunction& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }

  // Value at T = t; nullopt at a pole.
  std::optional<Rational> eval(const Rational& t) const;

  std::string to_text() const;

 private:
  void normalize();
  IntPolynomial num_;
  IntPolynomial den_;
};

// Primitive gcd over Q (monic up to content), used for normalization.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace ffeis
