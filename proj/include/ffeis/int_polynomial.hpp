#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffeis/rational.hpp"

namespace ffeis {

// Polynomial with arbitrary-precision integer coefficients, low degree
// first. Trailing zeros are trimmed; the zero polynomial stores nothing and
// its degree is the distinct "minus infinity" state (nullopt), never -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }
  static IntPolynomial monomial(const Integer& c, int k);

  std::optional<int> degree() const;
  bool is_zero() const { return c_.empty(); }
  // Coefficient of T^k (zero outside the stored range).
  Integer coeff(int k) const;
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer leading() const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const Integer& rhs) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& rhs) const { return c_ == rhs.c_; }
  bool operator!=(const IntPolynomial& rhs) const { return c_ != rhs.c_; }

  // Quotient when rhs divides *this exactly over Q (hence over Z up to
  // content); nullopt when the division leaves a remainder.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& rhs) const;

  Rational eval(const Rational& t) const;
  Integer eval_integer(const Integer& t) const;

  // gcd of |coefficients|; 0 for the zero polynomial.
  Integer content() const;

  std::string to_text(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Integer> c_;
};

}  // namespace ffeis
