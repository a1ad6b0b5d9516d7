#pragma once

#include "ffeis/rational.hpp"

namespace ffeis {

// Element a + b*sqrt(q) of Q[sqrt(q)], q a fixed positive prime power.
// When q is a perfect square m^2 the irrational part collapses into the
// rational part at construction (b becomes 0), so b != 0 implies sqrt(q)
// is irrational and component-wise equality is the right notion.
class QSqrtScalar {
 public:
  QSqrtScalar(long q, Rational a, Rational b);

  static QSqrtScalar of(long q, const Rational& a) {
    return QSqrtScalar(q, a, Rational(0));
  }
  static QSqrtScalar zero(long q) { return of(q, Rational(0)); }
  static QSqrtScalar one(long q) { return of(q, Rational(1)); }

  // q^(e/2) for any integer e: rational when e is even, a pure sqrt(q)
  // multiple otherwise.
  static QSqrtScalar half_power(long q, long e);

  long q() const { return q_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QSqrtScalar operator-() const;
  QSqrtScalar operator+(const QSqrtScalar& rhs) const;
  QSqrtScalar operator-(const QSqrtScalar& rhs) const;
  QSqrtScalar operator*(const QSqrtScalar& rhs) const;
  QSqrtScalar operator*(const Rational& rhs) const;
  QSqrtScalar inverse() const;  // (a - b sqrt(q)) / (a^2 - q b^2)

  bool operator==(const QSqrtScalar& rhs) const;
  bool operator!=(const QSqrtScalar& rhs) const { return !(*this == rhs); }

  std::string to_text() const;

 private:
  long q_;
  Rational a_;
  Rational b_;
};

QSqrtScalar operator*(const Rational& lhs, const QSqrtScalar& rhs);

}  // namespace ffeis
