#include "ffeis/qsqrt.hpp"

#include "ffeis/errors.hpp"

namespace ffeis {

namespace {

void require_same_field(const QSqrtScalar& x, const QSqrtScalar& y) {
  if (x.q() != y.q()) {
    throw Error(ErrorCode::FamilyInconsistency,
                "mixing Q[sqrt(q)] scalars with q=" + std::to_string(x.q()) +
                    " and q=" + std::to_string(y.q()));
  }
}

// Exact square root of q when q is a perfect square, 0 otherwise.
long perfect_sqrt(long q) {
  Integer z(q);
  if (mpz_perfect_square_p(z.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    return root.get_si();
  }
  return 0;
}

}  // namespace

QSqrtScalar::QSqrtScalar(long q, Rational a, Rational b)
    : q_(q), a_(std::move(a)), b_(std::move(b)) {
  if (q_ <= 0) {
    throw Error(ErrorCode::InputError, "q must be positive");
  }
  if (b_ != 0) {
    if (const long m = perfect_sqrt(q_)) {
      a_ += b_ * Rational(m);
      b_ = 0;
    }
  }
}

QSqrtScalar QSqrtScalar::half_power(long q, long e) {
  if ((e % 2) == 0) {
    return of(q, pow_rational(Rational(q), e / 2));
  }
  // q^(e/2) = q^((e-1)/2) * sqrt(q)
  const long floor_half = (e - 1) / 2;  // exact: e odd
  return QSqrtScalar(q, Rational(0), pow_rational(Rational(q), floor_half));
}

QSqrtScalar QSqrtScalar::operator-() const {
  return QSqrtScalar(q_, -a_, -b_);
}

QSqrtScalar QSqrtScalar::operator+(const QSqrtScalar& rhs) const {
  require_same_field(*this, rhs);
  return QSqrtScalar(q_, a_ + rhs.a_, b_ + rhs.b_);
}

QSqrtScalar QSqrtScalar::operator-(const QSqrtScalar& rhs) const {
  require_same_field(*this, rhs);
  return QSqrtScalar(q_, a_ - rhs.a_, b_ - rhs.b_);
}

QSqrtScalar QSqrtScalar::operator*(const QSqrtScalar& rhs) const {
  require_same_field(*this, rhs);
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(q_);
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  return QSqrtScalar(q_, std::move(a), std::move(b));
}

QSqrtScalar QSqrtScalar::operator*(const Rational& rhs) const {
  return QSqrtScalar(q_, a_ * rhs, b_ * rhs);
}

QSqrtScalar QSqrtScalar::inverse() const {
  // Norm a^2 - q b^2 vanishes only at 0 since sqrt(q) is irrational here.
  Rational norm = a_ * a_ - Rational(q_) * b_ * b_;
  if (norm == 0) {
    throw Error(ErrorCode::InputError, "inverse of zero in Q[sqrt(q)]");
  }
  return QSqrtScalar(q_, a_ / norm, -b_ / norm);
}

bool QSqrtScalar::operator==(const QSqrtScalar& rhs) const {
  require_same_field(*this, rhs);
  return a_ == rhs.a_ && b_ == rhs.b_;
}

std::string QSqrtScalar::to_text() const {
  if (b_ == 0) {
    return to_string(a_);
  }
  std::string out;
  if (a_ != 0) {
    out += to_string(a_) + " + ";
  }
  out += "(" + to_string(b_) + ")*sqrt(" + std::to_string(q_) + ")";
  return out;
}

QSqrtScalar operator*(const Rational& lhs, const QSqrtScalar& rhs) {
  return rhs * lhs;
}

}  // namespace ffeis
