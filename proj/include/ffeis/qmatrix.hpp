#pragma once

#include <vector>

#include "ffeis/rational.hpp"

namespace ffeis {

// Small dense matrix over Q with exact arithmetic. Sized for the handful of
// rows a companion matrix of an L-polynomial needs; pivoting just takes any
// nonzero pivot, which is all an exact field requires.
class QMatrix {
 public:
  explicit QMatrix(size_t n) : n_(n), a_(n * n, Rational(0)) {}

  static QMatrix identity(size_t n);

  size_t size() const { return n_; }
  const Rational& at(size_t i, size_t j) const { return a_[i * n_ + j]; }
  Rational& at(size_t i, size_t j) { return a_[i * n_ + j]; }

  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix operator*(const QMatrix& rhs) const;
  bool operator==(const QMatrix& rhs) const {
    return n_ == rhs.n_ && a_ == rhs.a_;
  }

  QMatrix pow(unsigned e) const;
  Rational trace() const;
  Rational det() const;

  // Gauss-Jordan inverse; throws Error(InputError) when singular.
  QMatrix inverse() const;

  // Characteristic polynomial t^n + c_1 t^{n-1} + ... + c_n via the
  // Faddeev-LeVerrier recurrence; returns (1, c_1, ..., c_n).
  std::vector<Rational> char_poly() const;

 private:
  size_t n_;
  std::vector<Rational> a_;
};

}  // namespace ffeis
