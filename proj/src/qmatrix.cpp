#include "ffeis/qmatrix.hpp"

#include "ffeis/errors.hpp"

namespace ffeis {

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n);
  for (size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  QMatrix out(n_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  QMatrix out(n_);
  for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  QMatrix out(n_);
  for (size_t i = 0; i < n_; ++i) {
    for (size_t k = 0; k < n_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < n_; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

QMatrix QMatrix::pow(unsigned e) const {
  QMatrix acc = identity(n_);
  QMatrix base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

Rational QMatrix::trace() const {
  Rational t(0);
  for (size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

Rational QMatrix::det() const {
  // Fraction-full Gaussian elimination; exact over Q.
  QMatrix m = *this;
  Rational det(1);
  for (size_t col = 0; col < n_; ++col) {
    size_t pivot = col;
    while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n_) return Rational(0);
    if (pivot != col) {
      for (size_t j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (size_t row = col + 1; row < n_; ++row) {
      if (m.at(row, col) == 0) continue;
      Rational f = m.at(row, col) / m.at(col, col);
      for (size_t j = col; j < n_; ++j) {
        m.at(row, j) -= f * m.at(col, j);
      }
    }
  }
  return det;
}

QMatrix QMatrix::inverse() const {
  QMatrix m = *this;
  QMatrix inv = identity(n_);
  for (size_t col = 0; col < n_; ++col) {
    size_t pivot = col;
    while (pivot < n_ && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n_) {
      throw Error(ErrorCode::InputError, "singular matrix");
    }
    if (pivot != col) {
      for (size_t j = 0; j < n_; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Rational p = m.at(col, col);
    for (size_t j = 0; j < n_; ++j) {
      m.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (size_t row = 0; row < n_; ++row) {
      if (row == col || m.at(row, col) == 0) continue;
      Rational f = m.at(row, col);
      for (size_t j = 0; j < n_; ++j) {
        m.at(row, j) -= f * m.at(col, j);
        inv.at(row, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::vector<Rational> QMatrix::char_poly() const {
  // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M(M_k + c_k I).
  std::vector<Rational> c(n_ + 1, Rational(0));
  c[0] = 1;
  QMatrix mk = *this;
  for (size_t k = 1; k <= n_; ++k) {
    c[k] = -mk.trace() / Rational(static_cast<long>(k));
    if (k < n_) {
      QMatrix shifted = mk;
      for (size_t i = 0; i < n_; ++i) shifted.at(i, i) += c[k];
      mk = (*this) * shifted;
    }
  }
  return c;
}

}  // namespace ffeis
