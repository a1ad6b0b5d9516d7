#include "ffeis/int_polynomial.hpp"

#include "ffeis/errors.hpp"

namespace ffeis {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) {
    c_.emplace_back(v);
  }
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, int k) {
  if (c == 0) {
    return IntPolynomial();
  }
  std::vector<Integer> v(static_cast<size_t>(k) + 1, Integer(0));
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) {
    c_.pop_back();
  }
}

std::optional<int> IntPolynomial::degree() const {
  if (c_.empty()) {
    return std::nullopt;
  }
  return static_cast<int>(c_.size()) - 1;
}

Integer IntPolynomial::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) {
    return Integer(0);
  }
  return c_[static_cast<size_t>(k)];
}

Integer IntPolynomial::leading() const {
  return c_.empty() ? Integer(0) : c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Integer> out(std::max(c_.size(), rhs.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Integer> out(std::max(c_.size(), rhs.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] -= rhs.c_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (c_.empty() || rhs.c_.empty()) {
    return IntPolynomial();
  }
  std::vector<Integer> out(c_.size() + rhs.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    for (size_t j = 0; j < rhs.c_.size(); ++j) {
      out[i + j] += c_[i] * rhs.c_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Integer& rhs) const {
  std::vector<Integer> out(c_);
  for (auto& v : out) v *= rhs;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Integer> out(c_);
  for (auto& v : out) v = -v;
  return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(
    const IntPolynomial& rhs) const {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::InputError, "polynomial division by zero");
  }
  if (is_zero()) {
    return IntPolynomial();
  }
  if (c_.size() < rhs.c_.size()) {
    return std::nullopt;
  }
  // Long division over Q; exact iff every quotient coefficient is integral
  // and the remainder vanishes.
  std::vector<Rational> rem(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) rem[i] = Rational(c_[i]);
  const Rational lead(rhs.c_.back());
  const size_t qsize = c_.size() - rhs.c_.size() + 1;
  std::vector<Integer> quot(qsize, Integer(0));
  for (size_t i = qsize; i-- > 0;) {
    Rational factor = rem[i + rhs.c_.size() - 1] / lead;
    if (factor.get_den() != 1) {
      return std::nullopt;
    }
    quot[i] = factor.get_num();
    for (size_t j = 0; j < rhs.c_.size(); ++j) {
      rem[i + j] -= factor * Rational(rhs.c_[j]);
    }
  }
  for (const auto& v : rem) {
    if (v != 0) {
      return std::nullopt;
    }
  }
  return IntPolynomial(std::move(quot));
}

Rational IntPolynomial::eval(const Rational& t) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * t + Rational(c_[i]);
  }
  return acc;
}

Integer IntPolynomial::eval_integer(const Integer& t) const {
  Integer acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * t + c_[i];
  }
  return acc;
}

Integer IntPolynomial::content() const {
  Integer g(0);
  for (const auto& v : c_) {
    Integer a = abs(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

std::string IntPolynomial::to_text(const std::string& var) const {
  if (c_.empty()) {
    return "0";
  }
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Integer mag = abs(c_[i]);
    if (out.empty()) {
      if (c_[i] < 0) out += "-";
    } else {
      out += c_[i] < 0 ? " - " : " + ";
    }
    const bool show_coeff = (mag != 1) || i == 0;
    if (show_coeff) {
      out += mag.get_str();
    }
    if (i >= 1) {
      if (show_coeff) out += "*";
      out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace ffeis
