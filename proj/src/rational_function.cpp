#include "ffeis/rational_function.hpp"

#include "ffeis/errors.hpp"

namespace ffeis {

namespace {

// Divide out the content, leaving a primitive polynomial with positive
// leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) {
    return p;
  }
  Integer c = p.content();
  if (p.leading() < 0) {
    c = -c;
  }
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    out.push_back(v / c);
  }
  return IntPolynomial(std::move(out));
}

std::vector<Rational> to_rational(const IntPolynomial& p) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    out.emplace_back(v);
  }
  return out;
}

void trim_rational(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) {
    v.pop_back();
  }
}

// Returns (p * lcm, lcm) where lcm clears every denominator.
std::pair<IntPolynomial, Integer> clear_denominators(const std::vector<Rational>& v) {
  Integer lcm(1);
  for (const auto& r : v) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den().get_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& r : v) {
    out.push_back(r.get_num() * (lcm / r.get_den()));
  }
  return {IntPolynomial(std::move(out)), lcm};
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  // Euclid over Q, then the primitive integral representative.
  std::vector<Rational> x = to_rational(a);
  std::vector<Rational> y = to_rational(b);
  trim_rational(x);
  trim_rational(y);
  while (!y.empty()) {
    // x mod y; each pass zeroes the leading term, so x strictly shrinks
    while (!x.empty() && x.size() >= y.size()) {
      Rational factor = x.back() / y.back();
      const size_t shift = x.size() - y.size();
      for (size_t j = 0; j < y.size(); ++j) {
        x[shift + j] -= factor * y[j];
      }
      trim_rational(x);
    }
    std::swap(x, y);
  }
  if (x.empty()) {
    return IntPolynomial();
  }
  return primitive_part(clear_denominators(x).first);
}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw Error(ErrorCode::InputError, "rational function with zero denominator");
  }
  normalize();
}

RationalFunction RationalFunction::from_rational_coeffs(
    const std::vector<Rational>& num, const std::vector<Rational>& den) {
  // Scale both sides by the same rational so the value is preserved:
  // (num * a) / (den * b) needs the cross factors.
  auto [num_int, num_factor] = clear_denominators(num);
  auto [den_int, den_factor] = clear_denominators(den);
  return RationalFunction(num_int * den_factor, den_int * num_factor);
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial::one();
    return;
  }
  IntPolynomial g = poly_gcd(num_, den_);
  if (g.degree().value_or(0) > 0) {
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
  }
  // Content normalization: primitive numerator and denominator, with the
  // residual rational content folded into the numerator exactly when it is
  // integral; otherwise keep the reduced integer pair.
  Integer cn = num_.content();
  Integer cd = den_.content();
  Integer g2;
  mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  std::vector<Integer> n2, d2;
  for (const auto& v : num_.coeffs()) n2.push_back(v / g2);
  for (const auto& v : den_.coeffs()) d2.push_back(v / g2);
  num_ = IntPolynomial(std::move(n2));
  den_ = IntPolynomial(std::move(d2));
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) {
    throw Error(ErrorCode::InputError, "inverse of the zero rational function");
  }
  return RationalFunction(den_, num_);
}

std::optional<Rational> RationalFunction::eval(const Rational& t) const {
  Rational d = den_.eval(t);
  if (d == 0) {
    return std::nullopt;
  }
  return num_.eval(t) / d;
}

std::string RationalFunction::to_text() const {
  return "(" + num_.to_text() + ") / (" + den_.to_text() + ")";
}

}  // namespace ffeis
