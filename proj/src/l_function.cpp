#include "ffeis/l_function.hpp"

#include "ffeis/cycle_polynomials.hpp"
#include "ffeis/errors.hpp"

namespace ffeis {

bool check_functional_equation(long q, const IntPolynomial& coeffs) {
  const auto deg = coeffs.degree();
  if (!deg) {
    return false;
  }
  const int w = *deg;
  if (w % 2 != 0) {
    return false;
  }
  for (int j = 0; j <= w / 2; ++j) {
    if (coeffs.coeff(w - j) !=
        pow_integer(Integer(q), static_cast<unsigned long>(w / 2 - j)) * coeffs.coeff(j)) {
      return false;
    }
  }
  return true;
}

LEtaFunction::LEtaFunction(long q, IntPolynomial coeffs)
    : q_(q), coeffs_(std::move(coeffs)) {
  if (q_ < 2) {
    throw Error(ErrorCode::InputError, "q must be >= 2");
  }
  if (coeffs_.coeff(0) != 1) {
    throw Error(ErrorCode::FEViolation, "L-polynomial must have constant term 1");
  }
  if (!check_functional_equation(q_, coeffs_)) {
    throw Error(ErrorCode::FEViolation,
                "L-polynomial violates c_{w-j} = q^{(w/2)-j} c_j");
  }
}

LEtaFunction LEtaFunction::from_cover_pair(const ZetaData& base,
                                           const ZetaData& cover) {
  return LEtaFunction(base.q, l_eta_from_pair(base, cover));
}

int LEtaFunction::w() const { return *coeffs_.degree(); }

FrobeniusModule::FrobeniusModule(const LEtaFunction& l)
    : l_(l), m_(static_cast<size_t>(l.w())) {
  const size_t w = m_.size();
  // Companion matrix of t^w + c_1 t^{w-1} + ... + c_w (the monic reversal
  // of L): subdiagonal ones, last column -(c_w, ..., c_1).
  for (size_t i = 1; i < w; ++i) {
    m_.at(i, i - 1) = 1;
  }
  for (size_t i = 0; i < w; ++i) {
    m_.at(i, w - 1) = Rational(-l.coeffs().coeff(static_cast<int>(w - i)));
  }
  // det(I - T M) = L(T), re-derived here from the characteristic polynomial.
  std::vector<Rational> chi = m_.char_poly();
  for (size_t k = 0; k <= w; ++k) {
    if (chi[k] != Rational(l.coeffs().coeff(static_cast<int>(k)))) {
      throw Error(ErrorCode::FEViolation,
                  "companion matrix characteristic polynomial mismatch");
    }
  }
  // (1 - phi) must be invertible: L(1) = det(I - M) != 0.
  if (l_.value_at_one() == 0) {
    throw Error(ErrorCode::FEViolation, "L(0, eta) = 0: (1 - phi) is singular");
  }
}

FrobeniusModule build_frobenius_module(const LEtaFunction& l) {
  return FrobeniusModule(l);
}

Rational trace_functional(const FrobeniusModule& module, unsigned a, unsigned b) {
  const size_t w = module.dim();
  if (w == 0) {
    return Rational(0);
  }
  QMatrix acc = module.matrix().pow(a);
  if (b > 0) {
    QMatrix resolvent = (QMatrix::identity(w) - module.matrix()).inverse();
    acc = acc * resolvent.pow(b);
  }
  return acc.trace();
}

TruncatedSeries log_taylor_direct(const LEtaFunction& l, int order) {
  TruncatedSeries f = poly_eval_exponential(l.coeffs(), -1, Rational(1), order);
  // Normalize the constant term to 1; the dropped factor is L(0, eta).
  return series_log(f / Rational(l.value_at_one()));
}

TruncatedSeries log_taylor_trace(const FrobeniusModule& module, int order) {
  std::vector<Rational> out(static_cast<size_t>(order) + 1, Rational(0));
  for (int ell = 1; ell <= order; ++ell) {
    // sum over cyclic permutations, grouped by the statistic delta:
    // sum_{c in C_ell} Tr(phi^{delta(c)} (1-phi)^{-ell})
    //   = sum_j a_j^{(ell)} Tr(phi^j (1-phi)^{-ell}).
    const FPolynomial f = f_poly_recursive(ell);
    Rational cycle_sum(0);
    for (int j = 1; j <= ell; ++j) {
      const Integer& count = f.coefficient(j);
      if (count != 0) {
        cycle_sum += Rational(count) * trace_functional(module, static_cast<unsigned>(j),
                                                        static_cast<unsigned>(ell));
      }
    }
    // Coefficient of u^ell in -sum_l (cycle sum) (-u)^l / l!.
    Rational factorial(1);
    for (int j = 2; j <= ell; ++j) factorial *= j;
    out[static_cast<size_t>(ell)] =
        -cycle_sum * pow_rational(Rational(-1), ell) / factorial;
  }
  return TruncatedSeries(std::move(out));
}

}  // namespace ffeis
