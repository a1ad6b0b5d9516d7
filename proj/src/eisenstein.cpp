#include "ffeis/eisenstein.hpp"

#include "ffeis/errors.hpp"

namespace ffeis {

FourierContext::FourierContext(int n_in, long q_in, int w_in, long deg_l_frak_in,
                               long deg_e_in, int eta_l_sign_in)
    : n(n_in),
      q(q_in),
      w(w_in),
      deg_l_frak(deg_l_frak_in),
      deg_e(deg_e_in),
      eta_l_sign(eta_l_sign_in) {
  if (n < 1) {
    throw Error(ErrorCode::InputError, "rank n must be >= 1");
  }
  if (q < 2) {
    throw Error(ErrorCode::InputError, "q must be >= 2");
  }
  if (w < 0 || w % 2 != 0) {
    throw Error(ErrorCode::InputError,
                "deg omega_X must be even and >= 0, got " + std::to_string(w));
  }
  if (eta_l_sign != 1 && eta_l_sign != -1) {
    throw Error(ErrorCode::InputError, "eta(L_frak) must be +1 or -1");
  }
}

DensityPolynomial::DensityPolynomial(std::vector<Rational> m,
                                     std::optional<int> epsilon)
    : m_(std::move(m)), epsilon_(epsilon) {
  if (m_.empty()) {
    throw Error(ErrorCode::DensityDegreeMismatch,
                "density polynomial needs at least one coefficient");
  }
  if (epsilon_ && *epsilon_ != 1 && *epsilon_ != -1) {
    throw Error(ErrorCode::InputError, "density symmetry sign must be +1 or -1");
  }
}

std::vector<Rational> DensityPolynomial::padded(long d) const {
  if (d < 0 || m_.size() > static_cast<size_t>(d) + 1) {
    throw Error(ErrorCode::DensityDegreeMismatch,
                "density has " + std::to_string(m_.size()) +
                    " coefficients but d = " + std::to_string(d));
  }
  std::vector<Rational> out(m_);
  out.resize(static_cast<size_t>(d) + 1, Rational(0));
  if (epsilon_) {
    const Rational sign(*epsilon_);
    for (size_t k = 0; k < out.size(); ++k) {
      if (out[out.size() - 1 - k] != sign * out[k]) {
        throw Error(ErrorCode::DensityDegreeMismatch,
                    "declared density symmetry fails at k=" + std::to_string(k));
      }
    }
  }
  return out;
}

ConstantTermProfile::ConstantTermProfile(LEtaFunction l_in, FourierContext ctx_in)
    : l(std::move(l_in)), ctx(std::move(ctx_in)) {
  if (ctx.n != 1) {
    throw Error(ErrorCode::InputError, "constant-term profiles require n = 1");
  }
  if (ctx.q != l.q() || ctx.w != l.w()) {
    throw Error(ErrorCode::InputError,
                "context (q, w) must match the L-polynomial");
  }
}

LaurentProfile constant_term(const ConstantTermProfile& profile) {
  const long q = profile.ctx.q;
  const long d = profile.ctx.d();
  const int w = profile.ctx.w;
  const Rational eta(profile.ctx.eta_l_sign);
  LaurentProfile out(q);
  const QSqrtScalar q_minus_half_d = QSqrtScalar::half_power(q, -d);
  // eta(L_frak) q^{d(s-1/2)} L(2s): term c_j at Z^{2j-d}.
  for (int j = 0; j <= w; ++j) {
    const Integer& c = profile.l.coeffs().coeff(j);
    if (c == 0) continue;
    out.add_term(static_cast<int>(2 * j - d),
                 q_minus_half_d * (eta * Rational(c)));
  }
  // q^{-d(s+1/2)} q^{w(1/2+2s)} L(2s+1): term c_j q^{-j} at Z^{d-2w+2j}.
  const QSqrtScalar second_prefactor = QSqrtScalar::half_power(q, w - d);
  for (int j = 0; j <= w; ++j) {
    const Integer& c = profile.l.coeffs().coeff(j);
    if (c == 0) continue;
    out.add_term(static_cast<int>(d - 2 * w + 2 * j),
                 second_prefactor * (Rational(c) * pow_rational(Rational(q), -j)));
  }
  return out;
}

bool check_constant_term_symmetry(const ConstantTermProfile& profile) {
  const LaurentProfile w = constant_term(profile);
  const QSqrtScalar eta = QSqrtScalar::of(profile.ctx.q, Rational(profile.ctx.eta_l_sign));
  return laurent_involute(w) == w * eta;
}

LaurentProfile nonsingular_term(const FourierContext& ctx, const DensityPolynomial& den) {
  const long d = ctx.d();
  const std::vector<Rational> m = den.padded(d);
  LaurentProfile out(ctx.q);
  const QSqrtScalar prefactor = QSqrtScalar::half_power(ctx.q, -d * ctx.n);
  for (size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    out.add_term(static_cast<int>(2 * static_cast<long>(k) - d), prefactor * m[k]);
  }
  return out;
}

QSqrtScalar fourier_higher_derivative(const LaurentProfile& term, int r) {
  return laurent_s_derivative_at_zero(term, r);
}

std::vector<RationalFunction> script_L_factor(int n, const LEtaFunction& l,
                                              const ZetaData& zeta_base) {
  if (n < 1) {
    throw Error(ErrorCode::InputError, "rank n must be >= 1");
  }
  if (n >= 2 && zeta_base.q != l.q()) {
    throw Error(ErrorCode::InputError, "zeta data must share q with L");
  }
  std::vector<RationalFunction> out;
  out.reserve(static_cast<size_t>(n));
  const Rational q(l.q());
  for (int i = 1; i <= n; ++i) {
    const Rational qi_inv = pow_rational(q, -i);
    if (i % 2 == 1) {
      // L(i+2s, eta) = sum c_k q^{-ki} T^{2k}
      std::vector<Rational> num;
      for (int k = 0; k <= l.w(); ++k) {
        num.emplace_back(Rational(l.coeffs().coeff(k)) * pow_rational(q, -static_cast<long>(k) * i));
        if (k < l.w()) num.emplace_back(0);
      }
      out.push_back(RationalFunction::from_rational_coeffs(num, {Rational(1)}));
    } else {
      // zeta_X(i+2s) = P_X(q^{-i} T^2) / ((1 - q^{-i} T^2)(1 - q^{1-i} T^2))
      std::vector<Rational> num;
      const int deg = 2 * zeta_base.g;
      for (int k = 0; k <= deg; ++k) {
        num.emplace_back(Rational(zeta_base.numerator.coeff(k)) *
                         pow_rational(q, -static_cast<long>(k) * i));
        if (k < deg) num.emplace_back(0);
      }
      std::vector<Rational> d1 = {Rational(1), Rational(0), -qi_inv};
      std::vector<Rational> d2 = {Rational(1), Rational(0), -pow_rational(q, 1 - i)};
      RationalFunction pole1 = RationalFunction::from_rational_coeffs(d1, {Rational(1)});
      RationalFunction pole2 = RationalFunction::from_rational_coeffs(d2, {Rational(1)});
      RationalFunction numerator = RationalFunction::from_rational_coeffs(num, {Rational(1)});
      out.push_back(numerator * (pole1 * pole2).inverse());
    }
  }
  return out;
}

UnnormalizedFourier unnormalized_fourier(const FourierContext& ctx,
                                         const DensityPolynomial& den,
                                         const LEtaFunction& l,
                                         const ZetaData& zeta_base) {
  // Prefactor q^{(d-nw)(s-n/2)} q^{-n^2 w / 2} Den(q^{-2s})
  //   = q^{-dn/2} Z^{nw-d} sum_k m_k Z^{2k}.
  const long shift = static_cast<long>(ctx.n) * ctx.w;
  UnnormalizedFourier out{nonsingular_term(ctx, den).shifted(static_cast<int>(shift)),
                          {}};
  for (auto& factor : script_L_factor(ctx.n, l, zeta_base)) {
    out.l_inverse_factors.push_back(factor.inverse());
  }
  return out;
}

bool vanishing_predicate(const FourierContext& ctx, int r) {
  const int eta_pow = (ctx.n % 2 == 0) ? 1 : ctx.eta_l_sign;
  const int parity = (r % 2 == 0) ? 1 : -1;
  return parity == eta_pow;
}

bool normalization_roundtrip(const FourierContext& ctx, const DensityPolynomial& den,
                             const LEtaFunction& l, const ZetaData& zeta_base,
                             int samples) {
  const UnnormalizedFourier pair = unnormalized_fourier(ctx, den, l, zeta_base);
  const LaurentProfile normalized = nonsingular_term(ctx, den);
  const long nw = static_cast<long>(ctx.n) * ctx.w;

  // Symbolic checks: the prefactor is the normalized term shifted by Z^{nw},
  // and the script-L factors cancel their inverses exactly in Q(T).
  if (pair.prefactor.shifted(static_cast<int>(-nw)) != normalized) {
    return false;
  }
  {
    RationalFunction product(IntPolynomial::one(), IntPolynomial::one());
    const auto forward_factors = script_L_factor(ctx.n, l, zeta_base);
    for (size_t i = 0; i < forward_factors.size(); ++i) {
      product = product * forward_factors[i] * pair.l_inverse_factors[i];
    }
    if (!(product == RationalFunction(IntPolynomial::one(), IntPolynomial::one()))) {
      return false;
    }
  }

  // Evaluation check at rational sample points t = 2, 3, 4, ...:
  //   prefactor(t) * prod(inverse factors)(t) * t^{-nw} * scriptL(t)
  // must equal normalized(t); poles are skipped.
  RationalFunction l_inverse_product;
  {
    RationalFunction acc =
        RationalFunction(IntPolynomial::one(), IntPolynomial::one());
    for (const auto& f : pair.l_inverse_factors) acc = acc * f;
    l_inverse_product = acc;
  }
  const std::vector<RationalFunction> forward = script_L_factor(ctx.n, l, zeta_base);
  int done = 0;
  long t_int = 2;
  while (done < samples) {
    const Rational t(t_int++);
    if (t_int > 1000) {
      throw Error(ErrorCode::InputError, "could not find enough sample points");
    }
    auto inv_val = l_inverse_product.eval(t);
    if (!inv_val) continue;
    Rational forward_val(1);
    bool pole = false;
    for (const auto& f : forward) {
      auto v = f.eval(t);
      if (!v) {
        pole = true;
        break;
      }
      forward_val *= *v;
    }
    if (pole) continue;
    const QSqrtScalar lhs = pair.prefactor.eval(t) *
                            (*inv_val * forward_val * pow_rational(t, -nw));
    if (lhs != normalized.eval(t)) {
      return false;
    }
    ++done;
  }
  return true;
}

}  // namespace ffeis
