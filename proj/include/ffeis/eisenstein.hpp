#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ffeis/l_function.hpp"
#include "ffeis/laurent.hpp"
#include "ffeis/rational_function.hpp"

namespace ffeis {

// Degrees and signs entering a Fourier expansion: rank n, the fixed field
// size q, w = deg omega_X, the degrees of the twisting line bundles and the
// sign eta(L_frak). The derived offset is
//   d = n*(deg L_frak + w) - deg E.
struct FourierContext {
  FourierContext(int n, long q, int w, long deg_l_frak, long deg_e, int eta_l_sign);

  int n;
  long q;
  int w;
  long deg_l_frak;
  long deg_e;
  int eta_l_sign;  // +1 or -1

  long d() const { return n * (deg_l_frak + w) - deg_e; }
};

// Coefficients m_0..m_d of Den(q^{-2s}) = sum m_k (q^{-2s})^k, supplied by
// the caller (never derived here), with an optional declared symmetry sign
// epsilon meaning m_{d-k} = epsilon * m_k.
class DensityPolynomial {
 public:
  explicit DensityPolynomial(std::vector<Rational> m,
                             std::optional<int> epsilon = std::nullopt);

  const std::vector<Rational>& m() const { return m_; }
  std::optional<int> epsilon() const { return epsilon_; }

  // Coefficients padded/validated against a context offset d; throws
  // DensityDegreeMismatch when longer than d+1 or when a declared symmetry
  // fails on the padded list.
  std::vector<Rational> padded(long d) const;

 private:
  std::vector<Rational> m_;
  std::optional<int> epsilon_;
};

// n = 1 constant-term data; chi/chi_0 prefactors are divided out.
struct ConstantTermProfile {
  ConstantTermProfile(LEtaFunction l_in, FourierContext ctx_in);
  LEtaFunction l;
  FourierContext ctx;
};

// W(s) = eta(L_frak) q^{d(s-1/2)} L(2s,eta)
//        + q^{-d(s+1/2)} q^{w(1/2+2s)} L(2s+1,eta), as a profile in
// Z = q^{-s} over Q[sqrt(q)].
LaurentProfile constant_term(const ConstantTermProfile& profile);

// involute(W) == eta(L_frak) * W, exactly.
bool check_constant_term_symmetry(const ConstantTermProfile& profile);

// q^{-dn/2} Z^{-d} sum_k m_k Z^{2k}.
LaurentProfile nonsingular_term(const FourierContext& ctx, const DensityPolynomial& den);

// (log q)^{-r} (d/ds)^r at s = 0 of the given term.
QSqrtScalar fourier_higher_derivative(const LaurentProfile& term, int r);

// The factors of script-L_n(s) = prod_{i=1}^n L(i+2s, eta^i) in T = q^{-s}:
// odd i substitutes T -> q^{-i} T^2 into L, even i into the full zeta
// function of the base curve.
std::vector<RationalFunction> script_L_factor(int n, const LEtaFunction& l,
                                              const ZetaData& zeta_base);

// E_a decomposed as a prefactor profile times prod(script_L_factor)^{-1};
// multiplying back by q^{nws} * script-L_n reproduces nonsingular_term.
struct UnnormalizedFourier {
  LaurentProfile prefactor;
  std::vector<RationalFunction> l_inverse_factors;
};

UnnormalizedFourier unnormalized_fourier(const FourierContext& ctx,
                                         const DensityPolynomial& den,
                                         const LEtaFunction& l,
                                         const ZetaData& zeta_base);

// true iff (-1)^r = eta_l_sign^n; when false every symmetric term's r-th
// derivative vanishes.
bool vanishing_predicate(const FourierContext& ctx, int r);

// Exercises the normalization round-trip: evaluates the unnormalized pair
// against the normalized term at `samples` rational points (avoiding poles),
// and for n = 1 checks the script-L reconstruction symbolically.
bool normalization_roundtrip(const FourierContext& ctx, const DensityPolynomial& den,
                             const LEtaFunction& l, const ZetaData& zeta_base,
                             int samples = 10);

}  // namespace ffeis
