#pragma once

#include "ffeis/l_function.hpp"

namespace ffeis {

inline constexpr int kDefaultPermSumBound = 8;

// Data entering the permutation-weighted sums: the Frobenius module and
// the degree offset d.
struct PermSumContext {
  PermSumContext(FrobeniusModule module_in, long d_in)
      : module(std::move(module_in)), d(d_in) {}
  FrobeniusModule module;
  long d;
};

// Gamma_1 = -Tr(phi (1-phi)^{-1}) - d/2;
// Gamma_l = -sum_{c in C_l} Tr(phi^{delta(c)} (1-phi)^{-l}) for l > 1.
Rational gamma_ell(const PermSumContext& ctx, int ell);

// Product over the cycles of g (given as images on {1..r}): a fixed point
// contributes Gamma_1's trace term, an l-cycle contributes
// -Tr(phi^{delta(c)} (1-phi)^{-l}) with delta read off the cycle in place
// (delta only depends on the relative order, so no relabeling is needed).
Rational a_g(const PermSumContext& ctx, const std::vector<int>& perm);

// sum_{g in S_r} a_g; r = 0 gives 1.
Rational perm_sum(const PermSumContext& ctx, int r, int bound = kDefaultPermSumBound);

// EGF identity: sum_r perm_sum(r) x^r / r! = exp(sum_l Gamma_l x^l / l!),
// coefficient-wise through the given order.
bool check_exp_identity(const PermSumContext& ctx, int order,
                        int bound = kDefaultPermSumBound);

// Closed form: the same EGF equals the series in x = -u of
// q^{ds/2} L(s,eta) / L(0,eta).
bool check_closed_form(const PermSumContext& ctx, int order,
                       int bound = kDefaultPermSumBound);

}  // namespace ffeis
