#include "ffeis/perm_sums.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ffeis/cycle_polynomials.hpp"
#include "ffeis/errors.hpp"

namespace ffeis {

namespace {

// Trace table entry Tr(phi^j (1-phi)^{-l}); filled on demand.
class TraceTable {
 public:
  explicit TraceTable(const FrobeniusModule& module) : module_(module) {}

  const Rational& get(int j, int ell) {
    const auto key = std::make_pair(j, ell);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_
               .emplace(key, trace_functional(module_, static_cast<unsigned>(j),
                                              static_cast<unsigned>(ell)))
               .first;
    }
    return it->second;
  }

 private:
  const FrobeniusModule& module_;
  std::map<std::pair<int, int>, Rational> cache_;
};

Rational fixed_point_factor(const PermSumContext& ctx, TraceTable& traces) {
  return -traces.get(1, 1) - make_rational(Integer(ctx.d), Integer(2));
}

// a_g over an explicit permutation, sharing one trace table.
Rational a_g_cached(const PermSumContext& ctx, const std::vector<int>& perm,
                    TraceTable& traces) {
  const int r = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<size_t>(r), false);
  Rational product(1);
  for (int start = 1; start <= r; ++start) {
    if (seen[static_cast<size_t>(start - 1)]) continue;
    // Walk the cycle through `start`, collecting length and the count of
    // positions with g(i) <= i.
    int length = 0;
    int descents = 0;
    int at = start;
    do {
      seen[static_cast<size_t>(at - 1)] = true;
      const int next = perm[static_cast<size_t>(at - 1)];
      if (next <= at) ++descents;
      at = next;
      ++length;
    } while (at != start);
    if (length == 1) {
      product *= fixed_point_factor(ctx, traces);
    } else {
      product *= -traces.get(descents, length);
    }
    if (product == 0) {
      return product;
    }
  }
  return product;
}

}  // namespace

Rational gamma_ell(const PermSumContext& ctx, int ell) {
  if (ell < 1) {
    throw Error(ErrorCode::InputError, "ell must be >= 1");
  }
  TraceTable traces(ctx.module);
  if (ell == 1) {
    return fixed_point_factor(ctx, traces);
  }
  // Group by delta through f_ell.
  const FPolynomial f = f_poly_recursive(ell);
  Rational acc(0);
  for (int j = 1; j <= ell; ++j) {
    const Integer& count = f.coefficient(j);
    if (count != 0) {
      acc += Rational(count) * traces.get(j, ell);
    }
  }
  return -acc;
}

Rational a_g(const PermSumContext& ctx, const std::vector<int>& perm) {
  const int r = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<size_t>(r), false);
  for (int v : perm) {
    if (v < 1 || v > r || seen[static_cast<size_t>(v - 1)]) {
      throw Error(ErrorCode::InputError, "not a permutation of {1..r}");
    }
    seen[static_cast<size_t>(v - 1)] = true;
  }
  TraceTable traces(ctx.module);
  return a_g_cached(ctx, perm, traces);
}

Rational perm_sum(const PermSumContext& ctx, int r, int bound) {
  if (r < 0) {
    throw Error(ErrorCode::InputError, "r must be >= 0");
  }
  if (r > bound) {
    throw Error(ErrorCode::EnumerationBudget,
                "r exceeds the S_r enumeration bound " + std::to_string(bound));
  }
  if (r == 0) {
    return Rational(1);
  }
  TraceTable traces(ctx.module);
  std::vector<int> perm(static_cast<size_t>(r));
  std::iota(perm.begin(), perm.end(), 1);
  Rational total(0);
  do {
    total += a_g_cached(ctx, perm, traces);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

bool check_exp_identity(const PermSumContext& ctx, int order, int bound) {
  std::vector<Rational> lhs(static_cast<size_t>(order) + 1, Rational(0));
  std::vector<Rational> gamma_egf(static_cast<size_t>(order) + 1, Rational(0));
  Rational factorial(1);
  for (int r = 0; r <= order; ++r) {
    if (r >= 1) factorial *= r;
    lhs[static_cast<size_t>(r)] = perm_sum(ctx, r, bound) / factorial;
    if (r >= 1) {
      gamma_egf[static_cast<size_t>(r)] = gamma_ell(ctx, r) / factorial;
    }
  }
  TruncatedSeries rhs = series_exp(TruncatedSeries(std::move(gamma_egf)));
  return TruncatedSeries(std::move(lhs)) == rhs;
}

bool check_closed_form(const PermSumContext& ctx, int order, int bound) {
  std::vector<Rational> lhs(static_cast<size_t>(order) + 1, Rational(0));
  Rational factorial(1);
  for (int r = 0; r <= order; ++r) {
    if (r >= 1) factorial *= r;
    lhs[static_cast<size_t>(r)] = perm_sum(ctx, r, bound) / factorial;
  }
  // Right side in x = -u: q^{ds/2} L(s,eta)/L(0,eta)
  //   = e^{-(d/2) x} * sum_j c_j e^{j x} / L(0,eta).
  const LEtaFunction& l = ctx.module.l();
  TruncatedSeries l_part = poly_eval_exponential(l.coeffs(), 1, Rational(1), order);
  TruncatedSeries half_d(order);
  {
    std::vector<Rational> lin(static_cast<size_t>(order) + 1, Rational(0));
    if (order >= 1) lin[1] = make_rational(Integer(-ctx.d), Integer(2));
    half_d = TruncatedSeries(std::move(lin));
  }
  TruncatedSeries rhs =
      series_exp(half_d) * l_part / Rational(l.value_at_one());
  return TruncatedSeries(std::move(lhs)) == rhs;
}

}  // namespace ffeis
