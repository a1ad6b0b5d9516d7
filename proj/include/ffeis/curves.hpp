#pragma once

#include <vector>

#include "ffeis/int_polynomial.hpp"

namespace ffeis {

inline constexpr long kDefaultEnumerationBudget = 10'000'000;

// Split hyperelliptic double-cover data over F_p (p an odd prime):
//   base  X : y^2 = f1(x) f2(x)
//   cover X': u^2 = f1(x), v^2 = f2(x)
// with f1 f2 squarefree, gcd(f1, f2) = 1 and both degrees even and positive,
// so X' -> X is an unramified double cover of smooth projective curves.
struct SplitCoverModel {
  SplitCoverModel(long p, std::vector<long> f1, std::vector<long> f2);

  long p;
  std::vector<long> f1;  // low degree first, reduced mod p
  std::vector<long> f2;

  int genus_base() const;   // (deg f1 + deg f2 - 2) / 2
  int genus_cover() const;  // 2 * genus_base() - 1
};

enum class CurveSheet { base, cover };

// Number of F_{p^i}-points of the smooth projective model, affine chart plus
// points at infinity (see the square tests on the leading coefficients).
long count_points(const SplitCoverModel& model, CurveSheet which, int i,
                  long budget = kDefaultEnumerationBudget);

struct PointCounts {
  long q = 0;
  std::vector<long> counts;  // counts[i-1] = #C(F_{q^i})
};

// Zeta numerator P of degree 2g: P(0) = 1 and c_{2g-j} = q^{g-j} c_j exactly.
struct ZetaData {
  long q = 0;
  int g = 0;
  IntPolynomial numerator;
};

bool check_zeta_functional_equation(long q, int g, const IntPolynomial& p);

// Recovers P from exp(sum N_i T^i / i) * (1-T)(1-qT), requiring integral
// coefficients, consistency of any surplus counts, and the functional
// equation.
ZetaData zeta_from_counts(const PointCounts& counts, int g);

// Re-expands N_1..N_m from a zeta numerator.
std::vector<long> counts_from_zeta(const ZetaData& zeta, int m);

// Exact quotient P_{X'} / P_X, a polynomial of degree 2 g_X - 2.
IntPolynomial l_eta_from_pair(const ZetaData& base, const ZetaData& cover);

}  // namespace ffeis
