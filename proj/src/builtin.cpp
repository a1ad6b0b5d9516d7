#include "ffeis/builtin.hpp"

namespace ffeis::builtin {

LEtaFunction l_q2() { return LEtaFunction(2, IntPolynomial({1, -2, 2})); }

LEtaFunction l_trivial() { return LEtaFunction(2, IntPolynomial({1})); }

FourierContext ctx_d6() {
  // d = 1*(deg L_frak + w) - deg E = (5 + 2) - 1 = 6
  return FourierContext(1, 2, 2, 5, 1, +1);
}

ConstantTermProfile profile_d6() {
  return ConstantTermProfile(l_q2(), ctx_d6());
}

SplitCoverModel cover_model_f3() {
  // y^2 = (x^2 + 1)(x^4 + x + 2) over F_3: base genus 2, cover genus 3.
  // Frozen pipeline values: P_X = 1 + 2T^2 + 9T^4,
  // P_X' = 1 + 5T^2 + 15T^4 + 27T^6, L = 1 + 3T^2.
  return SplitCoverModel(3, {1, 0, 1}, {2, 1, 0, 0, 1});
}

}  // namespace ffeis::builtin
