#pragma once

#include "ffeis/curves.hpp"
#include "ffeis/degrees.hpp"

namespace ffeis::builtin {

// L = 1 - 2T + 2T^2 over q = 2: the smallest nontrivial L-polynomial, used
// as the default fixture everywhere.
LEtaFunction l_q2();

// L = 1 over q = 2 (the zero-dimensional Frobenius module).
LEtaFunction l_trivial();

// Context with n = 1, q = 2, w = 2, d = 6, eta(L_frak) = +1; pairs with
// l_q2() to give the degree-6 constant-term profile.
FourierContext ctx_d6();

ConstantTermProfile profile_d6();

// Split cover over F_3 with genus-2 base, found by enumeration and frozen;
// its point counts and L-polynomial are pinned in the test suite.
SplitCoverModel cover_model_f3();

}  // namespace ffeis::builtin
