#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ffeis/rational.hpp"

namespace ffeis {

inline constexpr int kDefaultCycleEnumerationBound = 10;

// A single cycle on {1, ..., l}: images[i] = c(i+1). Validated to have
// exactly one cycle.
struct CyclicPermutation {
  explicit CyclicPermutation(std::vector<int> images_in);
  std::vector<int> images;
  int length() const { return static_cast<int>(images.size()); }
};

// Number of positions i with c(i) <= i; equals 1 on the unique 1-cycle.
int delta(const CyclicPermutation& c);

// f_n(x) = sum over cyclic permutations of x^{delta(c)}: positive integer
// coefficients a_1..a_n summing to (n-1)!.
class FPolynomial {
 public:
  FPolynomial(int n, std::vector<Integer> coeffs_from_degree_one);

  int n() const { return n_; }
  // Coefficient of x^i, 1 <= i <= n.
  const Integer& coefficient(int i) const { return a_[static_cast<size_t>(i - 1)]; }

  Rational eval(const Rational& x) const;
  bool operator==(const FPolynomial& rhs) const {
    return n_ == rhs.n_ && a_ == rhs.a_;
  }

  std::string to_text() const;  // e.g. "x + x^2"

 private:
  int n_;
  std::vector<Integer> a_;
};

// Via f_{n+1} = n x f_n + x (1 - x) f_n', f_1 = x.
FPolynomial f_poly_recursive(int n);

// Histogram of delta over all (n-1)! cyclic permutations.
FPolynomial f_poly_enumerated(int n, int bound = kDefaultCycleEnumerationBound);

// Visits every cyclic permutation of {1..n} once.
void for_each_cyclic(int n, const std::function<void(const CyclicPermutation&)>& visit);

}  // namespace ffeis
