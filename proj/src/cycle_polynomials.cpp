#include "ffeis/cycle_polynomials.hpp"

#include <algorithm>

#include "ffeis/errors.hpp"

namespace ffeis {

CyclicPermutation::CyclicPermutation(std::vector<int> images_in)
    : images(std::move(images_in)) {
  const int n = length();
  if (n == 0) {
    throw Error(ErrorCode::InputError, "empty permutation");
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  int at = 1;
  for (int step = 0; step < n; ++step) {
    if (at < 1 || at > n || seen[static_cast<size_t>(at - 1)]) {
      throw Error(ErrorCode::InputError, "not a single cycle");
    }
    seen[static_cast<size_t>(at - 1)] = true;
    at = images[static_cast<size_t>(at - 1)];
  }
  if (at != 1) {
    throw Error(ErrorCode::InputError, "not a single cycle");
  }
}

int delta(const CyclicPermutation& c) {
  int count = 0;
  for (int i = 1; i <= c.length(); ++i) {
    if (c.images[static_cast<size_t>(i - 1)] <= i) ++count;
  }
  return count;
}

FPolynomial::FPolynomial(int n, std::vector<Integer> coeffs_from_degree_one)
    : n_(n), a_(std::move(coeffs_from_degree_one)) {
  if (n_ < 1 || a_.size() != static_cast<size_t>(n_)) {
    throw Error(ErrorCode::InputError, "f_n needs coefficients a_1..a_n");
  }
  Integer total(0);
  for (const auto& c : a_) {
    if (c < 0) {
      throw Error(ErrorCode::InputError, "f_n coefficients must be >= 0");
    }
    total += c;
  }
  Integer factorial(1);
  for (int j = 2; j < n_; ++j) factorial *= j;
  if (total != factorial) {
    throw Error(ErrorCode::InputError,
                "f_n coefficients must sum to (n-1)!");
  }
}

Rational FPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = a_.size(); i-- > 0;) {
    acc = (acc + Rational(a_[i])) * x;
  }
  return acc;
}

std::string FPolynomial::to_text() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    const Integer& c = coefficient(i);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.get_str() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FPolynomial f_poly_recursive(int n) {
  if (n < 1) {
    throw Error(ErrorCode::InputError, "n must be >= 1");
  }
  // a^{(n+1)}_i = i a^{(n)}_i + (n+1-i) a^{(n)}_{i-1}
  std::vector<Integer> a = {Integer(1)};  // f_1 = x
  for (int m = 1; m < n; ++m) {
    std::vector<Integer> next(static_cast<size_t>(m) + 1, Integer(0));
    for (int i = 1; i <= m + 1; ++i) {
      Integer value(0);
      if (i <= m) value += Integer(i) * a[static_cast<size_t>(i - 1)];
      if (i >= 2) value += Integer(m + 1 - i) * a[static_cast<size_t>(i - 2)];
      next[static_cast<size_t>(i - 1)] = value;
    }
    a = std::move(next);
  }
  return FPolynomial(n, std::move(a));
}

void for_each_cyclic(int n, const std::function<void(const CyclicPermutation&)>& visit) {
  if (n == 1) {
    visit(CyclicPermutation({1}));
    return;
  }
  // Cycles (1 -> t_1 -> t_2 -> ... -> t_{n-1} -> 1) over permutations (t_i)
  // of {2..n}.
  std::vector<int> tail(static_cast<size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) tail[static_cast<size_t>(i)] = i + 2;
  do {
    std::vector<int> images(static_cast<size_t>(n), 0);
    int from = 1;
    for (int to : tail) {
      images[static_cast<size_t>(from - 1)] = to;
      from = to;
    }
    images[static_cast<size_t>(from - 1)] = 1;
    visit(CyclicPermutation(std::move(images)));
  } while (std::next_permutation(tail.begin(), tail.end()));
}

FPolynomial f_poly_enumerated(int n, int bound) {
  if (n < 1) {
    throw Error(ErrorCode::InputError, "n must be >= 1");
  }
  if (n > bound) {
    throw Error(ErrorCode::EnumerationBudget,
                "n exceeds the cyclic enumeration bound " + std::to_string(bound));
  }
  std::vector<Integer> hist(static_cast<size_t>(n), Integer(0));
  for_each_cyclic(n, [&](const CyclicPermutation& c) {
    hist[static_cast<size_t>(delta(c) - 1)] += 1;
  });
  return FPolynomial(n, std::move(hist));
}

}  // namespace ffeis
