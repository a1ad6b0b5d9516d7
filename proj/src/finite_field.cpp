#include "ffeis/finite_field.hpp"

#include <algorithm>

#include "ffeis/errors.hpp"

namespace ffeis {

namespace {

constexpr long kMaxFieldSize = 1L << 40;

long checked_pow(long p, int k) {
  long acc = 1;
  for (int i = 0; i < k; ++i) {
    if (acc > kMaxFieldSize / p) {
      throw Error(ErrorCode::EnumerationBudget,
                  "field size p^k too large to enumerate");
    }
    acc *= p;
  }
  return acc;
}

// F_p[x] helpers on little-endian coefficient vectors.
using Poly = std::vector<long>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmod(Poly a, const Poly& m, long p) {
  ptrim(a);
  while (a.size() >= m.size()) {
    const long lead = a.back();  // m is monic
    const size_t shift = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j) {
      a[shift + j] = ((a[shift + j] - lead * m[j]) % p + p) % p;
    }
    ptrim(a);
  }
  return a;
}

}  // namespace

bool FiniteField::is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool FiniteField::is_irreducible(long p, const std::vector<long>& poly) {
  Poly f = poly;
  ptrim(f);
  if (f.size() < 2) return false;  // constants are not irreducible here
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  // Any factorization has a factor of degree <= deg/2; try them all.
  for (int d = 1; d <= deg / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      Poly divisor(static_cast<size_t>(d) + 1, 0);
      long v = idx;
      for (int i = 0; i < d; ++i) {
        divisor[static_cast<size_t>(i)] = v % p;
        v /= p;
      }
      divisor[static_cast<size_t>(d)] = 1;  // monic
      if (pmod(f, divisor, p).empty()) {
        return false;
      }
    }
  }
  return true;
}

FiniteField::FiniteField(long p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::ModelInvariantViolation,
                "field characteristic must be prime, got " + std::to_string(p));
  }
  if (k < 1) {
    throw Error(ErrorCode::InputError, "extension degree must be >= 1");
  }
  size_ = checked_pow(p, k);
  if (k == 1) {
    mod_ = {0, 1};
    return;
  }
  // Scan x^k, x^k + 1, x^k + 2, ... in base-p digit order.
  long span = 1;
  for (int i = 0; i < k; ++i) span *= p;
  for (long idx = 0; idx < span; ++idx) {
    std::vector<long> candidate(static_cast<size_t>(k) + 1, 0);
    long v = idx;
    for (int i = 0; i < k; ++i) {
      candidate[static_cast<size_t>(i)] = v % p;
      v /= p;
    }
    candidate[static_cast<size_t>(k)] = 1;
    if (is_irreducible(p, candidate)) {
      mod_.assign(candidate.begin(), candidate.end());
      return;
    }
  }
  throw Error(ErrorCode::InputError, "no irreducible modulus found");
}

FiniteField::FiniteField(long p, int k, std::vector<long> modulus_low_first)
    : p_(p), k_(k) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::ModelInvariantViolation,
                "field characteristic must be prime, got " + std::to_string(p));
  }
  size_ = checked_pow(p, k);
  for (auto& c : modulus_low_first) c = ((c % p) + p) % p;
  if (static_cast<int>(modulus_low_first.size()) != k + 1 ||
      modulus_low_first.back() != 1) {
    throw Error(ErrorCode::ModelInvariantViolation,
                "modulus must be monic of degree k");
  }
  if (!is_irreducible(p, modulus_low_first)) {
    throw Error(ErrorCode::ModelInvariantViolation, "modulus is reducible");
  }
  mod_.assign(modulus_low_first.begin(), modulus_low_first.end());
}

FiniteField::Elem FiniteField::one() const {
  Elem e = zero();
  e[0] = 1;
  return e;
}

FiniteField::Elem FiniteField::from_int(long value) const {
  Elem e = zero();
  e[0] = static_cast<int32_t>(((value % p_) + p_) % p_);
  return e;
}

FiniteField::Elem FiniteField::add(const Elem& a, const Elem& b) const {
  Elem out(a);
  for (int i = 0; i < k_; ++i) {
    out[static_cast<size_t>(i)] =
        static_cast<int32_t>((out[static_cast<size_t>(i)] + b[static_cast<size_t>(i)]) % p_);
  }
  return out;
}

FiniteField::Elem FiniteField::sub(const Elem& a, const Elem& b) const {
  Elem out(a);
  for (int i = 0; i < k_; ++i) {
    out[static_cast<size_t>(i)] = static_cast<int32_t>(
        ((out[static_cast<size_t>(i)] - b[static_cast<size_t>(i)]) % p_ + p_) % p_);
  }
  return out;
}

FiniteField::Elem FiniteField::neg(const Elem& a) const {
  Elem out(a);
  for (auto& c : out) {
    c = static_cast<int32_t>((p_ - c) % p_);
  }
  return out;
}

FiniteField::Elem FiniteField::mul(const Elem& a, const Elem& b) const {
  Elem out;
  std::vector<long> scratch;
  mul_into(a, b, out, scratch);
  return out;
}

void FiniteField::mul_into(const Elem& a, const Elem& b, Elem& out,
                           std::vector<long>& scratch) const {
  scratch.assign(static_cast<size_t>(2 * k_ - 1), 0);
  for (int i = 0; i < k_; ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    const long ai = a[static_cast<size_t>(i)];
    for (int j = 0; j < k_; ++j) {
      scratch[static_cast<size_t>(i + j)] += ai * b[static_cast<size_t>(j)];
    }
  }
  // Reduce by the monic modulus, high degree down.
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const long lead = scratch[static_cast<size_t>(d)] % p_;
    if (lead == 0) continue;
    for (int j = 0; j <= k_; ++j) {
      scratch[static_cast<size_t>(d - k_ + j)] -= lead * mod_[static_cast<size_t>(j)];
    }
  }
  out.assign(static_cast<size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    out[static_cast<size_t>(i)] =
        static_cast<int32_t>(((scratch[static_cast<size_t>(i)] % p_) + p_) % p_);
  }
}

bool FiniteField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](int32_t c) { return c == 0; });
}

long FiniteField::index_of(const Elem& a) const {
  long idx = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    idx = idx * p_ + a[static_cast<size_t>(i)];
  }
  return idx;
}

FiniteField::Elem FiniteField::element(long index) const {
  Elem e = zero();
  for (int i = 0; i < k_; ++i) {
    e[static_cast<size_t>(i)] = static_cast<int32_t>(index % p_);
    index /= p_;
  }
  return e;
}

FiniteField::Elem FiniteField::eval_poly(const std::vector<long>& poly,
                                         const Elem& x) const {
  Elem out, tmp;
  std::vector<long> scratch;
  eval_poly_into(poly, x, out, tmp, scratch);
  return out;
}

void FiniteField::eval_poly_into(const std::vector<long>& poly, const Elem& x,
                                 Elem& out, Elem& tmp,
                                 std::vector<long>& scratch) const {
  out.assign(static_cast<size_t>(k_), 0);
  for (size_t i = poly.size(); i-- > 0;) {
    mul_into(out, x, tmp, scratch);
    std::swap(out, tmp);
    out[0] = static_cast<int32_t>((out[0] + ((poly[i] % p_) + p_)) % p_);
  }
}

bool FiniteField::next_element(Elem& e) const {
  for (int i = 0; i < k_; ++i) {
    if (e[static_cast<size_t>(i)] + 1 < p_) {
      ++e[static_cast<size_t>(i)];
      return true;
    }
    e[static_cast<size_t>(i)] = 0;
  }
  return false;
}

void FiniteField::build_square_table() const {
  square_table_.assign(static_cast<size_t>(size_), false);
  Elem z = zero(), sq;
  std::vector<long> scratch;
  do {
    mul_into(z, z, sq, scratch);
    square_table_[static_cast<size_t>(index_of(sq))] = true;
  } while (next_element(z));
}

int FiniteField::quadratic_character(const Elem& a) const {
  if (is_zero(a)) return 0;
  if (square_table_.empty()) {
    build_square_table();
  }
  return square_table_[static_cast<size_t>(index_of(a))] ? 1 : -1;
}

}  // namespace ffeis
