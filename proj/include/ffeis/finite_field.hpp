#pragma once

#include <cstdint>
#include <vector>

namespace ffeis {

// F_{p^k} as F_p[x] modulo a monic irreducible of degree k. Elements are
// little-endian coefficient vectors of length k. Built for exhaustive
// enumeration of small fields, not for cryptographic sizes.
class FiniteField {
 public:
  using Elem = std::vector<int32_t>;

  // Modulus defaults to the lexicographically first monic irreducible of
  // degree k (coefficients read as base-p digits, smallest value first), so
  // results are identical across runs and platforms.
  FiniteField(long p, int k);
  FiniteField(long p, int k, std::vector<long> modulus_low_first);

  long p() const { return p_; }
  int k() const { return k_; }
  // p^k; construction rejects fields that overflow this.
  long size() const { return size_; }
  const std::vector<int32_t>& modulus() const { return mod_; }

  Elem zero() const { return Elem(static_cast<size_t>(k_), 0); }
  Elem one() const;
  Elem from_int(long value) const;  // image of an integer under F_p -> F_{p^k}

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;

  // Allocation-free multiply for hot enumeration loops; `scratch` must be a
  // reusable buffer (resized internally), `out` may not alias a or b.
  void mul_into(const Elem& a, const Elem& b, Elem& out,
                std::vector<long>& scratch) const;

  bool is_zero(const Elem& a) const;

  long index_of(const Elem& a) const;   // sum a_j p^j
  Elem element(long index) const;

  // Horner evaluation of an F_p polynomial (low degree first) at a point.
  Elem eval_poly(const std::vector<long>& poly, const Elem& x) const;
  void eval_poly_into(const std::vector<long>& poly, const Elem& x, Elem& out,
                      Elem& tmp, std::vector<long>& scratch) const;

  // In-place base-p increment; returns false after wrapping past the last
  // element (all digits p-1).
  bool next_element(Elem& e) const;

  // chi(a) in {-1, 0, +1}: the quadratic character, via a precomputed
  // square table (built lazily on first use).
  int quadratic_character(const Elem& a) const;

  static bool is_prime(long p);
  // Trial division by every monic polynomial of degree 1..k/2.
  static bool is_irreducible(long p, const std::vector<long>& poly);

 private:
  void build_square_table() const;

  long p_;
  int k_;
  long size_;
  std::vector<int32_t> mod_;  // full modulus, degree k, monic
  mutable std::vector<bool> square_table_;
};

}  // namespace ffeis
