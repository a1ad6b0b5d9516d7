#include "ffeis/curves.hpp"

#include <numeric>

#include "ffeis/errors.hpp"
#include "ffeis/finite_field.hpp"
#include "ffeis/series.hpp"

namespace ffeis {

namespace {

using Poly = std::vector<long>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce_mod(const Poly& a, long p) {
  Poly out;
  out.reserve(a.size());
  for (long c : a) out.push_back(((c % p) + p) % p);
  ptrim(out);
  return out;
}

Poly pmul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  ptrim(out);
  return out;
}

long inv_mod(long a, long p) {
  long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
  while (new_r != 0) {
    const long quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  return ((t % p) + p) % p;
}

Poly pmod_poly(Poly a, const Poly& m, long p) {
  ptrim(a);
  const long lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size() && !a.empty()) {
    const long factor = (a.back() * lead_inv) % p;
    const size_t shift = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j) {
      a[shift + j] = ((a[shift + j] - factor * m[j]) % p + p) % p;
    }
    ptrim(a);
  }
  return a;
}

Poly pgcd(Poly a, Poly b, long p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pmod_poly(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly pderiv(const Poly& a, long p) {
  Poly out;
  for (size_t i = 1; i < a.size(); ++i) {
    out.push_back((static_cast<long>(i) * a[i]) % p);
  }
  ptrim(out);
  return out;
}

bool squarefree(const Poly& a, long p) {
  Poly g = pgcd(a, pderiv(a, p), p);
  return g.size() == 1;  // constant gcd
}

}  // namespace

SplitCoverModel::SplitCoverModel(long p_in, std::vector<long> f1_in,
                                 std::vector<long> f2_in)
    : p(p_in), f1(reduce_mod(f1_in, p_in)), f2(reduce_mod(f2_in, p_in)) {
  if (!FiniteField::is_prime(p) || p == 2) {
    throw Error(ErrorCode::ModelInvariantViolation,
                "base field must be F_p with p an odd prime");
  }
  auto check_factor = [&](const Poly& f, const char* name) {
    if (f.empty()) {
      throw Error(ErrorCode::ModelInvariantViolation,
                  std::string(name) + " must be nonzero with nonzero leading coefficient");
    }
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 0 || deg % 2 != 0) {
      throw Error(ErrorCode::ModelInvariantViolation,
                  std::string(name) + " must have positive even degree");
    }
  };
  check_factor(f1, "f1");
  check_factor(f2, "f2");
  if (pgcd(f1, f2, p).size() != 1) {
    throw Error(ErrorCode::ModelInvariantViolation, "f1 and f2 must be coprime");
  }
  if (!squarefree(pmul(f1, f2, p), p)) {
    throw Error(ErrorCode::ModelInvariantViolation, "f1*f2 must be squarefree");
  }
}

int SplitCoverModel::genus_base() const {
  const int deg = static_cast<int>(f1.size() + f2.size()) - 2;
  return (deg - 2) / 2;
}

int SplitCoverModel::genus_cover() const { return 2 * genus_base() - 1; }

long count_points(const SplitCoverModel& model, CurveSheet which, int i,
                  long budget) {
  if (i < 1) {
    throw Error(ErrorCode::InputError, "extension index must be >= 1");
  }
  long q_i = 1;
  for (int j = 0; j < i; ++j) {
    if (q_i > budget / model.p) {
      throw Error(ErrorCode::EnumerationBudget,
                  "p^i exceeds enumeration budget " + std::to_string(budget));
    }
    q_i *= model.p;
  }
  FiniteField field(model.p, i);

  const long e1 = model.f1.back();
  const long e2 = model.f2.back();

  long total = 0;
  // Points at infinity: the model has even-degree factors, so the fibre over
  // x = infinity is cut out by the leading coefficients.
  const int chi_e1 = field.quadratic_character(field.from_int(e1));
  const int chi_e2 = field.quadratic_character(field.from_int(e2));
  if (which == CurveSheet::base) {
    total += 1 + field.quadratic_character(field.from_int(e1 * e2));
  } else {
    total += (1 + chi_e1) * (1 + chi_e2);
  }

  FiniteField::Elem x = field.zero(), v1, v2, product, tmp;
  std::vector<long> scratch;
  do {
    field.eval_poly_into(model.f1, x, v1, tmp, scratch);
    field.eval_poly_into(model.f2, x, v2, tmp, scratch);
    if (which == CurveSheet::base) {
      // #{y : y^2 = f1(x) f2(x)} = 1 + chi(f1 f2)
      field.mul_into(v1, v2, product, scratch);
      total += 1 + field.quadratic_character(product);
    } else {
      // #{(u,v) : u^2 = f1(x), v^2 = f2(x)} = (1 + chi f1)(1 + chi f2)
      total += (1 + field.quadratic_character(v1)) *
               (1 + field.quadratic_character(v2));
    }
  } while (field.next_element(x));
  return total;
}

bool check_zeta_functional_equation(long q, int g, const IntPolynomial& p) {
  if (p.degree() != std::optional<int>(2 * g)) {
    return false;
  }
  if (p.coeff(0) != 1) {
    return false;
  }
  for (int j = 0; j <= g; ++j) {
    // c_{2g-j} = q^{g-j} c_j
    if (p.coeff(2 * g - j) != pow_integer(Integer(q), static_cast<unsigned long>(g - j)) * p.coeff(j)) {
      return false;
    }
  }
  return true;
}

ZetaData zeta_from_counts(const PointCounts& counts, int g) {
  if (g < 0) {
    throw Error(ErrorCode::InputError, "genus must be >= 0");
  }
  const int m = static_cast<int>(counts.counts.size());
  if (m < 2 * g) {
    throw Error(ErrorCode::CountInconsistency,
                "need at least 2g point counts, got " + std::to_string(m));
  }
  for (long n : counts.counts) {
    if (n < 0) {
      throw Error(ErrorCode::CountInconsistency, "negative point count");
    }
  }
  // P(T) = exp(sum N_i T^i / i) * (1 - T)(1 - qT), truncated at degree m.
  TruncatedSeries log_z(m);
  {
    std::vector<Rational> c(static_cast<size_t>(m) + 1, Rational(0));
    for (int j = 1; j <= m; ++j) {
      c[static_cast<size_t>(j)] =
          make_rational(Integer(counts.counts[static_cast<size_t>(j - 1)]), Integer(j));
    }
    log_z = TruncatedSeries(std::move(c));
  }
  TruncatedSeries z = series_exp(log_z);
  std::vector<Rational> pole = {Rational(1), Rational(-1 - counts.q), Rational(counts.q)};
  pole.resize(static_cast<size_t>(m) + 1, Rational(0));
  TruncatedSeries p_series = z * TruncatedSeries(std::move(pole));

  std::vector<Integer> coeffs;
  coeffs.reserve(static_cast<size_t>(2 * g) + 1);
  for (int j = 0; j <= 2 * g; ++j) {
    const Rational& c = p_series.coeff(j);
    if (c.get_den() != 1) {
      throw Error(ErrorCode::CountInconsistency,
                  "zeta numerator coefficient of T^" + std::to_string(j) +
                      " is not integral: " + to_string(c));
    }
    coeffs.push_back(c.get_num());
  }
  // Surplus counts beyond degree 2g must match the recovered numerator.
  for (int j = 2 * g + 1; j <= m; ++j) {
    if (p_series.coeff(j) != 0) {
      throw Error(ErrorCode::CountInconsistency,
                  "surplus count at i=" + std::to_string(j) +
                      " is inconsistent with genus " + std::to_string(g));
    }
  }
  ZetaData zeta{counts.q, g, IntPolynomial(std::move(coeffs))};
  if (!check_zeta_functional_equation(zeta.q, zeta.g, zeta.numerator)) {
    throw Error(ErrorCode::ZetaFEViolation,
                "recovered numerator violates the zeta functional equation");
  }
  return zeta;
}

std::vector<long> counts_from_zeta(const ZetaData& zeta, int m) {
  // N_i = q^i + 1 - (power sums of inverse roots); extracted from log P.
  std::vector<Rational> pc;
  pc.reserve(zeta.numerator.coeffs().size());
  for (const auto& c : zeta.numerator.coeffs()) pc.emplace_back(c);
  pc.resize(static_cast<size_t>(m) + 1, Rational(0));
  TruncatedSeries log_p = series_log(TruncatedSeries(std::move(pc)));
  std::vector<long> out;
  out.reserve(static_cast<size_t>(m));
  Integer q_pow(1);
  for (int i = 1; i <= m; ++i) {
    q_pow *= zeta.q;
    Rational n = Rational(q_pow) + 1 + Rational(i) * log_p.coeff(i);
    if (n.get_den() != 1 || n < 0 || !n.get_num().fits_slong_p()) {
      throw Error(ErrorCode::CountInconsistency,
                  "zeta numerator does not define point counts");
    }
    out.push_back(n.get_num().get_si());
  }
  return out;
}

IntPolynomial l_eta_from_pair(const ZetaData& base, const ZetaData& cover) {
  if (base.q != cover.q) {
    throw Error(ErrorCode::NotADoubleCoverPair,
                "base and cover zeta data live over different fields");
  }
  auto quotient = cover.numerator.divide_exact(base.numerator);
  if (!quotient) {
    throw Error(ErrorCode::NotADoubleCoverPair,
                "cover numerator is not divisible by the base numerator");
  }
  const int expected = 2 * base.g - 2;
  if (quotient->degree() != std::optional<int>(expected)) {
    throw Error(ErrorCode::DegreeMismatch,
                "L-polynomial degree is not 2g-2 = " + std::to_string(expected));
  }
  return *quotient;
}

}  // namespace ffeis
