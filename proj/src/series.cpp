#include "ffeis/series.hpp"

#include <algorithm>

#include "ffeis/errors.hpp"

namespace ffeis {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) {
    throw Error(ErrorCode::InputError, "series order must be >= 0");
  }
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : c_(std::move(coeffs)) {
  if (c_.empty()) {
    throw Error(ErrorCode::InputError, "series needs at least one coefficient");
  }
}

TruncatedSeries TruncatedSeries::constant(const Rational& value, int order) {
  TruncatedSeries s(order);
  s.c_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  const int n = std::min(order(), rhs.order());
  TruncatedSeries out(n);
  for (int j = 0; j <= n; ++j) {
    out.c_[static_cast<size_t>(j)] = coeff(j) + rhs.coeff(j);
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  const int n = std::min(order(), rhs.order());
  TruncatedSeries out(n);
  for (int j = 0; j <= n; ++j) {
    out.c_[static_cast<size_t>(j)] = coeff(j) - rhs.coeff(j);
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  const int n = std::min(order(), rhs.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (coeff(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      out.c_[static_cast<size_t>(i + j)] += coeff(i) * rhs.coeff(j);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& rhs) const {
  TruncatedSeries out(order());
  for (int j = 0; j <= order(); ++j) {
    out.c_[static_cast<size_t>(j)] = coeff(j) * rhs;
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator/(const Rational& rhs) const {
  if (rhs == 0) {
    throw Error(ErrorCode::InputError, "series division by zero scalar");
  }
  TruncatedSeries out(order());
  for (int j = 0; j <= order(); ++j) {
    out.c_[static_cast<size_t>(j)] = coeff(j) / rhs;
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int order_out) const {
  if (order_out > order()) {
    throw Error(ErrorCode::InputError, "truncation cannot extend the order");
  }
  TruncatedSeries out(order_out);
  for (int j = 0; j <= order_out; ++j) {
    out.c_[static_cast<size_t>(j)] = coeff(j);
  }
  return out;
}

std::string TruncatedSeries::to_text(const std::string& var) const {
  std::string out;
  for (int j = 0; j <= order(); ++j) {
    if (coeff(j) == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(coeff(j)) + ")";
    if (j >= 1) {
      out += "*" + var;
      if (j >= 2) out += "^" + std::to_string(j);
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(" + var + "^" + std::to_string(order() + 1) + ")";
}

TruncatedSeries series_log(const TruncatedSeries& f) {
  if (f.coeff(0) != 1) {
    throw Error(ErrorCode::NonUnitConstantTerm,
                "series_log needs constant term 1, got " + to_string(f.coeff(0)));
  }
  const int n = f.order();
  std::vector<Rational> g(static_cast<size_t>(n) + 1, Rational(0));
  // From g' * f = f':  k*g_k = k*f_k - sum_{j=1}^{k-1} j*g_j*f_{k-j}.
  for (int k = 1; k <= n; ++k) {
    Rational acc = Rational(k) * f.coeff(k);
    for (int j = 1; j < k; ++j) {
      acc -= Rational(j) * g[static_cast<size_t>(j)] * f.coeff(k - j);
    }
    g[static_cast<size_t>(k)] = acc / Rational(k);
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
  if (f.coeff(0) != 0) {
    throw Error(ErrorCode::NonZeroConstantTerm,
                "series_exp needs constant term 0, got " + to_string(f.coeff(0)));
  }
  const int n = f.order();
  std::vector<Rational> h(static_cast<size_t>(n) + 1, Rational(0));
  h[0] = 1;
  // From h' = f' * h:  k*h_k = sum_{j=1}^{k} j*f_j*h_{k-j}.
  for (int k = 1; k <= n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) {
      acc += Rational(j) * f.coeff(j) * h[static_cast<size_t>(k - j)];
    }
    h[static_cast<size_t>(k)] = acc / Rational(k);
  }
  return TruncatedSeries(std::move(h));
}

TruncatedSeries poly_eval_exponential(const IntPolynomial& p, long k,
                                      const Rational& scale, int order) {
  TruncatedSeries out(order);
  if (p.is_zero()) {
    return out;
  }
  std::vector<Rational> acc(static_cast<size_t>(order) + 1, Rational(0));
  const int deg = *p.degree();
  Rational scale_pow(1);
  for (int j = 0; j <= deg; ++j) {
    const Rational cj = Rational(p.coeff(j)) * scale_pow;
    if (cj != 0) {
      // c_j * scale^j * e^{j k u}: term m is (jk)^m / m!.
      const Rational rate(j * k);
      Rational term(1);
      for (int m = 0; m <= order; ++m) {
        acc[static_cast<size_t>(m)] += cj * term;
        term = term * rate / Rational(m + 1);
      }
    }
    scale_pow *= scale;
  }
  return TruncatedSeries(std::move(acc));
}

}  // namespace ffeis
