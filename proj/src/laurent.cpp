#include "ffeis/laurent.hpp"

#include "ffeis/errors.hpp"

namespace ffeis {

namespace {

void require_same_q(const LaurentProfile& x, const LaurentProfile& y) {
  if (x.q() != y.q()) {
    throw Error(ErrorCode::FamilyInconsistency,
                "mixing Laurent profiles with q=" + std::to_string(x.q()) +
                    " and q=" + std::to_string(y.q()));
  }
}

}  // namespace

QSqrtScalar LaurentProfile::term(int k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? QSqrtScalar::zero(q_) : it->second;
}

void LaurentProfile::add_term(int k, const QSqrtScalar& c) {
  set_term(k, term(k) + c);
}

void LaurentProfile::set_term(int k, const QSqrtScalar& c) {
  if (c.q() != q_) {
    throw Error(ErrorCode::FamilyInconsistency,
                "coefficient field mismatch in Laurent profile");
  }
  if (c.is_zero()) {
    terms_.erase(k);
  } else {
    terms_.insert_or_assign(k, c);
  }
}

LaurentProfile LaurentProfile::operator+(const LaurentProfile& rhs) const {
  require_same_q(*this, rhs);
  LaurentProfile out(*this);
  for (const auto& [k, c] : rhs.terms_) {
    out.add_term(k, c);
  }
  return out;
}

LaurentProfile LaurentProfile::operator-(const LaurentProfile& rhs) const {
  return *this + (-rhs);
}

LaurentProfile LaurentProfile::operator*(const LaurentProfile& rhs) const {
  require_same_q(*this, rhs);
  LaurentProfile out(q_);
  for (const auto& [i, a] : terms_) {
    for (const auto& [j, b] : rhs.terms_) {
      out.add_term(i + j, a * b);
    }
  }
  return out;
}

LaurentProfile LaurentProfile::operator*(const QSqrtScalar& rhs) const {
  LaurentProfile out(q_);
  for (const auto& [k, c] : terms_) {
    out.set_term(k, c * rhs);
  }
  return out;
}

LaurentProfile LaurentProfile::operator-() const {
  LaurentProfile out(q_);
  for (const auto& [k, c] : terms_) {
    out.set_term(k, -c);
  }
  return out;
}

bool LaurentProfile::operator==(const LaurentProfile& rhs) const {
  require_same_q(*this, rhs);
  return terms_ == rhs.terms_;
}

LaurentProfile LaurentProfile::shifted(int delta) const {
  LaurentProfile out(q_);
  for (const auto& [k, c] : terms_) {
    out.set_term(k + delta, c);
  }
  return out;
}

QSqrtScalar LaurentProfile::eval(const Rational& t) const {
  if (t == 0) {
    throw Error(ErrorCode::InputError, "Laurent profile evaluated at Z=0");
  }
  QSqrtScalar acc = QSqrtScalar::zero(q_);
  for (const auto& [k, c] : terms_) {
    acc = acc + c * pow_rational(t, k);
  }
  return acc;
}

std::string LaurentProfile::to_text() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_text() + ")";
    if (k != 0) out += "*Z^" + std::to_string(k);
  }
  return out;
}

LaurentProfile laurent_involute(const LaurentProfile& p) {
  LaurentProfile out(p.q());
  for (const auto& [k, c] : p.terms()) {
    out.set_term(-k, c);
  }
  return out;
}

QSqrtScalar laurent_s_derivative_at_zero(const LaurentProfile& p, int r) {
  if (r < 0) {
    throw Error(ErrorCode::InputError, "derivative order must be >= 0");
  }
  QSqrtScalar acc = QSqrtScalar::zero(p.q());
  for (const auto& [k, c] : p.terms()) {
    acc = acc + c * pow_rational(Rational(-k), r);
  }
  return acc;
}

}  // namespace ffeis
