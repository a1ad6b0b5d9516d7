#include "ffeis/rational.hpp"

#include "ffeis/errors.hpp"

namespace ffeis {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::NonZeroConstantTerm: return "NonZeroConstantTerm";
    case ErrorCode::EnumerationBudget: return "EnumerationBudget";
    case ErrorCode::ModelInvariantViolation: return "ModelInvariantViolation";
    case ErrorCode::CountInconsistency: return "CountInconsistency";
    case ErrorCode::ZetaFEViolation: return "ZetaFEViolation";
    case ErrorCode::NotADoubleCoverPair: return "NotADoubleCoverPair";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FEViolation: return "FEViolation";
    case ErrorCode::DensityDegreeMismatch: return "DensityDegreeMismatch";
    case ErrorCode::HalvingHypothesisViolation:
      return "HalvingHypothesisViolation";
    case ErrorCode::FamilyInconsistency: return "FamilyInconsistency";
    case ErrorCode::InputError: return "InputError";
  }
  return "UnknownError";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::InputError, "zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) {
    throw Error(ErrorCode::InputError, "empty rational literal");
  }
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InputError, "malformed rational literal: " + text);
  }
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer pow_integer(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) {
    return Rational(1);
  }
  if (base == 0 && exp < 0) {
    throw Error(ErrorCode::InputError, "negative power of zero");
  }
  const unsigned long e =
      exp > 0 ? static_cast<unsigned long>(exp) : static_cast<unsigned long>(-exp);
  Integer num = pow_integer(base.get_num(), e);
  Integer den = pow_integer(base.get_den(), e);
  return exp > 0 ? make_rational(num, den) : make_rational(den, num);
}

}  // namespace ffeis
