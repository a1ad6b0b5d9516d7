#include "ffeis/io.hpp"

#include "ffeis/errors.hpp"

namespace ffeis::io {

const Json& require_field(const Json& value, const char* name) {
  if (!value.is_object() || !value.contains(name)) {
    throw Error(ErrorCode::InputError,
                std::string("missing required field \"") + name + "\"");
  }
  return value.at(name);
}

Rational parse_rational(const Json& value) {
  if (value.is_number_integer()) {
    return Rational(static_cast<long>(value.get<long long>()));
  }
  if (value.is_string()) {
    return rational_from_string(value.get<std::string>());
  }
  throw Error(ErrorCode::InputError,
              "rational values must be integers or \"p/q\" strings");
}

Json rational_to_json(const Rational& value) {
  return to_fraction_string(value);
}

Json qsqrt_to_json(const QSqrtScalar& value) {
  Json out;
  out["a"] = rational_to_json(value.a());
  out["b"] = rational_to_json(value.b());
  return out;
}

IntPolynomial parse_int_polynomial(const Json& value) {
  if (!value.is_array()) {
    throw Error(ErrorCode::InputError, "polynomial must be a coefficient array");
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(value.size());
  for (const auto& item : value) {
    if (item.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(item.get<long long>()));
    } else if (item.is_string()) {
      coeffs.emplace_back(item.get<std::string>());
    } else {
      throw Error(ErrorCode::InputError, "polynomial coefficients must be integers");
    }
  }
  return IntPolynomial(std::move(coeffs));
}

Json int_polynomial_to_json(const IntPolynomial& value) {
  Json out = Json::array();
  for (const auto& c : value.coeffs()) {
    out.push_back(c.get_str());
  }
  return out;
}

namespace {

std::vector<long> parse_long_list(const Json& value, const char* what) {
  if (!value.is_array()) {
    throw Error(ErrorCode::InputError, std::string(what) + " must be an array");
  }
  std::vector<long> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_number_integer()) {
      throw Error(ErrorCode::InputError, std::string(what) + " entries must be integers");
    }
    out.push_back(static_cast<long>(item.get<long long>()));
  }
  return out;
}

}  // namespace

SplitCoverModel parse_curve(const Json& value) {
  const long q = require_field(value, "q").get<long>();
  return SplitCoverModel(q, parse_long_list(require_field(value, "f1"), "f1"),
                         parse_long_list(require_field(value, "f2"), "f2"));
}

PointCounts parse_counts(const Json& value) {
  PointCounts counts;
  counts.q = require_field(value, "q").get<long>();
  counts.counts = parse_long_list(require_field(value, "counts"), "counts");
  return counts;
}

int parse_genus(const Json& value) {
  return require_field(value, "genus").get<int>();
}

LEtaFunction parse_l_function(const Json& value) {
  const long q = require_field(value, "q").get<long>();
  return LEtaFunction(q, parse_int_polynomial(require_field(value, "L")));
}

ZetaData parse_zeta(const Json& value) {
  ZetaData zeta{require_field(value, "q").get<long>(), parse_genus(value),
                parse_int_polynomial(require_field(value, "P"))};
  if (!check_zeta_functional_equation(zeta.q, zeta.g, zeta.numerator)) {
    throw Error(ErrorCode::ZetaFEViolation,
                "zeta numerator violates the functional equation");
  }
  return zeta;
}

FourierContext parse_context(const Json& value) {
  return FourierContext(require_field(value, "n").get<int>(),
                        require_field(value, "q").get<long>(),
                        require_field(value, "w").get<int>(),
                        require_field(value, "degLfrak").get<long>(),
                        require_field(value, "degE").get<long>(),
                        require_field(value, "etaL").get<int>());
}

DensityPolynomial parse_density(const Json& value) {
  const Json& m = require_field(value, "m");
  if (!m.is_array()) {
    throw Error(ErrorCode::InputError, "density \"m\" must be an array");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(m.size());
  for (const auto& item : m) {
    coeffs.push_back(parse_rational(item));
  }
  std::optional<int> epsilon;
  if (value.contains("epsilon") && !value.at("epsilon").is_null()) {
    epsilon = value.at("epsilon").get<int>();
  }
  return DensityPolynomial(std::move(coeffs), epsilon);
}

Json laurent_to_json(const LaurentProfile& value) {
  Json terms = Json::object();
  for (const auto& [k, c] : value.terms()) {
    terms[std::to_string(k)] = qsqrt_to_json(c);
  }
  Json out;
  out["q"] = value.q();
  out["terms"] = terms;
  return out;
}

Json series_to_json(const TruncatedSeries& value) {
  Json coeffs = Json::array();
  for (const auto& c : value.coeffs()) {
    coeffs.push_back(rational_to_json(c));
  }
  Json out;
  out["order"] = value.order();
  out["coefficients"] = coeffs;
  return out;
}

Json rational_function_to_json(const RationalFunction& value) {
  Json out;
  out["num"] = int_polynomial_to_json(value.num());
  out["den"] = int_polynomial_to_json(value.den());
  return out;
}

Json degree_report_to_json(const DegreeReport& value) {
  Json out;
  out["r"] = value.r;
  out["parity_ok"] = value.parity_ok;
  out["analytic"] = rational_to_json(value.analytic);
  out["combinatorial"] = rational_to_json(value.combinatorial);
  out["agree"] = value.agree;
  return out;
}

Json termwise_report_to_json(const TermwiseReport& value) {
  Json entries = Json::array();
  for (const auto& entry : value.entries) {
    Json e;
    e["label"] = entry.label;
    e["derivative"] = qsqrt_to_json(entry.derivative);
    e["expected"] = qsqrt_to_json(entry.expected);
    e["equal"] = entry.equal;
    entries.push_back(e);
  }
  Json out;
  out["entries"] = entries;
  out["all_equal"] = value.all_equal;
  return out;
}

}  // namespace ffeis::io
