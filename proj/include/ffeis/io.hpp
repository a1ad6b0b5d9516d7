#pragma once

#include <json.hpp>

#include "ffeis/degrees.hpp"

namespace ffeis::io {

using Json = nlohmann::json;

// Rationals travel as "num/den" strings (plain integers accepted on input)
// so no consumer ever rounds them.
Rational parse_rational(const Json& value);
Json rational_to_json(const Rational& value);

// {"a": "p/q", "b": "p/q"}; b is the sqrt(q) component.
Json qsqrt_to_json(const QSqrtScalar& value);

// Coefficient lists are low-degree-first integers.
IntPolynomial parse_int_polynomial(const Json& value);
Json int_polynomial_to_json(const IntPolynomial& value);

// {"q": 3, "f1": [c0, ...], "f2": [c0, ...]}
SplitCoverModel parse_curve(const Json& value);

// {"q": 3, "genus": 2, "counts": [N1, ...]}
PointCounts parse_counts(const Json& value);
int parse_genus(const Json& value);

// {"q": 2, "L": [1, -2, 2]}
LEtaFunction parse_l_function(const Json& value);

// {"q": 3, "genus": 2, "P": [1, 0, 2, 0, 9]}; validated against the zeta
// functional equation.
ZetaData parse_zeta(const Json& value);

// {"n": 1, "q": 2, "w": 2, "degLfrak": 5, "degE": 1, "etaL": 1}
FourierContext parse_context(const Json& value);

// {"m": [1, -2, 2], "epsilon": 1}
DensityPolynomial parse_density(const Json& value);

Json laurent_to_json(const LaurentProfile& value);
Json series_to_json(const TruncatedSeries& value);
Json rational_function_to_json(const RationalFunction& value);
Json degree_report_to_json(const DegreeReport& value);
Json termwise_report_to_json(const TermwiseReport& value);

// Required-field access with a readable error.
const Json& require_field(const Json& value, const char* name);

}  // namespace ffeis::io
