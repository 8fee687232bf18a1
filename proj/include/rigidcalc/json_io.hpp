#pragma once

#include "rigidcalc/convolution.hpp"
#include "rigidcalc/hypergeometric.hpp"
#include "rigidcalc/monodromy.hpp"
#include "rigidcalc/purity.hpp"

#include <json.hpp>

namespace rigidcalc::io {

using Json = nlohmann::json;

// Serialization is canonical: object keys sorted, rationals in lowest terms,
// integers as decimal strings. Parsers throw Error(ParseError) on schema
// violations and let library errors (SingularMatrix, ...) propagate.

Json to_json(const CycNumber& x);
CycNumber cyc_from_json(const Json& j);

Json to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json to_json(const MonodromyTuple& t);
MonodromyTuple tuple_from_json(const Json& j);

Json to_json(const JordanType& jt);

Json to_json(const ReductionTrace& trace);

/// {"N": int, "coeffs": [CycNumber, ...]} from the constant term up.
std::vector<CycNumber> polynomial_from_json(const Json& j);
Json polynomial_to_json(const std::vector<CycNumber>& coeffs);

/// {"N": int, "m": [{"zeta": "zeta3", "mult": 2}, ...]}.
MultiplicityFunction multiplicity_from_json(const Json& j, long& order);

/// Parses text as JSON, mapping syntax errors to ParseError.
Json parse(const std::string& text);

/// Compact canonical dump.
std::string dump(const Json& j);

} // namespace rigidcalc::io
