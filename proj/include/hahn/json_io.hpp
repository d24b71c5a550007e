#pragma once

// JSON forms. A series is
//   {"group":"q","coeff":"q","terms":[["-1","2"],["0","3"],["1/2","5"]]}
// with exponents and coefficients as canonical strings, terms ascending.

#include <json.hpp>

#include "hahn/series.hpp"

namespace hahn {

using Json = nlohmann::ordered_json;

Json to_json(const FiniteSeries& f);
Json to_json(const ExtendedExponent& e);

// Validates selectors and term strings; non-canonical input (unsorted,
// duplicate, zero coefficients) is rejected so round trips are exact.
FiniteSeries series_from_json(const Json& j);

} // namespace hahn
