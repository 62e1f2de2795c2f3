#pragma once

#include <nlohmann/json.hpp>

#include "graphmag/rational_function.hpp"
#include "graphmag/series.hpp"

namespace graphmag {

// Wire formats (integers are decimal strings so arbitrary precision survives):
//   RationalFunction  {"num": ["6"], "den": ["1", "4"]}
//   TruncatedSeries   {"order": 3, "coeffs": ["6", "-24", "96", "-384"]}
// Coefficient arrays are in ascending powers of q.

nlohmann::json to_json(const RationalFunction& f);
nlohmann::json to_json(const TruncatedSeries& s);

/// Throws InputError on a malformed document. The result is re-canonicalized,
/// so a non-canonical but valid num/den pair is accepted.
RationalFunction rational_function_from_json(const nlohmann::json& j);
TruncatedSeries truncated_series_from_json(const nlohmann::json& j);

}  // namespace graphmag
