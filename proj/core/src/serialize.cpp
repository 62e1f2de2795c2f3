#include "graphmag/serialize.hpp"

#include <string>
#include <vector>

#include "graphmag/errors.hpp"

namespace graphmag {

namespace {

nlohmann::json integers_to_json(std::span<const Integer> coeffs) {
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

std::vector<Integer> integers_from_json(const nlohmann::json& arr, const char* field) {
  if (!arr.is_array()) throw InputError(std::string("field '") + field + "' must be an array");
  std::vector<Integer> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string())
      throw InputError(std::string("field '") + field + "' must hold decimal strings");
    const auto& text = item.get_ref<const std::string&>();
    Integer value;
    if (text.empty() || value.set_str(text, 10) != 0)
      throw InputError("not a decimal integer: '" + text + "'");
    out.push_back(std::move(value));
  }
  return out;
}

const nlohmann::json& require(const nlohmann::json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    throw InputError(std::string("missing field '") + field + "'");
  return j.at(field);
}

}  // namespace

nlohmann::json to_json(const RationalFunction& f) {
  return {{"num", integers_to_json(f.numerator().coefficients())},
          {"den", integers_to_json(f.denominator().coefficients())}};
}

nlohmann::json to_json(const TruncatedSeries& s) {
  return {{"order", s.order()}, {"coeffs", integers_to_json(s.coefficients())}};
}

RationalFunction rational_function_from_json(const nlohmann::json& j) {
  Polynomial num(integers_from_json(require(j, "num"), "num"));
  Polynomial den(integers_from_json(require(j, "den"), "den"));
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  return {std::move(num), std::move(den)};
}

TruncatedSeries truncated_series_from_json(const nlohmann::json& j) {
  const auto& order = require(j, "order");
  if (!order.is_number_unsigned()) throw InputError("field 'order' must be a non-negative integer");
  auto coeffs = integers_from_json(require(j, "coeffs"), "coeffs");
  const auto n = order.get<std::size_t>();
  if (coeffs.size() != n + 1) throw InputError("series must carry exactly order+1 coefficients");
  return {n, std::move(coeffs)};
}

}  // namespace graphmag
