#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "graphmag/polynomial.hpp"
#include "graphmag/rational_function.hpp"
#include "graphmag/series.hpp"

namespace graphmag::cli {

enum class Format { Plain, Latex, Json };

std::optional<Format> parse_format(std::string_view name);

std::string latex(const Polynomial& p);
/// \frac{num}{den}, or just the numerator when the denominator is 1.
std::string latex(const RationalFunction& f);
/// c_0 + c_1 q + ... + O(q^{N+1}).
std::string latex(const TruncatedSeries& s);

/// Space-separated coefficients c_0 .. c_N.
std::string plain(const TruncatedSeries& s);

/// Plain or LaTeX text; JSON is compact single-line.
std::string render(const RationalFunction& f, Format format);
std::string render(const TruncatedSeries& s, Format format);

}  // namespace graphmag::cli
