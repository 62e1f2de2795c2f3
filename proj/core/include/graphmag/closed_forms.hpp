#pragma once

#include <cstddef>

#include "graphmag/rational_function.hpp"

namespace graphmag::closed_form {

// Known magnitudes of graph families. Invalid parameters throw InputError.

/// n / (1 + (n-1)q), n >= 1.
RationalFunction complete(std::size_t n);
/// n(q-1) / (q^floor((n+1)/2) + q^ceil((n+1)/2) - q - 1), n >= 1.
RationalFunction cycle(std::size_t n);
/// ((m+n) - (2mn-m-n)q) / ((1+q)(1 - (m-1)(n-1)q^2)), m, n >= 1.
RationalFunction complete_bipartite(std::size_t m, std::size_t n);
/// k + e(1-q)/(1+q) for a forest with v = k + e vertices.
RationalFunction forest(std::size_t vertices, std::size_t edges, std::size_t components);

}  // namespace graphmag::closed_form
