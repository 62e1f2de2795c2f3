#pragma once

#include <cstddef>

#include "graphmag/graph.hpp"

namespace graphmag::family {

// Size errors throw InputError.

/// K_n, n >= 1.
Graph complete(std::size_t n);
/// C_n, n >= 1; C_1 is a single vertex and C_2 a single edge.
Graph cycle(std::size_t n);
/// P_n: n vertices in a line, n >= 0.
Graph path(std::size_t n);
/// n isolated vertices, n >= 0.
Graph edgeless(std::size_t n);
/// K_{m,n}, m, n >= 1; part sizes m then n.
Graph complete_bipartite(std::size_t m, std::size_t n);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen();
/// K_6 with the edges of the triangle {0, 1, 2} removed.
Graph w_graph();

}  // namespace graphmag::family
