#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "graphmag/graph.hpp"
#include "graphmag/selection.hpp"

namespace graphmag::random {

using Engine = std::mt19937_64;

/// Erdos-Renyi G(n, p).
Graph gnp(std::size_t n, double p, Engine& rng);
/// Uniform random labelled tree on n >= 1 vertices (random Pruefer sequence).
Graph tree(std::size_t n, Engine& rng);
/// Forest on n vertices: a random tree with each edge kept with probability keep.
Graph forest(std::size_t n, double keep, Engine& rng);
/// Uniform random permutation of 0..n-1.
std::vector<Vertex> permutation(std::size_t n, Engine& rng);

/// Two connected subtrees G, H of a tree X with G u H = X: a random edge set
/// is grown into a subtree for G; H is the closure of the remaining edges
/// together with enough of G to stay connected.
std::pair<SubgraphSelection, SubgraphSelection> subtree_cover(const Graph& tree, Engine& rng);

}  // namespace graphmag::random
