#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "graphmag/graph.hpp"

namespace graphmag {

/// Path length in edges, or Unreachable. Unreachable absorbs addition and
/// compares greater than every finite value.
class ExtDistance {
 public:
  constexpr ExtDistance() = default;
  constexpr explicit ExtDistance(std::uint32_t hops) : value_(hops) {}
  static constexpr ExtDistance unreachable() { return ExtDistance(kUnreachable, 0); }

  constexpr bool is_finite() const noexcept { return value_ != kUnreachable; }
  /// Precondition: is_finite().
  constexpr std::uint32_t value() const noexcept { return value_; }

  friend constexpr ExtDistance operator+(ExtDistance a, ExtDistance b) {
    if (!a.is_finite() || !b.is_finite()) return unreachable();
    return ExtDistance(a.value_ + b.value_);
  }
  friend constexpr auto operator<=>(ExtDistance, ExtDistance) = default;
  friend constexpr bool operator==(ExtDistance, ExtDistance) = default;

 private:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();
  constexpr ExtDistance(std::uint32_t raw, int) : value_(raw) {}

  std::uint32_t value_ = 0;
};

/// All-pairs shortest-path lengths of a graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, ExtDistance::unreachable()) {}

  std::size_t size() const noexcept { return n_; }
  ExtDistance operator()(Vertex x, Vertex y) const { return d_[x * n_ + y]; }
  ExtDistance& operator()(Vertex x, Vertex y) { return d_[x * n_ + y]; }

  /// Largest finite off-diagonal distance; 0 when there is none.
  std::uint32_t max_finite() const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExtDistance> d_;
};

/// Breadth-first search from one vertex.
std::vector<ExtDistance> distances_from(const Graph& g, Vertex source);
DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace graphmag
