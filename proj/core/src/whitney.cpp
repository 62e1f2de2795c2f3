#include "graphmag/whitney.hpp"

#include <algorithm>

#include "graphmag/errors.hpp"
#include "graphmag/metric.hpp"

namespace graphmag {

TwistPartition twist_partition(const Graph& x, Vertex plus, Vertex minus, std::span<const Vertex> side,
                               const Weighting& w) {
  if (plus >= x.vertex_count() || minus >= x.vertex_count()) throw InputError("gluing point out of range");
  if (!x.has_edge(plus, minus)) throw HypothesisError("gluing points are not adjacent");
  if (w.weights.size() != x.vertex_count()) throw InputError("weighting size does not match the graph");
  if (std::find(side.begin(), side.end(), plus) == side.end() ||
      std::find(side.begin(), side.end(), minus) == side.end())
    throw InputError("side must contain both gluing points");

  const auto from_plus = distances_from(x, plus);
  const auto from_minus = distances_from(x, minus);
  TwistPartition p;
  p.vertices.assign(side.begin(), side.end());
  for (Vertex v : side) {
    const ExtDistance dp = from_plus.at(v);
    const ExtDistance dm = from_minus.at(v);
    const ExtDistance delta = std::min(dp, dm);
    const TwistClass c = dp < dm ? TwistClass::Plus : (dm < dp ? TwistClass::Minus : TwistClass::Zero);
    p.delta.push_back(delta);
    p.classes.push_back(c);
    if (!delta.is_finite()) continue;
    RationalFunction term = q_power(delta.value()) * w.weights[v];
    switch (c) {
      case TwistClass::Plus:
        p.u_plus += term;
        break;
      case TwistClass::Zero:
        p.u_zero += term;
        break;
      case TwistClass::Minus:
        p.u_minus += term;
        break;
    }
  }
  return p;
}

Weighting whitney_weight_transform(const TwistPair& pair, const TwistPartition& g_side, const Weighting& w_x) {
  if (!pair.gluing_points_adjacent()) throw HypothesisError("gluing points are not adjacent");
  if (w_x.weights.size() != pair.x.vertex_count()) throw InputError("weighting size does not match X");
  Weighting w_y;
  w_y.weights.resize(pair.y.vertex_count());
  for (Vertex v = 0; v < pair.x.vertex_count(); ++v) w_y.weights[pair.x_to_y[v]] = w_x.weights[v];
  w_y.weights[pair.y_plus] = w_x.weights[pair.x_plus] - g_side.u_plus + g_side.u_minus;
  w_y.weights[pair.y_minus] = w_x.weights[pair.x_minus] - g_side.u_minus + g_side.u_plus;
  return w_y;
}

bool twist_sides_agree(const TwistPair& pair, const TwistPartition& g_side, const TwistPartition& h_side,
                       const Weighting& w_x) {
  // In X, h- is the same vertex as g-.
  return w_x.weights[pair.x_plus] - g_side.u_plus + g_side.u_minus ==
         w_x.weights[pair.x_minus] - h_side.u_minus + h_side.u_plus;
}

WhitneyReport check_whitney_twist(const TwistSpec& spec) {
  WhitneyReport r{whitney_twist_pair(spec), {}, {}, false, false, {}, {}, {}};
  r.mag_x = magnitude_rational(r.pair.x);
  r.mag_y = magnitude_rational(r.pair.y);
  r.adjacent = r.pair.gluing_points_adjacent();
  r.equal = r.mag_x == r.mag_y;
  r.isomorphic = are_isomorphic(r.pair.x, r.pair.y);
  if (r.adjacent) {
    const Weighting w_x = weighting(r.pair.x);
    // H's side is oriented by h+ and h-, which are X's plus and minus too.
    const auto g_side = twist_partition(r.pair.x, r.pair.x_plus, r.pair.x_minus, r.pair.x_side_g, w_x);
    const auto h_side = twist_partition(r.pair.x, r.pair.x_plus, r.pair.x_minus, r.pair.x_side_h, w_x);
    const Weighting w_y = whitney_weight_transform(r.pair, g_side, w_x);
    r.sides_agree = twist_sides_agree(r.pair, g_side, h_side, w_x);
    r.transform_is_weighting = verify_weighting(r.pair.y, w_y.weights);
    r.transform_total_matches = w_y.total() == r.mag_x;
  }
  return r;
}

}  // namespace graphmag
