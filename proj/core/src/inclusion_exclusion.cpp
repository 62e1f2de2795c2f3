#include "graphmag/inclusion_exclusion.hpp"

#include "graphmag/errors.hpp"
#include "graphmag/magnitude.hpp"
#include "graphmag/metric.hpp"

namespace graphmag {

namespace {

// Does `part` (as a graph in its own right) project onto `inner`, a subset of it?
bool part_projects(const SubgraphSelection& part, const SubgraphSelection& inner) {
  const Graph local = part.as_graph();
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (Vertex v : inner.vertices()) vertices.push_back(*part.local_index(v));
  for (const Edge& e : inner.edges()) edges.push_back({*part.local_index(e.u), *part.local_index(e.v)});
  SubgraphSelection target(local, std::move(vertices), std::move(edges));
  if (!is_convex(target)) return false;
  return projection(target).has_value();
}

}  // namespace

InclusionExclusionVerdict InclusionExclusionReport::verdict() const {
  if (theorem_applies()) return InclusionExclusionVerdict::TheoremApplies;
  return identity_holds ? InclusionExclusionVerdict::HoldsAnyway : InclusionExclusionVerdict::Fails;
}

std::string to_string(InclusionExclusionVerdict v) {
  switch (v) {
    case InclusionExclusionVerdict::TheoremApplies:
      return "theorem applies";
    case InclusionExclusionVerdict::HoldsAnyway:
      return "hypotheses fail; identity holds";
    case InclusionExclusionVerdict::Fails:
      return "hypotheses fail; identity fails";
  }
  return "unknown";
}

InclusionExclusionReport check_inclusion_exclusion(const Graph& x, const SubgraphSelection& g,
                                                   const SubgraphSelection& h) {
  if (!(g.host() == x) || !(h.host() == x))
    throw InputError("both selections must be subgraphs of the given graph");
  const SubgraphSelection both = intersect(g, h);

  InclusionExclusionReport r;
  r.covers = covers_host(g, h);
  r.intersection_convex = is_convex(both);
  if (r.intersection_convex) {
    r.h_projects = part_projects(h, both);
    r.g_projects = part_projects(g, both);
  }
  r.mag_x = magnitude_rational(x);
  r.mag_g = magnitude_rational(g.as_graph());
  r.mag_h = magnitude_rational(h.as_graph());
  r.mag_intersection = magnitude_rational(both.as_graph());
  r.identity_holds = r.mag_x == r.mag_g + r.mag_h - r.mag_intersection;
  return r;
}

}  // namespace graphmag
