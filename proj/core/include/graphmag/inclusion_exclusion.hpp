#pragma once

#include <string>

#include "graphmag/rational_function.hpp"
#include "graphmag/selection.hpp"

namespace graphmag {

enum class InclusionExclusionVerdict {
  TheoremApplies,  ///< union, convex intersection and a projection all hold
  HoldsAnyway,     ///< hypotheses fail but |X| = |G| + |H| - |G n H| anyway
  Fails,           ///< hypotheses fail and the identity fails
};

struct InclusionExclusionReport {
  bool covers = false;               ///< G u H = X on vertices and edges
  bool intersection_convex = false;  ///< G n H convex in X
  bool h_projects = false;           ///< H projects to G n H
  bool g_projects = false;           ///< G projects to G n H
  RationalFunction mag_x, mag_g, mag_h, mag_intersection;
  bool identity_holds = false;

  bool theorem_applies() const { return covers && intersection_convex && (h_projects || g_projects); }
  InclusionExclusionVerdict verdict() const;
};

std::string to_string(InclusionExclusionVerdict v);

/// Checks the hypotheses of the union theorem for X = G u H and whether
/// |X| = |G| + |H| - |G n H| holds exactly. Projections are tested inside
/// each part's own metric. Throws InputError if g or h is not a selection of x.
InclusionExclusionReport check_inclusion_exclusion(const Graph& x, const SubgraphSelection& g,
                                                   const SubgraphSelection& h);

}  // namespace graphmag
