#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "graphmag/graph.hpp"
#include "graphmag/magnitude.hpp"
#include "graphmag/selection.hpp"
#include "graphmag/series.hpp"
#include "graphmag_cli/render.hpp"

namespace graphmag::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct Options {
  Format format = Format::Plain;
  std::size_t order = kDefaultSeriesOrder;
  bool fast = false;  ///< skip the walk-oracle cross-check of series
  std::size_t parallel = 1;
};

/// A DSL expression, or failing that the path of an edge-list file.
Graph load_graph(const std::string& text);

/// "0,1,2;0-1,1-2" selects vertices and edges explicitly; "0,1,2" alone
/// selects the induced subgraph.
SubgraphSelection parse_selection(const Graph& host, const std::string& spec);

/// Graph from a JSON value: an expression string or {"n": 4, "edges": [[0, 1], ...]}.
Graph graph_from_json(const nlohmann::json& j);

/// Series from the rational magnitude, cross-checked against the walk
/// expansion unless `fast`. A mismatch throws InternalError.
TruncatedSeries checked_series(const Graph& g, std::size_t order, bool fast);

nlohmann::json weights_json(const Graph& g, const Weighting& w);

int cmd_mag(const std::string& expr, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_series(const std::string& expr, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_weights(const std::string& expr, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_check_ie(const std::string& expr, const std::string& g_spec, const std::string& h_spec, const Options& opt,
                 std::ostream& out, std::ostream& err);
int cmd_whitney(const std::string& specfile, const Options& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_batch(const std::string& input, const std::string& output, const Options& opt, std::ostream& out,
              std::ostream& err);

/// Full command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphmag::cli
