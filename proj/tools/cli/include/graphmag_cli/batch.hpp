#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "graphmag_cli/commands.hpp"

namespace graphmag::cli {

// One job per input line:
//   {"id": ..., "expr": "K2 * K3", "outputs": ["rational", "series", "weights"],
//    "order": 16, "format": "json"}
// Only "expr" is required. Each output line is either a result
//   {"id": ..., "input": {...}, "outputs": {...}, "elapsed_ms": 1.25}
// or an error record
//   {"id": ... or null, "line": 3, "error": "...", "input": "raw line"}.

struct BatchSummary {
  std::size_t jobs = 0;
  std::size_t ok = 0;
  std::size_t errors = 0;
};

/// Result or error record for one input line (1-based `line_number`).
nlohmann::json run_job(const std::string& line, std::size_t line_number, const Options& opt);

/// Runs every line of `in` on up to opt.parallel threads and writes the
/// records to `out` in input order.
BatchSummary run_batch(std::istream& in, std::ostream& out, const Options& opt);

}  // namespace graphmag::cli
