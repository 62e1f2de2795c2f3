#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace graphmag::cli {

/// One checked identity. `criterion` numbers the acceptance criterion it belongs to.
struct GoldenRow {
  int criterion = 0;
  std::string identity;
  std::string expected;
  std::string actual;
  bool pass = false;
};

inline constexpr std::uint64_t kGoldenSeed = 20260601;

/// Runs every golden identity and property sweep, reporting each row as it
/// completes. Returns true when all rows pass.
bool run_golden_suite(const std::function<void(const GoldenRow&)>& sink, std::uint64_t seed = kGoldenSeed);

}  // namespace graphmag::cli
