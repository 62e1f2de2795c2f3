#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "graphmag_cli/commands.hpp"

namespace graphmag::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact magnitude of finite graphs."};
  app.name("graphmag");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string format = "plain";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "json"}))
      ->capture_default_str();
  app.add_option("--order", opt.order, "Highest power of q in series output")->capture_default_str();
  app.add_flag("--fast", opt.fast, "Skip the walk-expansion cross-check of series");
  app.add_option("--parallel", opt.parallel, "Worker threads for batch")->check(CLI::PositiveNumber);

  std::string expr;
  std::string g_spec;
  std::string h_spec;
  std::string path;
  std::string output;

  auto* mag = app.add_subcommand("mag", "Magnitude as a rational function");
  mag->add_option("expr", expr, "Graph expression or edge-list file")->required();

  auto* series = app.add_subcommand("series", "Power series coefficients c_0 .. c_N");
  series->add_option("expr", expr, "Graph expression or edge-list file")->required();

  auto* weights = app.add_subcommand("weights", "Per-vertex weighting and its total");
  weights->add_option("expr", expr, "Graph expression or edge-list file")->required();

  auto* check_ie = app.add_subcommand("check-ie", "Inclusion-exclusion for X = G u H");
  check_ie->set_help_flag("--help", "Print this help message and exit");
  check_ie->add_option("expr", expr, "Graph expression or edge-list file for X")->required();
  check_ie->add_option("--g", g_spec, "G as 'vertices;edges', e.g. '0,1,2;0-1,1-2' (induced if no ';')")->required();
  check_ie->add_option("--h", h_spec, "H, same form as --g")->required();

  auto* whitney = app.add_subcommand("whitney", "Whitney twist report from a JSON spec");
  whitney->add_option("specfile", path, "JSON with g, g_plus, g_minus, h, h_plus, h_minus")->required();

  auto* verify = app.add_subcommand("verify", "Run the built-in golden identities");

  auto* batch = app.add_subcommand("batch", "Process a JSONL file of jobs");
  batch->add_option("input", path, "Input JSONL")->required();
  batch->add_option("output", output, "Output JSONL")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  opt.format = *parse_format(format);

  if (mag->parsed()) return cmd_mag(expr, opt, out, err);
  if (series->parsed()) return cmd_series(expr, opt, out, err);
  if (weights->parsed()) return cmd_weights(expr, opt, out, err);
  if (check_ie->parsed()) return cmd_check_ie(expr, g_spec, h_spec, opt, out, err);
  if (whitney->parsed()) return cmd_whitney(path, opt, out, err);
  if (verify->parsed()) return cmd_verify(opt, out, err);
  if (batch->parsed()) return cmd_batch(path, output, opt, out, err);
  return kExitUsage;
}

}  // namespace graphmag::cli
