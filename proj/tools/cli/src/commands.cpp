#include "graphmag_cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "graphmag/errors.hpp"
#include "graphmag/inclusion_exclusion.hpp"
#include "graphmag/serialize.hpp"
#include "graphmag/whitney.hpp"
#include "graphmag_cli/batch.hpp"
#include "graphmag_cli/dsl.hpp"
#include "graphmag_cli/golden.hpp"

namespace graphmag::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::size_t parse_index(const std::string& token, const std::string& spec) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size() || token.front() == '-')
    throw InputError("selection '" + spec + "': '" + token + "' is not a vertex index");
  return static_cast<std::size_t>(value);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::size_t json_index(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw InputError(std::string("whitney spec: '") + key + "' must be a non-negative integer");
  return j[key].get<std::size_t>();
}

// Runs a command body, mapping exceptions to diagnostics and exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

Graph load_graph(const std::string& text) {
  try {
    return evaluate(*parse_expr(text));
  } catch (const ParseError&) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) return read_edge_list_file(text);
    throw;
  }
}

SubgraphSelection parse_selection(const Graph& host, const std::string& spec) {
  const auto semi = spec.find(';');
  std::vector<Vertex> vertices;
  for (const std::string& t : split(spec.substr(0, semi), ','))
    if (!t.empty()) vertices.push_back(parse_index(t, spec));
  if (semi == std::string::npos) return SubgraphSelection::induced(host, std::move(vertices));

  std::vector<Edge> edges;
  for (const std::string& t : split(spec.substr(semi + 1), ',')) {
    if (t.empty()) continue;
    const auto dash = t.find('-');
    if (dash == std::string::npos) throw InputError("selection '" + spec + "': edge '" + t + "' is not of the form u-v");
    const Vertex u = parse_index(t.substr(0, dash), spec);
    const Vertex v = parse_index(t.substr(dash + 1), spec);
    if (u == v) throw InputError("selection '" + spec + "': edge '" + t + "' is a loop");
    edges.push_back(Edge::of(u, v));
  }
  return SubgraphSelection(host, std::move(vertices), std::move(edges));
}

Graph graph_from_json(const nlohmann::json& j) {
  if (j.is_string()) return evaluate(*parse_expr(j.get<std::string>()));
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned() || !j.contains("edges") ||
      !j["edges"].is_array())
    throw InputError("graph must be an expression string or {\"n\": ..., \"edges\": [[u, v], ...]}");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw InputError("edge must be a pair of vertex indices: " + e.dump());
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph::from_edge_list(j["n"].get<std::size_t>(), edges);
}

TruncatedSeries checked_series(const Graph& g, std::size_t order, bool fast) {
  TruncatedSeries s = magnitude_series(g, order);
  if (!fast) {
    const TruncatedSeries oracle = magnitude_series_oracle(g, order);
    if (!(s == oracle)) {
      std::ostringstream os;
      os << "series self-check failed: determinant path " << s << " vs walk expansion " << oracle;
      throw InternalError(os.str());
    }
  }
  return s;
}

nlohmann::json weights_json(const Graph& g, const Weighting& w) {
  nlohmann::json rows = nlohmann::json::array();
  for (Vertex v = 0; v < w.weights.size(); ++v)
    rows.push_back({{"vertex", v}, {"label", g.label(v)}, {"weight", to_json(w.weights[v])}});
  return {{"weights", rows}, {"total", to_json(w.total())}};
}

int cmd_mag(const std::string& expr, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << render(magnitude_rational(load_graph(expr)), opt.format) << '\n';
    return kExitOk;
  });
}

int cmd_series(const std::string& expr, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << render(checked_series(load_graph(expr), opt.order, opt.fast), opt.format) << '\n';
    return kExitOk;
  });
}

int cmd_weights(const std::string& expr, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph(expr);
    const Weighting w = weighting(g);
    if (opt.format == Format::Json) {
      out << weights_json(g, w).dump() << '\n';
      return kExitOk;
    }
    for (Vertex v = 0; v < w.weights.size(); ++v)
      out << v << '\t' << g.label(v) << '\t' << render(w.weights[v], opt.format) << '\n';
    out << "total\t" << render(w.total(), opt.format) << '\n';
    return kExitOk;
  });
}

int cmd_check_ie(const std::string& expr, const std::string& g_spec, const std::string& h_spec, const Options& opt,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph x = load_graph(expr);
    const SubgraphSelection g = parse_selection(x, g_spec);
    const SubgraphSelection h = parse_selection(x, h_spec);
    const InclusionExclusionReport r = check_inclusion_exclusion(x, g, h);
    const std::string summary = r.theorem_applies()
                                    ? std::string("theorem applies; identity ") + (r.identity_holds ? "holds" : "fails")
                                    : to_string(r.verdict());
    if (opt.format == Format::Json) {
      out << nlohmann::json{{"covers", r.covers},
                            {"intersection_convex", r.intersection_convex},
                            {"h_projects", r.h_projects},
                            {"g_projects", r.g_projects},
                            {"theorem_applies", r.theorem_applies()},
                            {"identity_holds", r.identity_holds},
                            {"mag_x", to_json(r.mag_x)},
                            {"mag_g", to_json(r.mag_g)},
                            {"mag_h", to_json(r.mag_h)},
                            {"mag_intersection", to_json(r.mag_intersection)},
                            {"verdict", summary}}
                 .dump()
          << '\n';
    } else {
      out << "G u H = X: " << yes_no(r.covers) << '\n'
          << "G n H convex in X: " << yes_no(r.intersection_convex) << '\n'
          << "H projects to G n H: " << yes_no(r.h_projects) << '\n'
          << "G projects to G n H: " << yes_no(r.g_projects) << '\n'
          << "|X| = " << render(r.mag_x, opt.format) << '\n'
          << "|G| = " << render(r.mag_g, opt.format) << '\n'
          << "|H| = " << render(r.mag_h, opt.format) << '\n'
          << "|G n H| = " << render(r.mag_intersection, opt.format) << '\n'
          << summary << '\n';
    }
    return r.theorem_applies() && !r.identity_holds ? kExitFailure : kExitOk;
  });
}

int cmd_whitney(const std::string& specfile, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(specfile);
    if (!in) throw InputError("cannot open whitney spec '" + specfile + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw InputError("whitney spec '" + specfile + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("g") || !j.contains("h"))
      throw InputError("whitney spec needs \"g\", \"h\", \"g_plus\", \"g_minus\", \"h_plus\", \"h_minus\"");
    const TwistSpec spec{graph_from_json(j["g"]), json_index(j, "g_plus"), json_index(j, "g_minus"),
                         graph_from_json(j["h"]), json_index(j, "h_plus"), json_index(j, "h_minus")};
    const WhitneyReport r = check_whitney_twist(spec);
    const bool transform_ok = !r.adjacent || (r.sides_agree.value_or(false) && r.transform_is_weighting.value_or(false) &&
                                              r.transform_total_matches.value_or(false));

    if (opt.format == Format::Json) {
      nlohmann::json report{{"mag_x", to_json(r.mag_x)},
                            {"mag_y", to_json(r.mag_y)},
                            {"adjacent", r.adjacent},
                            {"equal", r.equal},
                            {"isomorphic", r.isomorphic},
                            {"x", to_edge_list(r.pair.x)},
                            {"y", to_edge_list(r.pair.y)}};
      if (r.adjacent)
        report["transform"] = {{"sides_agree", *r.sides_agree},
                               {"is_weighting", *r.transform_is_weighting},
                               {"total_matches", *r.transform_total_matches}};
      out << report.dump() << '\n';
    } else {
      out << "|X| = " << render(r.mag_x, opt.format) << '\n'
          << "|Y| = " << render(r.mag_y, opt.format) << '\n'
          << "gluing points adjacent: " << yes_no(r.adjacent) << '\n'
          << "magnitudes equal: " << yes_no(r.equal) << '\n'
          << "X isomorphic to Y: " << yes_no(r.isomorphic) << '\n';
      if (r.adjacent)
        out << "transform agrees from both sides: " << yes_no(*r.sides_agree) << '\n'
            << "transform satisfies the weighting equations of Y: " << yes_no(*r.transform_is_weighting) << '\n'
            << "transform total equals |X|: " << yes_no(*r.transform_total_matches) << '\n';
    }
    // Adjacent gluing points must give equal magnitudes; anything else is a failure.
    return r.adjacent && !(r.equal && transform_ok) ? kExitFailure : kExitOk;
  });
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::size_t failures = 0;
    std::size_t rows = 0;
    if (opt.format != Format::Json) out << "crit  status  identity | expected | actual\n";
    const bool ok = run_golden_suite([&](const GoldenRow& row) {
      ++rows;
      failures += row.pass ? 0 : 1;
      if (opt.format == Format::Json) {
        out << nlohmann::json{{"criterion", row.criterion},
                              {"identity", row.identity},
                              {"expected", row.expected},
                              {"actual", row.actual},
                              {"pass", row.pass}}
                   .dump()
            << '\n';
      } else {
        out << std::setw(4) << row.criterion << "  " << (row.pass ? "PASS  " : "FAIL  ") << "  " << row.identity
            << " | " << row.expected << " | " << row.actual << '\n'
            << std::flush;
      }
    });
    if (opt.format != Format::Json) out << rows - failures << '/' << rows << " identities hold\n";
    return ok ? kExitOk : kExitFailure;
  });
}

int cmd_batch(const std::string& input, const std::string& output, const Options& opt, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    std::ifstream in(input);
    if (!in) throw InputError("cannot read batch input '" + input + "'");
    std::ofstream sink(output);
    if (!sink) throw InputError("cannot write batch output '" + output + "'");
    const BatchSummary s = run_batch(in, sink, opt);
    sink.flush();
    if (!sink) throw std::runtime_error("failed writing '" + output + "'");
    out << s.jobs << " jobs: " << s.ok << " ok, " << s.errors << " errors\n";
    return kExitOk;
  });
}

}  // namespace graphmag::cli
