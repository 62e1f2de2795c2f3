#include "graphmag_cli/batch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <thread>
#include <vector>

#include "graphmag/errors.hpp"
#include "graphmag/serialize.hpp"
#include "graphmag_cli/dsl.hpp"

namespace graphmag::cli {

namespace {

nlohmann::json error_record(const nlohmann::json& id, std::size_t line_number, const std::string& message,
                            const std::string& raw) {
  return {{"id", id}, {"line", line_number}, {"error", message}, {"input", raw}};
}

Format job_format(const nlohmann::json& job) {
  if (!job.contains("format")) return Format::Json;
  if (!job["format"].is_string()) throw InputError("\"format\" must be a string");
  const auto f = parse_format(job["format"].get<std::string>());
  if (!f) throw InputError("unknown format '" + job["format"].get<std::string>() + "'");
  return *f;
}

std::size_t job_order(const nlohmann::json& job, const Options& opt) {
  if (!job.contains("order")) return opt.order;
  if (!job["order"].is_number_unsigned()) throw InputError("\"order\" must be a non-negative integer");
  return job["order"].get<std::size_t>();
}

std::vector<std::string> job_outputs(const nlohmann::json& job) {
  if (!job.contains("outputs")) return {"rational"};
  const auto& outputs = job["outputs"];
  if (!outputs.is_array() || outputs.empty()) throw InputError("\"outputs\" must be a non-empty array");
  std::vector<std::string> names;
  for (const auto& o : outputs) {
    if (!o.is_string()) throw InputError("output names must be strings");
    const std::string name = o.get<std::string>();
    if (name != "rational" && name != "series" && name != "weights")
      throw InputError("unknown output '" + name + "' (expected rational, series or weights)");
    names.push_back(name);
  }
  return names;
}

nlohmann::json render_json(const RationalFunction& f, Format format) {
  return format == Format::Json ? to_json(f) : nlohmann::json(render(f, format));
}

}  // namespace

nlohmann::json run_job(const std::string& line, std::size_t line_number, const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  nlohmann::json job;
  try {
    job = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    return error_record(nullptr, line_number, std::string("malformed JSON: ") + e.what(), line);
  }
  const nlohmann::json id = job.is_object() && job.contains("id") ? job["id"] : nlohmann::json(nullptr);
  try {
    if (!job.is_object()) throw InputError("job must be a JSON object");
    if (!job.contains("expr") || !job["expr"].is_string()) throw InputError("job needs an \"expr\" string");
    const Format format = job_format(job);
    const std::size_t order = job_order(job, opt);
    const std::vector<std::string> outputs = job_outputs(job);

    const Graph g = evaluate(*parse_expr(job["expr"].get<std::string>()));
    nlohmann::json results = nlohmann::json::object();
    for (const std::string& name : outputs) {
      if (name == "rational") {
        results["rational"] = render_json(magnitude_rational(g), format);
      } else if (name == "series") {
        const TruncatedSeries s = checked_series(g, order, opt.fast);
        results["series"] = format == Format::Json ? to_json(s) : nlohmann::json(render(s, format));
      } else {
        const Weighting w = weighting(g);
        if (format == Format::Json) {
          results["weights"] = weights_json(g, w);
        } else {
          nlohmann::json rows = nlohmann::json::array();
          for (const auto& weight : w.weights) rows.push_back(render(weight, format));
          results["weights"] = {{"weights", rows}, {"total", render(w.total(), format)}};
        }
      }
    }
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    return {{"id", id}, {"input", job}, {"outputs", results}, {"elapsed_ms", elapsed.count()}};
  } catch (const std::exception& e) {
    return error_record(id, line_number, e.what(), line);
  }
}

BatchSummary run_batch(std::istream& in, std::ostream& out, const Options& opt) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }

  std::vector<nlohmann::json> records(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) records[i] = run_job(lines[i], i + 1, opt);
  };
  const std::size_t threads = std::clamp<std::size_t>(opt.parallel, 1, std::max<std::size_t>(lines.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  BatchSummary summary;
  for (const auto& r : records) {
    ++summary.jobs;
    if (r.contains("error"))
      ++summary.errors;
    else
      ++summary.ok;
    out << r.dump() << '\n';
  }
  return summary;
}

}  // namespace graphmag::cli
