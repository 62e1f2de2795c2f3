#include "graphmag_cli/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "graphmag/families.hpp"
#include "graphmag/serialize.hpp"
#include "graphmag_cli/batch.hpp"

namespace graphmag::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "graphmag");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("graphmag_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CmdMag, PlainOutput) {
  EXPECT_EQ(cli({"mag", "W"}).out, "6/(1+4q)\n");
  EXPECT_EQ(cli({"mag", "E5"}).out, "5\n");
  EXPECT_EQ(cli({"mag", "K2*K3"}).out, "6/(1+3q+2q^2)\n");
  EXPECT_EQ(cli({"mag", "glue(C3, 0 1, C3, 0 1)"}).out, "(4-2q)/(1+2q-q^2)\n");
}

TEST(CmdMag, LatexOutput) {
  EXPECT_EQ(cli({"mag", "K2*K3", "--format", "latex"}).out, "\\frac{6}{1 + 3q + 2q^{2}}\n");
  EXPECT_EQ(cli({"--format", "latex", "mag", "glue(C3, 0 1, C3, 0 1)"}).out, "\\frac{4 - 2q}{1 + 2q - q^{2}}\n");
  EXPECT_EQ(cli({"mag", "E3", "--format", "latex"}).out, "3\n");
}

TEST(CmdMag, JsonRoundTrip) {
  for (const char* expr : {"W", "petersen", "glue(C3, 0 1, C3, 0 1)", "E0", "K2*K3 + C5"}) {
    const Outcome r = cli({"mag", expr, "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const RationalFunction f = rational_function_from_json(j);
    EXPECT_EQ(f.to_string() + "\n", cli({"mag", expr}).out);
    EXPECT_EQ(to_json(f), j);
  }
}

TEST(CmdMag, EdgeListFileArgument) {
  TempDir dir;
  const std::string path = dir.write("tail.txt", "# triangle with a tail\nn 4\n0 1\n0 2\n1 2\n0 3\n");
  EXPECT_EQ(cli({"mag", path}).out, cli({"mag", "join(C3, K2)"}).out);
}

TEST(CmdMag, Errors) {
  Outcome r = cli({"mag", "K2 + * K3"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("byte 5"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(cli({"mag", "K0"}).code, kExitUsage);
  EXPECT_EQ(cli({"mag"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"mag", "W", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(CmdSeries, Examples) {
  EXPECT_EQ(cli({"series", "petersen", "--order", "4"}).out, "10 -30 30 90 -450\n");
  EXPECT_EQ(cli({"series", "K1", "--order", "3"}).out, "1 0 0 0\n");
  EXPECT_EQ(cli({"series", "P3", "--order", "3"}).out, "3 -4 4 -4\n");
  EXPECT_EQ(cli({"series", "P3", "--order", "3", "--fast"}).out, "3 -4 4 -4\n");
  EXPECT_EQ(cli({"series", "P3", "--order", "2", "--format", "latex"}).out, "3 - 4q + 4q^{2} + O(q^{3})\n");
  EXPECT_EQ(lines(cli({"series", "K2"}).out).front().size(), std::string("2 -2 2 -2 2 -2 2 -2 2 -2 2 -2 2 -2 2 -2 2").size());
  EXPECT_EQ(cli({"series", "P3", "--order", "-1"}).code, kExitUsage);
}

TEST(CmdSeries, JsonRoundTrip) {
  const Outcome r = cli({"series", "petersen", "--order", "6", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  const TruncatedSeries s = truncated_series_from_json(j);
  EXPECT_EQ(s.order(), 6u);
  EXPECT_EQ(s, magnitude_series_oracle(family::petersen(), 6));
  EXPECT_EQ(to_json(s), j);
}

TEST(CmdWeights, Examples) {
  EXPECT_EQ(cli({"weights", "K3"}).out, "0\t0\t1/(1+2q)\n1\t1\t1/(1+2q)\n2\t2\t1/(1+2q)\ntotal\t3/(1+2q)\n");
  EXPECT_EQ(cli({"weights", "E2"}).out, "0\t0\t1\n1\t1\t1\ntotal\t2\n");
  const auto p3 = lines(cli({"weights", "P3"}).out);
  ASSERT_EQ(p3.size(), 4u);
  EXPECT_EQ(p3[0], "0\t0\t1/(1+q)");
  EXPECT_EQ(p3[1], "1\t1\t(1-q)/(1+q)");
  EXPECT_EQ(p3[2], "2\t2\t1/(1+q)");
  EXPECT_EQ(p3[3], "total\t(3-q)/(1+q)");

  const auto j = nlohmann::json::parse(cli({"weights", "P3", "--format", "json"}).out);
  EXPECT_EQ(j["weights"].size(), 3u);
  EXPECT_EQ(rational_function_from_json(j["total"]).to_string(), "(3-q)/(1+q)");
}

TEST(CmdWeights, FileLabels) {
  TempDir dir;
  const std::string path = dir.write("p2.txt", "n 2\n0 1\n");
  EXPECT_EQ(lines(cli({"weights", path}).out).size(), 3u);
}

const std::string kHouseB = "glue(C3, 0 1, C4, 0 1)";

TEST(CmdCheckIe, Houses) {
  const Outcome x = cli({"check-ie", "glue(" + kHouseB + ", 1 3, C3, 0 1)", "--g", "1,3,5", "--h", "0,1,2,3,4"});
  EXPECT_EQ(x.code, kExitOk);
  EXPECT_EQ(lines(x.out).back(), "theorem applies; identity holds");
  const Outcome y = cli({"check-ie", "glue(" + kHouseB + ", 3 4, C3, 0 1)", "--g", "3,4,5", "--h", "0,1,2,3,4"});
  EXPECT_EQ(y.code, kExitOk);
  EXPECT_EQ(lines(y.out).back(), "hypotheses fail; identity fails");
}

TEST(CmdCheckIe, TwoTrianglesAndTrees) {
  const Outcome t = cli({"check-ie", "glue(C3, 0 1, C3, 0 1)", "--g", "0,1,2;0-1,0-2,1-2", "--h", "0,1,3"});
  EXPECT_EQ(lines(t.out).back(), "hypotheses fail; identity fails");
  const Outcome tree = cli({"check-ie", "join(P4, 1, P3, 1)", "--g", "0,1,2,3", "--h", "1,4,5"});
  EXPECT_EQ(lines(tree.out).back(), "theorem applies; identity holds");
  const auto j = nlohmann::json::parse(
      cli({"check-ie", "P5", "--g", "0,1,2", "--h", "2,3,4", "--format", "json"}).out);
  EXPECT_TRUE(j["identity_holds"].get<bool>());
  EXPECT_TRUE(j["theorem_applies"].get<bool>());
}

TEST(CmdCheckIe, BadSelections) {
  EXPECT_EQ(cli({"check-ie", "P5", "--g", "0,9", "--h", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"check-ie", "P5", "--g", "0,x", "--h", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"check-ie", "P5", "--g", "0,1;0-2", "--h", "1"}).code, kExitUsage);
  EXPECT_EQ(cli({"check-ie", "P5", "--g", "0,1"}).code, kExitUsage);
}

TEST(CmdWhitney, Reports) {
  TempDir dir;
  const std::string tail = R"({"n": 4, "edges": [[0,1],[0,2],[1,2],[0,3]]})";
  const std::string houses =
      dir.write("houses.json", R"({"g": )" + tail + R"(, "g_plus": 1, "g_minus": 3, "h": )" + tail +
                                   R"(, "h_plus": 1, "h_minus": 3})");
  Outcome r = cli({"whitney", houses});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("gluing points adjacent: no"), std::string::npos);
  EXPECT_NE(r.out.find("magnitudes equal: no"), std::string::npos);

  const std::string edge =
      dir.write("edge.json", R"({"g": "C3", "g_plus": 0, "g_minus": 1, "h": "KB 2 3", "h_plus": 0, "h_minus": 2})");
  r = cli({"whitney", edge, "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["adjacent"].get<bool>());
  EXPECT_TRUE(j["equal"].get<bool>());
  EXPECT_TRUE(j["transform"]["is_weighting"].get<bool>());
  EXPECT_EQ(rational_function_from_json(j["mag_x"]), rational_function_from_json(j["mag_y"]));

  const std::string path =
      dir.write("path.json", R"({"g": "P3", "g_plus": 0, "g_minus": 2, "h": "P3", "h_plus": 0, "h_minus": 2})");
  r = cli({"whitney", path});
  EXPECT_NE(r.out.find("magnitudes equal: yes"), std::string::npos);
  EXPECT_NE(r.out.find("X isomorphic to Y: yes"), std::string::npos);
}

TEST(CmdWhitney, MalformedSpecs) {
  TempDir dir;
  EXPECT_EQ(cli({"whitney", dir.write("a.json", "{not json")}).code, kExitUsage);
  EXPECT_EQ(cli({"whitney", dir.write("b.json", R"({"g": "C3", "h": "C3"})")}).code, kExitUsage);
  EXPECT_EQ(cli({"whitney", dir.write("c.json", R"({"g": "C3", "g_plus": 0, "g_minus": 0, "h": "C3", "h_plus": 0, "h_minus": 1})")}).code,
            kExitUsage);
  EXPECT_EQ(cli({"whitney", dir.path("missing.json")}).code, kExitUsage);
}

TEST(CmdBatch, ThreeJobs) {
  TempDir dir;
  const std::string in = dir.write("in.jsonl",
                                   R"({"id": "a", "expr": "W"})"
                                   "\n"
                                   R"({"id": 2, "expr": "petersen", "outputs": ["series"], "order": 4})"
                                   "\n"
                                   R"({"id": "c", "expr": "P3", "outputs": ["rational", "weights"], "format": "plain"})"
                                   "\n");
  const Outcome r = cli({"batch", in, dir.path("out.jsonl")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "3 jobs: 3 ok, 0 errors\n");
  const auto out = lines(read_file(dir.path("out.jsonl")));
  ASSERT_EQ(out.size(), 3u);
  const auto a = nlohmann::json::parse(out[0]);
  EXPECT_EQ(a["id"], "a");
  EXPECT_EQ(rational_function_from_json(a["outputs"]["rational"]).to_string(), "6/(1+4q)");
  EXPECT_TRUE(a["elapsed_ms"].is_number());
  EXPECT_EQ(a["input"]["expr"], "W");
  const auto b = nlohmann::json::parse(out[1]);
  EXPECT_EQ(b["id"], 2);
  EXPECT_EQ(truncated_series_from_json(b["outputs"]["series"]), TruncatedSeries(4, {10, -30, 30, 90, -450}));
  const auto c = nlohmann::json::parse(out[2]);
  EXPECT_EQ(c["outputs"]["rational"], "(3-q)/(1+q)");
  EXPECT_EQ(c["outputs"]["weights"]["weights"][1], "(1-q)/(1+q)");
}

TEST(CmdBatch, MalformedLinesBecomeErrorRecords) {
  Options opt;
  std::istringstream in(R"({"id": 1, "expr": "K2"})"
                        "\n"
                        "{oops\n"
                        R"({"id": 3, "expr": "K2 +"})"
                        "\n"
                        "\n"
                        R"({"id": 5, "expr": "K2", "outputs": ["volume"]})"
                        "\n"
                        R"({"id": 6, "expr": "C4"})"
                        "\n");
  std::ostringstream out;
  const BatchSummary s = run_batch(in, out, opt);
  EXPECT_EQ(s.jobs, 6u);
  EXPECT_EQ(s.ok, 2u);
  EXPECT_EQ(s.errors, 4u);
  const auto records = lines(out.str());
  ASSERT_EQ(records.size(), 6u);
  const auto bad = nlohmann::json::parse(records[1]);
  EXPECT_TRUE(bad["id"].is_null());
  EXPECT_EQ(bad["line"], 2);
  EXPECT_EQ(bad["input"], "{oops");
  const auto parse_error = nlohmann::json::parse(records[2]);
  EXPECT_EQ(parse_error["id"], 3);
  EXPECT_NE(parse_error["error"].get<std::string>().find("byte 4"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(records[5])["id"], 6);
}

TEST(CmdBatch, EmptyInput) {
  TempDir dir;
  const Outcome r = cli({"batch", dir.write("empty.jsonl", ""), dir.path("out.jsonl")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(read_file(dir.path("out.jsonl")), "");
  EXPECT_EQ(cli({"batch", dir.path("missing.jsonl"), dir.path("out2.jsonl")}).code, kExitUsage);
}

TEST(CmdBatch, HundredJobsInParallelKeepOrder) {
  TempDir dir;
  const std::vector<std::string> exprs{"K3", "C5", "petersen", "P4 * K2", "W", "KB 2 4", "E3 + K2"};
  std::string input;
  for (int i = 0; i < 100; ++i)
    input += nlohmann::json{{"id", i}, {"expr", exprs[static_cast<std::size_t>(i) % exprs.size()]}}.dump() + "\n";
  const std::string in = dir.write("jobs.jsonl", input);
  const Outcome r = cli({"batch", in, dir.path("out.jsonl"), "--parallel", "4"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto out = lines(read_file(dir.path("out.jsonl")));
  ASSERT_EQ(out.size(), 100u);
  for (int i = 0; i < 100; ++i) {
    const auto rec = nlohmann::json::parse(out[static_cast<std::size_t>(i)]);
    EXPECT_EQ(rec["id"], i);
    const std::string expected = cli({"mag", exprs[static_cast<std::size_t>(i) % exprs.size()]}).out;
    EXPECT_EQ(rational_function_from_json(rec["outputs"]["rational"]).to_string() + "\n", expected);
  }
}

}  // namespace
}  // namespace graphmag::cli
