#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "json_io.hpp"
#include "qlimits/quantum.hpp"

using namespace qlimits;
using namespace qlimits::tools;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("qlimits_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Smoke {
  std::vector<std::string> args;
  std::set<int> allowed{kSuccess};
};

// Minimal arguments for every catalog command; suites are shrunk so the whole
// table runs in seconds.
std::map<std::string, Smoke> smoke_table(const TempDir& tmp) {
  std::map<std::string, Smoke> t;
  t["bound maxcut-noisy"] = {{"--p", "0.1"}};
  t["bound maxcut-depth"] = {{"--n", "1806336", "--D", "55", "--kind", "qaoa"}};
  t["bound approx-threshold"] = {{"--D", "55"}};
  t["bound chebyshev"] = {{"--C", "4", "--n", "9", "--lipschitz", "1", "--r", "12"}};
  t["bound transport-variance"] = {{"--C", "16", "--n", "4", "--kms1", "0.1", "--kms2", "0.2"}};
  t["bound transfer"] = {{"--d-alpha", "0.5", "--a", "0.4", "--n", "10"}};
  t["bound depol-tail"] = {{"--p", "0.1", "--L", "5", "--epsilon", "0.1", "--n", "20"}};
  t["bound advantage-depth"] = {{"--ac", "0.3", "--p", "0.1"}};
  t["bound anneal-time"] = {{"--n", "1e8"}};
  t["bound ghz-time"] = {{"--n", "1e6"}};
  t["bound lieb-robinson"] = {{"--t", "0.5", "--k0", "3"}};
  t["bound regular-graph"] = {{"--q", "0.45", "--D", "50", "--n", "100", "--epsilon", "0.001"}};
  t["bound mitigation"] = {{"--m", "3", "--r", "0.5", "--epsilon", "0.05", "--n", "20", "--d2",
                            "0.1,0.2,0.1"}};
  t["bound annealer-tail"] = {{"--q", "0.4", "--T", "5", "--epsilon", "0.1", "--n", "10"}};
  t["bound annealer-entropy"] = {{"--q", "0.4", "--T", "5", "--n", "3"}};
  t["bound purity"] = {{"--p", "0.1", "--L", "5", "--n", "20"}};
  t["bound purity-nonunital"] = {{"--d2", "1.0", "--q", "0.3", "--n", "10"}};
  t["bound poincare-continuous"] = {{"--t", "0.1", "--chain", "6"}};
  t["bound sdpi"] = {{"--q", "0.3", "--gamma", "0.4"}};
  t["bound qaoa-entropy"] = {{"--q", "0.45", "--contraction", "0.1"}};
  t["verify poincare"] = {{"--n", "4", "--depth", "2", "--circuits", "2", "--observables", "4",
                           "--pairs", "4"},
                          {kSuccess}};
  // Known to find violations in the default noise model; only the plumbing is
  // under test here.
  t["verify depolarizing-decay"] = {{"--cases", "4"}, {kSuccess, kVerificationFailed}};
  t["verify purity"] = {{"--n", "3", "--depth", "2"}, {kSuccess, kVerificationFailed}};
  t["verify transfer"] = {{"--triples", "5"}};
  t["verify w1"] = {{"--pairs", "5"}};
  t["verify w1-quantum"] = {{"--rho", tmp.file("rho.json"), "--sigma", tmp.file("sigma.json")}};
  t["verify annealer"] = {{"--T", "2"}};
  t["verify lieb-robinson"] = {{"--n", "5"}};
  t["verify symmetry"] = {{"--P", "1", "--points", "4"}, {kSuccess, kVerificationFailed}};
  t["figure qaoa-entropy"] = {{"--q", "0.45", "--contraction-grid", "0:0.1:0.05"}};
  return t;
}

void write_states(const TempDir& tmp) {
  Rng rng(5);
  std::ofstream(tmp.file("rho.json")) << state_to_json(random_density_matrix(qubits(2), rng)).dump();
  std::ofstream(tmp.file("sigma.json")) << state_to_json(random_density_matrix(qubits(2), rng)).dump();
}

std::vector<std::string> split(const std::string& command) {
  std::vector<std::string> out;
  std::stringstream ss(command);
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

TEST(Catalog, NonEmptyAndUnique) {
  auto app = make_application();
  ASSERT_FALSE(app.catalog.empty());
  std::set<std::string> commands, anchors;
  for (const auto& e : app.catalog) {
    EXPECT_TRUE(commands.insert(e.command).second) << e.command;
    EXPECT_TRUE(anchors.insert(e.anchor).second) << e.anchor;
    EXPECT_FALSE(e.summary.empty());
  }
}

TEST(Catalog, EveryCommandHasASmokeTest) {
  TempDir tmp;
  write_states(tmp);
  auto table = smoke_table(tmp);
  auto app = make_application();
  for (const auto& e : app.catalog) {
    SCOPED_TRACE(e.command);
    auto it = table.find(e.command);
    ASSERT_NE(it, table.end()) << "no smoke test for " << e.command;
    auto args = std::vector<std::string>{"--out", tmp.file("out")};
    for (auto& s : split(e.command)) args.push_back(s);
    args.insert(args.end(), it->second.args.begin(), it->second.args.end());
    int code = dispatch(args);
    EXPECT_TRUE(it->second.allowed.count(code)) << "exit code " << code;
    std::string text = slurp(tmp.file("out"));
    ASSERT_FALSE(text.empty());
    if (e.command.rfind("figure", 0) == 0) {
      EXPECT_EQ(text.substr(0, text.find('\n')),
                "q,contraction,entropy_density,threshold_density,below_threshold");
    } else {
      Json r = Json::parse(text);
      EXPECT_EQ(r["anchor"], e.anchor);
      EXPECT_TRUE(r.contains("library_version"));
      EXPECT_TRUE(r.contains("log_base"));
      EXPECT_TRUE(r.contains("inputs"));
    }
  }
  EXPECT_EQ(table.size(), app.catalog.size());
}

TEST(Cli, HeadlineNumber) {
  TempDir tmp;
  ASSERT_EQ(dispatch({"--out", tmp.file("r.json"), "bound", "maxcut-noisy", "--p", "0.1"}), kSuccess);
  Json r = Json::parse(slurp(tmp.file("r.json")));
  EXPECT_DOUBLE_EQ(r["values"]["n_max"].get<double>(), 805306368.0);
}

TEST(Cli, CsvFormat) {
  TempDir tmp;
  ASSERT_EQ(dispatch({"--out", tmp.file("r.csv"), "--format", "csv", "bound", "chebyshev", "--C", "4",
                      "--n", "9", "--lipschitz", "1", "--r", "12"}),
            kSuccess);
  std::string text = slurp(tmp.file("r.csv"));
  EXPECT_EQ(text.rfind("field,value\n", 0), 0u);
  EXPECT_NE(text.find("0.25"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(dispatch({"bound", "maxcut-noisy"}), kSchemaError);
  EXPECT_EQ(dispatch({"bound", "no-such-command"}), kSchemaError);
  EXPECT_EQ(dispatch({"bound", "chebyshev", "--C", "4", "--n", "9", "--lipschitz", "1", "--r", "0"}),
            kPreconditionViolated);
  TempDir tmp;
  EXPECT_EQ(dispatch({"--out", tmp.file("m.json"), "bound", "mitigation", "--m", "2", "--r", "0.1",
                      "--epsilon", "0.05", "--n", "10", "--d2", "5,5"}),
            kPreconditionViolated);
  EXPECT_EQ(dispatch({"figure", "qaoa-entropy", "--contraction-grid", "0:bad:1"}), kSchemaError);
}

TEST(Cli, DeterministicReports) {
  TempDir tmp;
  const std::vector<std::string> cmd{"verify", "transfer", "--triples", "10"};
  for (const char* name : {"a.json", "b.json"}) {
    std::vector<std::string> args{"--seed", "42", "--out", tmp.file(name)};
    args.insert(args.end(), cmd.begin(), cmd.end());
    ASSERT_EQ(dispatch(args), kSuccess);
  }
  Json a = Json::parse(slurp(tmp.file("a.json"))), b = Json::parse(slurp(tmp.file("b.json")));
  EXPECT_TRUE(a.contains("timestamp"));
  EXPECT_EQ(without_timestamp(a).dump(), without_timestamp(b).dump());
}

TEST(Job, ArgumentsAndPointers) {
  Json ok = Json::parse(R"({"command": "bound depol-tail", "seed": 3, "format": "csv",
                             "parameters": {"p": 0.1, "L": 5, "epsilon": 0.1, "n": 20}})");
  auto args = job_arguments(ok);
  EXPECT_EQ(args[0], "--seed");
  EXPECT_NE(std::find(args.begin(), args.end(), "depol-tail"), args.end());
  auto expect_pointer = [](const char* text, const std::string& pointer) {
    try {
      job_arguments(Json::parse(text));
      ADD_FAILURE() << "no error for " << text;
    } catch (const SchemaError& e) {
      EXPECT_EQ(std::string(e.what()).rfind(pointer, 0), 0u) << e.what();
    }
  };
  expect_pointer(R"({"parameters": {}})", "/command");
  expect_pointer(R"({"command": "bound nothing"})", "/command");
  expect_pointer(R"({"command": "bound depol-tail", "parameters": {"bogus": 1}})",
                 "/parameters/bogus");
  expect_pointer(R"({"command": "bound depol-tail", "parameters": {"p": {"x": 1}}})",
                 "/parameters/p");
  expect_pointer(R"({"command": "bound depol-tail", "seed": -1})", "/seed");
  expect_pointer(R"({"command": "bound depol-tail", "format": "xml"})", "/format");
  expect_pointer(R"({"command": "bound depol-tail", "extra": 1})", "/extra");
}

TEST(Job, RunExecutesConfig) {
  TempDir tmp;
  Json job{{"command", "bound advantage-depth"},
           {"out", tmp.file("job.json")},
           {"parameters", {{"ac", 0.5}, {"p", 0.1}}}};
  std::ofstream(tmp.file("job_config.json")) << job.dump();
  ASSERT_EQ(dispatch({"run", "--config", tmp.file("job_config.json")}), kSuccess);
  Json r = Json::parse(slurp(tmp.file("job.json")));
  EXPECT_NEAR(r["values"]["depth"].get<double>(), std::log(2.0) / 0.2, 1e-12);
  std::ofstream(tmp.file("broken.json")) << "{ not json";
  EXPECT_EQ(dispatch({"run", "--config", tmp.file("broken.json")}), kSchemaError);
}

TEST(JsonIo, RoundTrips) {
  Rng rng(9);
  auto rho = random_density_matrix(qubits(2), rng);
  auto back = state_from_json(state_to_json(rho));
  EXPECT_LE((back.matrix() - rho.matrix()).norm(), 1e-15);
  Graph g = cycle_graph(5);
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  EXPECT_THROW(matrix_from_json(Json::parse("[[1, 2], [3]]")), SchemaError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 5]]})")), std::exception);
}

TEST(Grid, Parsing) {
  auto g = parse_grid("0:0.5:0.01");
  ASSERT_EQ(g.size(), 51u);
  EXPECT_DOUBLE_EQ(g.front(), 0.0);
  EXPECT_NEAR(g.back(), 0.5, 1e-15);
  EXPECT_THROW(parse_grid("1:0:0.1"), SchemaError);
  EXPECT_THROW(parse_grid("0:1"), SchemaError);
  EXPECT_EQ(kFigureBeta.size(), 17u);
}
