#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "report.hpp"

namespace qlimits::tools {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kSchemaError = 2,
  kPreconditionViolated = 3,
  kConvergenceFailure = 4,
};

struct GlobalOptions {
  std::uint64_t seed = 7;
  std::string out;
  std::string format = "json";
};

struct CatalogEntry {
  std::string command;  // e.g. "bound maxcut-noisy"
  std::string anchor;
  std::string summary;
};

// Filled in by whichever leaf command ran.
struct Outcome {
  std::vector<BoundReport> reports;
  std::string csv;  // figure output
  int exit_code = kSuccess;
};

struct Application {
  std::unique_ptr<CLI::App> app;
  std::shared_ptr<GlobalOptions> globals;
  std::shared_ptr<Outcome> outcome;
  std::vector<CatalogEntry> catalog;
};

Application make_application();

// Parses and executes one invocation; writes reports to --out or stdout.
// Returns the process exit code.
int dispatch(const std::vector<std::string>& args);

// Translates a job config into command-line arguments. Throws SchemaError
// naming the offending JSON pointer.
std::vector<std::string> job_arguments(const Json& config);

// Entropy density bound vs per-layer contraction, one curve per q.
std::string qaoa_entropy_csv(const std::vector<double>& beta, const std::vector<double>& qs,
                             const std::vector<double>& contractions, int degree);

std::vector<double> parse_grid(const std::string& spec);

extern const std::vector<double> kFigureBeta;

}  // namespace qlimits::tools
