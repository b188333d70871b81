#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qlimits::tools {

using Json = nlohmann::ordered_json;

// Malformed configs, files or flags; maps to exit code 2.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

struct BoundReport {
  BoundReport() = default;
  BoundReport(std::string id, std::string anchor_name, Json echo)
      : bound_id(std::move(id)), anchor(std::move(anchor_name)), inputs(std::move(echo)) {}

  std::string bound_id;
  std::string anchor;
  Json inputs = Json::object();
  Json values = Json::object();
  std::string log_base = "none";
  bool vacuous = false;
  std::optional<bool> passed;

  // Every field plus library_version and timestamp.
  Json to_json() const;
};

// Removes the timestamp so two runs can be compared byte for byte.
Json without_timestamp(Json report);

void write_report(std::ostream& out, const BoundReport& report, Format format);
std::string to_csv(const BoundReport& report);

}  // namespace qlimits::tools
