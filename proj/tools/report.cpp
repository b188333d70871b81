#include "report.hpp"

#include <ctime>
#include <sstream>

#include "qlimits/config.hpp"

namespace qlimits::tools {

namespace {

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const std::string& prefix, const Json& v, std::ostream& out) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(prefix + "." + k, child, out);
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "." + std::to_string(i), v[i], out);
  } else {
    std::string text = scalar_text(v);
    if (text.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      text = quoted + "\"";
    }
    out << prefix << ',' << text << '\n';
  }
}

}  // namespace

Json BoundReport::to_json() const {
  Json j;
  j["bound_id"] = bound_id;
  j["anchor"] = anchor;
  j["inputs"] = inputs;
  j["values"] = values;
  j["log_base"] = log_base;
  j["vacuous"] = vacuous;
  j["passed"] = passed ? Json(*passed) : Json(nullptr);
  j["library_version"] = kVersion;
  j["timestamp"] = utc_timestamp();
  return j;
}

Json without_timestamp(Json report) {
  report.erase("timestamp");
  return report;
}

std::string to_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "field,value\n";
  Json j = report.to_json();
  for (const auto& [k, v] : j.items()) flatten(k, v, out);
  return out.str();
}

void write_report(std::ostream& out, const BoundReport& report, Format format) {
  if (format == Format::csv)
    out << to_csv(report);
  else
    out << report.to_json().dump(2) << '\n';
}

}  // namespace qlimits::tools
