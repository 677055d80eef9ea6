#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "coframe/rational.hpp"

namespace coframe {

inline constexpr int kReportSchemaVersion = 1;

// Uniform command result. `data` carries the structured payload; `lines`
// the human-readable body. Both renderings draw their numbers from the same
// source. Timing is collected for diagnostics but excluded from renderings
// so identical inputs produce byte-identical output.
struct RunReport {
  std::string command;
  std::map<std::string, std::string> inputDigests;
  bool pass = true;
  int exitCode = 0;
  nlohmann::json data = nlohmann::json::object();
  std::vector<std::string> lines;
  double elapsedSeconds = 0.0;
};

inline std::string render_text(const RunReport& r) {
  std::string out = "command: " + r.command + "\n";
  for (const auto& [name, digest] : r.inputDigests)
    out += "input: " + name + " digest=" + digest + "\n";
  for (const auto& l : r.lines) out += l + "\n";
  out += std::string("verdict: ") + (r.pass ? "pass" : "fail") + "\n";
  return out;
}

inline std::string render_structured(const RunReport& r) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = r.command;
  j["inputs"] = r.inputDigests;
  j["pass"] = r.pass;
  j["data"] = r.data;
  return j.dump(2) + "\n";
}

}  // namespace coframe
