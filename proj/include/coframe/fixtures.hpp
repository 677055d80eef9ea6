#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "coframe/errors.hpp"
#include "coframe/fixtures_data.hpp"

namespace coframe {

inline std::string fixture_text(const std::string& name) {
  const auto& files = fixture_files();
  auto it = files.find(name);
  if (it == files.end()) throw Error("unknown fixture '" + name + "'");
  return it->second;
}

// Resolve a CLI input argument: an existing file path wins; otherwise the
// argument names an embedded fixture.
inline std::string resolve_input(const std::string& arg) {
  std::ifstream in(arg, std::ios::binary);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  const auto& files = fixture_files();
  auto it = files.find(arg);
  if (it != files.end()) return it->second;
  throw Error("cannot open '" + arg + "' (not a file or embedded fixture)");
}

}  // namespace coframe
