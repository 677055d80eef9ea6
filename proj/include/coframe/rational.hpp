#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "coframe/errors.hpp"

namespace coframe {

// Exact arbitrary-precision rational; mpq_class keeps the canonical form
// (positive denominator, reduced, 0/1 for zero).
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// Literal syntax: optional sign, integer, optional "/" positive integer.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  if (i == s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw Error("malformed rational literal '" + s + "'");
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i < s.size()) {
    if (s[i] != '/') throw Error("malformed rational literal '" + s + "'");
    ++i;
    if (i == s.size()) throw Error("malformed rational literal '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j])))
        throw Error("malformed rational literal '" + s + "'");
  }
  // mpq_set_str rejects a leading '+', so strip it here
  Rat r(s[0] == '+' ? s.substr(1) : s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// 64-bit FNV-1a, used for input digests in reports.
inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace coframe
